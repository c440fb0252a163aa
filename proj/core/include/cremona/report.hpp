#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

#include "cremona/leading.hpp"
#include "cremona/newton.hpp"
#include "cremona/projective.hpp"
#include "cremona/words.hpp"

namespace cremona {

using Json = nlohmann::json;  // objects keep sorted keys; dumps are stable

/// FNV-1a over raw bytes; the digest stamped into reports.
std::string fnv1a_digest(std::string_view bytes);

// Serialization of the domain values used by reports: big numbers as
// decimal strings, tuples and matrices as arrays (row-major).
Json json_of(const Rational& q);
Json json_of(const Polynomial& p);
Json json_of(const ProjectiveMap& f);
Json json_of(const AffinePolyMap& psi);
Json json_of(const ProjectivePoint& p);
Json json_of(const IntMatrix& m);
Json json_of(const IntVec& v);
Json json_of(const LeadingPair& lp);
Json json_of(const LatticePolytope& p);
Json json_of(const NewtonBody& body);
Json json_of(const GroupWord& w);

/// Top-level report document: command echo, input digest, payload, status.
/// Rendering is byte-deterministic for identical inputs.
Json make_report(const std::string& command, Json arguments, const std::string& input_digest,
                 Json result);

Json make_error_report(const std::string& command, Json arguments,
                       const std::string& input_digest, const std::string& kind,
                       const std::string& message);

std::string render_report(const Json& report);

}  // namespace cremona
