#include "cremona/report.hpp"

namespace cremona {

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a:") + buf;
}

Json json_of(const Rational& q) { return rational_to_string(q); }

Json json_of(const Polynomial& p) { return p.to_string(); }

Json json_of(const ProjectiveMap& f) {
    Json comps = Json::array();
    for (const auto& c : f.components()) comps.push_back(c.to_string());
    return Json{{"ambient_n", f.ambient_n()}, {"degree", f.degree()}, {"components", comps}};
}

Json json_of(const AffinePolyMap& psi) {
    Json comps = Json::array();
    for (const auto& c : psi.components) comps.push_back(c.to_string());
    return Json{{"dim", psi.dim}, {"components", comps}};
}

Json json_of(const ProjectivePoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(rational_to_string(c));
    return coords;
}

Json json_of(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(std::to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.size()}, {"rows", rows}};
}

Json json_of(const IntVec& v) {
    Json out = Json::array();
    for (long long x : v) out.push_back(std::to_string(x));
    return out;
}

Json json_of(const LeadingPair& lp) {
    return Json{{"x0_degree", lp.x0_deg}, {"residual", json_of(lp.residual)}};
}

Json json_of(const LatticePolytope& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        Json vert = Json::array();
        for (long long c : v) vert.push_back(std::to_string(c));
        verts.push_back(std::move(vert));
    }
    return Json{{"dim", p.dim()}, {"vertices", verts}};
}

Json json_of(const NewtonBody& body) {
    Json out = json_of(body.hull);
    out["scale"] = std::to_string(body.scale);
    return out;
}

Json json_of(const GroupWord& w) { return w.to_string(); }

Json make_report(const std::string& command, Json arguments, const std::string& input_digest,
                 Json result) {
    return Json{{"command", command},
                {"arguments", std::move(arguments)},
                {"input_digest", input_digest},
                {"result", std::move(result)},
                {"status", "ok"}};
}

Json make_error_report(const std::string& command, Json arguments,
                       const std::string& input_digest, const std::string& kind,
                       const std::string& message) {
    return Json{{"command", command},
                {"arguments", std::move(arguments)},
                {"input_digest", input_digest},
                {"error", Json{{"kind", kind}, {"message", message}}},
                {"status", "error"}};
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace cremona
