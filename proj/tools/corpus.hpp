#pragma once

#include <string>

#include "cremona/report.hpp"

namespace cremona::cli {

/// Runs the built-in witness suite: every constructed family together with
/// the identities it is supposed to satisfy.  Entries run independently
/// (optionally on several workers) and are reported in lexicographic name
/// order, so the document is identical for any worker count.
Json run_corpus(int jobs);

/// True when every entry passed.
bool corpus_passed(const Json& corpus_result);

/// Digest of the built-in suite description (stamped into reports).
std::string corpus_digest();

/// Writes the witness map files to a directory (one file per map-backed
/// entry) and returns the file names written.
std::vector<std::string> emit_corpus_files(const std::string& directory);

/// Cross-checks bundled map files in `directory` against the built-ins;
/// returns one entry-shaped Json per file.
Json validate_corpus_files(const std::string& directory);

}  // namespace cremona::cli
