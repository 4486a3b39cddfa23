#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rscap::cli {

/// Dispatch one command line. Exit codes: 0 success (including a NoSolution
/// answer), 2 domain/config error or malformed flags, 3 a verified lemma was
/// violated, 4 numerical-resolution failure.
///
/// Config precedence: flags > RSCAP_* environment variables > defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rscap::cli
