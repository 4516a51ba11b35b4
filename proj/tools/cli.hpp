#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermatch::cli {

/// Runs one command line (without the program name). Results go to `out` as
/// JSON, or as hypergraph text for `gen`. Returns 0 on success, 1 on a domain
/// error (with {"error", "detail"} JSON on `out`) and 2 on a usage error
/// (diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermatch::cli
