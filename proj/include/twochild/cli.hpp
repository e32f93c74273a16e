#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twochild::cli {

/// Runs one command line (without the program name). Writes results to out
/// and diagnostics to err; a query argument of "-" is read from in when
/// provided. Returns 0 on success, 1 on a domain error or a failed
/// verification, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream* in = nullptr);

}  // namespace twochild::cli
