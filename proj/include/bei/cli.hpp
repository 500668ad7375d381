#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace bei::cli {

/// Runs one command line (without the program name).  Errors are written to
/// `err` as {"error": code, "message": text}; the return value is the exit
/// status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bei::cli
