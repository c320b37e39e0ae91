#pragma once

// Command-line front door: parse a function spec, run the analyses, emit
// machine-readable JSON/CSV reports.

#include <string>
#include <vector>

#include "anore/json_io.hpp"

namespace anore {

inline constexpr const char* kToolVersion = "0.1.0";

// Compact h expressions: "y", "y^3", "z(z-1)^2", "2.5", "poly:1,0,-2",
// products of such factors.  Everything else goes through --spec JSON.
FunctionModel parse_h_expression(const std::string& text);

// Entry point used by the binary and by the tests; argv[0] is the tool name.
// Exit codes: 0 all contracts met, 1 contract failure, 2 usage/input error.
int run_cli(const std::vector<std::string>& args);

}  // namespace anore
