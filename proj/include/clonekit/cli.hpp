#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clonekit {

// Exit codes: 0 success, 1 negative decision, 2 input error, 3 resource cap.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_resource = 3;

/// Batch front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clonekit
