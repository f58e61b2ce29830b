#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro {

// Exit codes: 0 ok, 1 usage/parse failure, 2 capacity, 3 validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitValidation = 3;

// Dispatches one gyro command line (argv without the program name).
// All output is byte-deterministic for fixed inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyro
