#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stepup {

// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_property_fail = 1;
inline constexpr int exit_usage = 2;

// Runs the command line `args` (without the program name). Verifiers print
// their certificate to `out`. Producers print the produced object to `out`
// and the certificate to `err`, or with --out write the object to a file
// and the certificate to `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace stepup
