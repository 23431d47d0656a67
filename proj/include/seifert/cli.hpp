#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seifert::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Runs one invocation.  args excludes the program name; `in` is read when the
/// input is not given as an argument.
int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace seifert::cli
