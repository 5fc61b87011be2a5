#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p24::cli {

// Exit codes: 0 ok, 1 verification mismatch, 2 usage or cutoff violation,
// 3 resource or precision exhaustion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p24::cli
