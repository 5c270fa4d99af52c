#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidkit {

// Exit codes: 0 success, 2 input error, 3 overflow or resource cap hit.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOverflow = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidkit
