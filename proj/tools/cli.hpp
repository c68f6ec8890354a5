#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcrs::cli {

// Exit codes: 0 solved / true, 1 NO / false / infeasible / unsupported,
// 2 bad input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tcrs::cli
