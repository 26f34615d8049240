#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace purify {

/// Entry point of the `purify` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on any diagnostic, 2 on property failures.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace purify
