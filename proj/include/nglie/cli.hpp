#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nglie {

/// Command dispatch; returns the process exit code.
/// 0 success/pass, 1 verification failure, 2 spec violation,
/// 3 usage or parse error, 4 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nglie
