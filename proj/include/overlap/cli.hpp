#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace overlap {

/// Dispatches `overlap-chain <decide|certify|verify|oracle|generate|bench>`.
/// `args` excludes the program name. Exit code 0 for YES/accepted/success,
/// 1 for NO/rejected, 2 for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overlap
