#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codeal {

/// Exit codes: 0 success, 1 validation/parse error, 2 enumeration cap
/// exceeded, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace codeal
