#ifndef HIVELR_CLI_HPP_
#define HIVELR_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace hivelr::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 a computed check failed (engines or classifier disagree, a witness does
// not verify), 2 usage or input error.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace hivelr::cli

#endif  // HIVELR_CLI_HPP_
