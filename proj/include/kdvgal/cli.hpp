#ifndef KDVGAL_CLI_HPP
#define KDVGAL_CLI_HPP

#include <iosfwd>

namespace kdvgal {

// Exit codes: 0 success (all checks pass), 1 a check failed, 2 usage or
// configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdvgal

#endif
