// cli.hpp -- command dispatch, factored out of main for testability
#ifndef PFA_CLI_HPP
#define PFA_CLI_HPP

#include <ostream>

namespace pfa {

// Exit codes: 0 success, 1 domain error, 2 bad command line.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace pfa

#endif
