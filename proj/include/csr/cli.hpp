#pragma once

#include <ostream>

namespace csr {

// Exit codes: 0 success or all checks passed, 1 a failed check or a
// negative verdict, 2 usage, syntax or input errors.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace csr
