#pragma once

#include <ostream>

namespace sgc {

// Full command-line driver, streams injected for in-process testing.
// Returns the process exit code: 0 success, 1 usage/parse error, 2
// verification failure or budget refusal, 3 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgc
