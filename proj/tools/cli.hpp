#pragma once

#include <iosfwd>

namespace qcalc {

/// Entry point of the qcalc command line: `verify` and `eval`.
/// Exit codes: 0 pass, 1 verification failure or pole, 2 usage or config
/// error, 3 numeric non-convergence.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcalc
