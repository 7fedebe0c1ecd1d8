// Self-contained oracle battery: re-derives key quantities by independent
// routes (commutant elimination, exhaustive subspace search, exhaustive
// enumeration) and checks the library against them.  Used by the CLI's
// verify-oracles subcommand.
#pragma once

#include <iosfwd>

namespace topgen::oracles {

// Runs the suite, printing one pass/fail line per property to `out`.
// Returns true when everything passes.  quick trims the sample sizes.
bool run_suite(std::ostream& out, bool quick = false);

} // namespace topgen::oracles
