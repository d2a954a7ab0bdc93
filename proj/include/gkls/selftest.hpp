#ifndef GKLS_SELFTEST_HPP
#define GKLS_SELFTEST_HPP

#include <ostream>

namespace gkls {

/// Runs the cross-module invariant suite and prints one line per check.
/// Returns true when everything passes.
bool run_selftest(std::ostream& out);

}  // namespace gkls

#endif
