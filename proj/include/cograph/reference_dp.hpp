#pragma once

#include "cograph/cotree.hpp"
#include "cograph/triple.hpp"

namespace cograph {

/// Feasible set computed directly on triple grids: for each node the
/// frontier pairs of the children are combined with derive_union /
/// derive_join, then closed upward and under the exchange moves
/// (p,q,r) -> (p+1,q-1,r), (p,q+1,r-1), (p+1,q,r-1).
///
/// Children are evaluated over the region p <= P, p+q <= P+Q, p+r <= P+R,
/// which contains every child triple a join can draw on. Slow; kept as an
/// independent route to the deletion-table kernel for testing.
TripleSet reference_feasible_set(const Cotree& t, Box box);

}  // namespace cograph
