#pragma once

#include "tcrs/temporal.hpp"

#include <cstddef>

namespace tcrs {

// Temporally connected graph on vertices "1".."n" with 2n - 4 edges for
// n >= 4 (n = 1, 2, 3 use 0, 1 and 3 edges).
//
// For n >= 4: chain 1 - 2 - ... - (n-4) at times 1..n-5, then (n-4) - (n-2)
// at n-4; the gadget (n-2)-(n-3) at n-3, n-(n-1) at n-2, (n-2)-(n-1) at n-1,
// (n-3)-n at n; finally (n-3) calls back down the chain, (n-3)-(n-4-i) at
// n+1+i.
TemporalGraph gossip_graph(std::size_t n);

} // namespace tcrs
