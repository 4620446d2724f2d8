#pragma once

#include <cstddef>
#include <vector>

#include "obg/fin_struct.hpp"

namespace obg {

/// All isomorphism classes of ordered 2-colored bipartite graphs with exactly
/// n points, one representative each, at canonical positions 1/1 .. n/1.
///
/// Since the order is total, the order-preserving bijection between two
/// same-size structures is unique, so distinct (color sequence, edge set)
/// patterns are exactly the isomorphism classes. Labeled enumeration is
/// therefore already duplicate-free; tests re-check that claim by exhaustive
/// pattern matching.
///
/// Throws BudgetExceeded when the class count would exceed `cap`.
std::vector<FinStruct> enumerate_structures(std::size_t n, std::size_t cap = 100000);

/// Classes of every size in 1..n (0 yields just the empty structure's list).
std::vector<FinStruct> enumerate_up_to(std::size_t n, std::size_t cap = 100000);

/// Class count for size n without materializing: sum over r of C(n,r)*2^(r*(n-r)).
std::size_t count_structures(std::size_t n);

} // namespace obg
