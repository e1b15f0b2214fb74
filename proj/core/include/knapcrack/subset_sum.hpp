#pragma once

#include "knapcrack/bigint.hpp"
#include "knapcrack/bits.hpp"
#include "knapcrack/superincreasing.hpp"

#include <optional>
#include <span>
#include <vector>

namespace knapcrack {

/*
 * Greedy solver for superincreasing knapsacks, scanning from the largest
 * element down.  Returns the selection vector, or nothing when the target
 * is not representable.
 */
std::optional<BitVector> solve_superincreasing(const SuperincreasingSequence& seq,
                                               const BigInt& target);

/*
 * Greedy solver for a knapsack whose values arrive in arbitrary order (a
 * permuted selection out of a superincreasing sequence).  The values,
 * sorted ascending, must be strictly superincreasing and positive; the
 * returned bits line up with the input order.
 */
std::optional<BitVector> solve_selected_multiset(std::span<const BigInt> values,
                                                 const BigInt& target);

/*
 * Exhaustive reference solver.  Returns every selection vector that hits
 * the target, in lexicographic order.  Refuses more than 24 values.
 */
std::vector<BitVector> brute_force_subset_sum(std::span<const BigInt> values,
                                              const BigInt& target);

}  // namespace knapcrack
