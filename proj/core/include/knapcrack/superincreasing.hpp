#pragma once

#include "knapcrack/bigint.hpp"
#include "knapcrack/rng.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace knapcrack {

/*
 * True when values[0] >= 1 and every later element strictly exceeds the sum
 * of all elements before it.  An empty span is vacuously superincreasing.
 */
bool is_superincreasing(std::span<const BigInt> values);

/* A validated superincreasing sequence; empty sequences are rejected. */
class SuperincreasingSequence {
public:
    explicit SuperincreasingSequence(std::vector<BigInt> elements);

    const std::vector<BigInt>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const BigInt& sum() const { return sum_; }

private:
    std::vector<BigInt> elements_;
    BigInt sum_;
};

/*
 * Builds an n-element superincreasing sequence: each element is the sum of
 * all previous ones plus a fresh uniform gap from [1, 2^gap_bits].
 */
SuperincreasingSequence gen_superincreasing(std::size_t n, unsigned gap_bits, Rng& rng);

}  // namespace knapcrack
