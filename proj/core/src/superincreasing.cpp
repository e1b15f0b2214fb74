#include "knapcrack/superincreasing.hpp"

#include <stdexcept>
#include <utility>

namespace knapcrack {

bool is_superincreasing(std::span<const BigInt> values) {
    BigInt prefix = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0 && values[i] < 1) return false;
        if (i > 0 && values[i] <= prefix) return false;
        prefix += values[i];
    }
    return true;
}

SuperincreasingSequence::SuperincreasingSequence(std::vector<BigInt> elements)
    : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("SuperincreasingSequence: sequence must be non-empty");
    }
    if (!is_superincreasing(elements_)) {
        throw std::invalid_argument(
            "SuperincreasingSequence: each element must exceed the sum of its predecessors");
    }
    sum_ = 0;
    for (const BigInt& e : elements_) sum_ += e;
}

SuperincreasingSequence gen_superincreasing(std::size_t n, unsigned gap_bits, Rng& rng) {
    if (n == 0) throw std::invalid_argument("gen_superincreasing: n must be >= 1");
    if (gap_bits == 0) throw std::invalid_argument("gen_superincreasing: gap_bits must be >= 1");
    const BigInt gap_bound = pow2(gap_bits);
    std::vector<BigInt> elements;
    elements.reserve(n);
    BigInt prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt e = prefix + rng.uniform_range1(gap_bound);
        prefix += e;
        elements.push_back(std::move(e));
    }
    return SuperincreasingSequence(std::move(elements));
}

}  // namespace knapcrack
