#include "knapcrack/subset_sum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knapcrack {

std::optional<BitVector> solve_superincreasing(const SuperincreasingSequence& seq,
                                               const BigInt& target) {
    const auto& b = seq.elements();
    BitVector bits(b.size(), 0);
    BigInt remaining = target;
    for (std::size_t i = b.size(); i-- > 0;) {
        if (b[i] <= remaining) {
            bits[i] = 1;
            remaining -= b[i];
        }
    }
    if (remaining != 0) return std::nullopt;
    return bits;
}

std::optional<BitVector> solve_selected_multiset(std::span<const BigInt> values,
                                                 const BigInt& target) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

    std::vector<BigInt> sorted;
    sorted.reserve(values.size());
    for (std::size_t idx : order) sorted.push_back(values[idx]);
    if (!is_superincreasing(sorted)) {
        throw std::invalid_argument(
            "solve_selected_multiset: values sorted ascending must be superincreasing");
    }

    BitVector bits(values.size(), 0);
    BigInt remaining = target;
    for (std::size_t i = order.size(); i-- > 0;) {
        const std::size_t idx = order[i];
        if (values[idx] <= remaining) {
            bits[idx] = 1;
            remaining -= values[idx];
        }
    }
    if (remaining != 0) return std::nullopt;
    return bits;
}

std::vector<BitVector> brute_force_subset_sum(std::span<const BigInt> values,
                                              const BigInt& target) {
    const std::size_t n = values.size();
    if (n > 24) throw std::invalid_argument("brute_force_subset_sum: refusing more than 24 values");
    std::vector<BitVector> solutions;
    // Position 0 maps to the top mask bit so that ascending masks enumerate
    // selection vectors in lexicographic order.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> (n - 1 - i)) & 1u) sum += values[i];
        }
        if (sum == target) {
            BitVector bits(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                bits[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
            }
            solutions.push_back(std::move(bits));
        }
    }
    return solutions;
}

}  // namespace knapcrack
