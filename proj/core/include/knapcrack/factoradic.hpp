#pragma once

#include "knapcrack/bigint.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace knapcrack::factoradic {

/*
 * Factorial-base representation of a value m < g!.  Digit j (1-based) has
 * weight (g-j)! and satisfies 0 <= d_j <= g-j, so the final digit is
 * always 0 and the map from [0, g!) is a bijection.
 */
struct FactorialDigits {
    std::vector<unsigned> digits;
    std::size_t g() const { return digits.size(); }
};

FactorialDigits to_factorial_digits(const BigInt& m, std::size_t g);

BigInt from_factorial_digits(const FactorialDigits& digits);

/*
 * Lehmer-code decoding: digit d_j picks the (d_j+1)-th smallest position
 * still unused.  Returns the permutation as 0-based source positions; an
 * all-zero digit string decodes to the identity.
 */
std::vector<std::size_t> decode_permutation(const FactorialDigits& digits);

struct SelectionMap {
    std::vector<BigInt> values;            // selected values, permuted order
    std::vector<std::size_t> positions;    // 0-based source positions
    std::size_t source_size = 0;
};

/*
 * Permutes vec by the decoded permutation and keeps the first `take`
 * entries together with their source positions.
 */
SelectionMap apply_selection(std::span<const BigInt> vec, const FactorialDigits& digits,
                             std::size_t take);

}  // namespace knapcrack::factoradic
