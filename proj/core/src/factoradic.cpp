#include "knapcrack/factoradic.hpp"

#include <stdexcept>

namespace knapcrack::factoradic {

FactorialDigits to_factorial_digits(const BigInt& m, std::size_t g) {
    if (g == 0) throw std::invalid_argument("to_factorial_digits: g must be >= 1");
    if (m < 0) throw std::out_of_range("to_factorial_digits: m must be non-negative");
    if (m >= factorial(static_cast<unsigned long>(g))) {
        throw std::out_of_range("to_factorial_digits: m must be < g!");
    }
    FactorialDigits out;
    out.digits.resize(g);
    BigInt rest = m;
    for (std::size_t j = 0; j < g; ++j) {
        BigInt weight = factorial(static_cast<unsigned long>(g - 1 - j));
        BigInt d = rest / weight;
        rest -= d * weight;
        out.digits[j] = static_cast<unsigned>(d.get_ui());
    }
    return out;
}

BigInt from_factorial_digits(const FactorialDigits& digits) {
    const std::size_t g = digits.g();
    if (g == 0) throw std::invalid_argument("from_factorial_digits: g must be >= 1");
    BigInt m = 0;
    for (std::size_t j = 0; j < g; ++j) {
        if (digits.digits[j] > g - 1 - j) {
            throw std::invalid_argument("from_factorial_digits: digit exceeds its radix");
        }
        m += BigInt(digits.digits[j]) * factorial(static_cast<unsigned long>(g - 1 - j));
    }
    return m;
}

std::vector<std::size_t> decode_permutation(const FactorialDigits& digits) {
    const std::size_t g = digits.g();
    std::vector<std::size_t> remaining;
    remaining.reserve(g);
    for (std::size_t i = 0; i < g; ++i) remaining.push_back(i);
    std::vector<std::size_t> perm;
    perm.reserve(g);
    for (std::size_t j = 0; j < g; ++j) {
        const unsigned d = digits.digits[j];
        if (d >= remaining.size()) {
            throw std::invalid_argument("decode_permutation: digit exceeds its radix");
        }
        perm.push_back(remaining[d]);
        remaining.erase(remaining.begin() + d);
    }
    return perm;
}

SelectionMap apply_selection(std::span<const BigInt> vec, const FactorialDigits& digits,
                             std::size_t take) {
    if (vec.size() != digits.g()) {
        throw std::invalid_argument("apply_selection: vector length must equal g");
    }
    if (take == 0 || take > vec.size()) {
        throw std::invalid_argument("apply_selection: take must lie in [1, g]");
    }
    const std::vector<std::size_t> perm = decode_permutation(digits);
    SelectionMap out;
    out.source_size = vec.size();
    out.values.reserve(take);
    out.positions.reserve(take);
    for (std::size_t j = 0; j < take; ++j) {
        out.positions.push_back(perm[j]);
        out.values.push_back(vec[perm[j]]);
    }
    return out;
}

}  // namespace knapcrack::factoradic
