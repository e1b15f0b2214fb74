#include "knapcrack/rng.hpp"

#include <stdexcept>

namespace knapcrack {

BigInt Rng::uniform_bits(std::size_t bits) {
    if (bits == 0) return 0;
    const std::size_t words = (bits + 63) / 64;
    BigInt acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        acc |= BigInt(static_cast<unsigned long>(next_u64()));
    }
    acc >>= words * 64 - bits;
    return acc;
}

BigInt Rng::uniform_below(const BigInt& bound) {
    if (bound < 1) throw std::invalid_argument("uniform_below: bound must be >= 1");
    const std::size_t k = bit_length(bound - 1);
    if (k == 0) return 0;
    for (;;) {
        BigInt v = uniform_bits(k);
        if (v < bound) return v;
    }
}

BigInt Rng::uniform_range1(const BigInt& bound) {
    return uniform_below(bound) + 1;
}

}  // namespace knapcrack
