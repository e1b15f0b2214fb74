#pragma once

#include "knapcrack/bigint.hpp"

#include <cstdint>
#include <random>

namespace knapcrack {

/*
 * Deterministic random stream backing every randomized operation.
 *
 * The stream is MT19937-64 seeded directly with the 64-bit seed.  Large
 * values are derived from raw 64-bit outputs only (never through
 * std::uniform_int_distribution, whose mapping is unspecified), so any
 * faithful MT19937-64 implementation reproduces the same values:
 *
 *   uniform_bits(k):  draw ceil(k/64) outputs, fold them big-endian (the
 *                     first output is most significant), then shift right
 *                     by 64*ceil(k/64) - k.  k = 0 draws nothing.
 *   uniform_below(m): k = bit_length(m - 1); if k = 0 the result is 0 and
 *                     nothing is drawn; otherwise uniform_bits(k) is
 *                     rejection-sampled until the value is < m.
 *   uniform_range1(m) = uniform_below(m) + 1, uniform on [1, m].
 *
 * Reference values (independent reimplementation): seed 42 produces the
 * raw outputs 13930160852258120406, 11788048577503494824,
 * 13874630024467741450, and from a fresh seed-42 stream
 * uniform_bits(100) = 957273364615489838351117777819.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    BigInt uniform_bits(std::size_t bits);
    BigInt uniform_below(const BigInt& bound);   // uniform on [0, bound), bound >= 1
    BigInt uniform_range1(const BigInt& bound);  // uniform on [1, bound], bound >= 1

private:
    std::mt19937_64 engine_;
};

}  // namespace knapcrack
