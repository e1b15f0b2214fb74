#pragma once

#include "knapcrack/bigint.hpp"
#include "knapcrack/bits.hpp"
#include "knapcrack/rng.hpp"
#include "knapcrack/subset_sum.hpp"
#include "knapcrack/superincreasing.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace knapcrack {

struct MhPrivateKey {
    SuperincreasingSequence b;
    BigInt p;      // modulus, > sum of b
    BigInt w;      // multiplier, unit mod p
    BigInt w_inv;  // w^-1 mod p
};

struct PublicKnapsack {
    std::vector<BigInt> a;  // a[i] = b[i] * w mod p
};

/*
 * Assembles a key from explicit components, validating p > sum(b),
 * 1 <= w < p and gcd(w, p) = 1.  This is also how tests force known keys.
 */
MhPrivateKey make_mh_private_key(SuperincreasingSequence b, BigInt p, BigInt w);

PublicKnapsack derive_public(const MhPrivateKey& priv);

/*
 * Full key generation.  Draw order is fixed: the n sequence gaps first,
 * then p = sum(b) + uniform[1, sum(b)], then w rejection-sampled uniformly
 * from [1, p-1] until it is a unit mod p.
 */
std::pair<MhPrivateKey, PublicKnapsack> mh_keygen(std::size_t n, unsigned gap_bits, Rng& rng);

/* Subset sum of the public values selected by m; m must have length n. */
BigInt mh_encrypt(const PublicKnapsack& pub, const BitVector& m);

/* Undoes the modular mask and solves the easy knapsack. */
std::optional<BitVector> mh_decrypt(const MhPrivateKey& priv, const BigInt& c);

}  // namespace knapcrack
