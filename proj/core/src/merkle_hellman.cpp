#include "knapcrack/merkle_hellman.hpp"

#include <stdexcept>

namespace knapcrack {

MhPrivateKey make_mh_private_key(SuperincreasingSequence b, BigInt p, BigInt w) {
    if (p <= b.sum()) {
        throw std::invalid_argument("make_mh_private_key: p must exceed the sequence sum");
    }
    if (w < 1 || w >= p) {
        throw std::invalid_argument("make_mh_private_key: w must lie in [1, p)");
    }
    auto w_inv = invert_mod(w, p);
    if (!w_inv) {
        throw std::invalid_argument("make_mh_private_key: w must be a unit mod p");
    }
    return MhPrivateKey{std::move(b), std::move(p), std::move(w), std::move(*w_inv)};
}

PublicKnapsack derive_public(const MhPrivateKey& priv) {
    PublicKnapsack pub;
    pub.a.reserve(priv.b.size());
    for (const BigInt& bi : priv.b.elements()) {
        pub.a.push_back(mod_nonneg(bi * priv.w, priv.p));
    }
    return pub;
}

std::pair<MhPrivateKey, PublicKnapsack> mh_keygen(std::size_t n, unsigned gap_bits, Rng& rng) {
    SuperincreasingSequence b = gen_superincreasing(n, gap_bits, rng);
    const BigInt& sum = b.sum();
    BigInt p = sum + rng.uniform_range1(sum);
    BigInt w;
    do {
        w = rng.uniform_range1(p - 1);
    } while (gcd(w, p) != 1);
    MhPrivateKey priv = make_mh_private_key(std::move(b), std::move(p), std::move(w));
    PublicKnapsack pub = derive_public(priv);
    return {std::move(priv), std::move(pub)};
}

BigInt mh_encrypt(const PublicKnapsack& pub, const BitVector& m) {
    if (m.size() != pub.a.size()) {
        throw std::invalid_argument("mh_encrypt: message length must match key size");
    }
    BigInt c = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 1) throw std::invalid_argument("mh_encrypt: message entries must be 0 or 1");
        if (m[i]) c += pub.a[i];
    }
    return c;
}

std::optional<BitVector> mh_decrypt(const MhPrivateKey& priv, const BigInt& c) {
    if (c < 0) throw std::invalid_argument("mh_decrypt: ciphertext must be non-negative");
    BigInt d = mod_nonneg(c * priv.w_inv, priv.p);
    return solve_superincreasing(priv.b, d);
}

}  // namespace knapcrack
