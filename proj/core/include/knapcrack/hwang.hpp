#pragma once

#include "knapcrack/bigint.hpp"
#include "knapcrack/bits.hpp"
#include "knapcrack/factoradic.hpp"
#include "knapcrack/merkle_hellman.hpp"
#include "knapcrack/rng.hpp"
#include "knapcrack/superincreasing.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace knapcrack::hwang {

/*
 * Shape of a permutation-combination knapsack instance: the n = s*g key
 * elements split into s subsets of size g, and each ciphertext block
 * selects the first c elements of every permuted subset, giving blocks of
 * s*c message bits.
 */
struct Params {
    std::size_t subsets = 0;      // s
    std::size_t subset_size = 0;  // g
    std::size_t select = 0;       // c
    unsigned gap_bits = 20;

    std::size_t n() const { return subsets * subset_size; }
    std::size_t block_len() const { return subsets * select; }
    void validate() const;

    /* s=8, g=170, c=128: 1360-element keys and 1024-bit blocks. */
    static Params published_scale() { return Params{8, 170, 128, 20}; }
};

struct PrivateKey {
    SuperincreasingSequence b;
    BigInt p;
    BigInt w;
    BigInt w_inv;
    Params params;
};

struct PublicKey {
    std::vector<BigInt> a;
    Params params;
};

/*
 * Wire form of an encrypted message: the public permutation index d_prime
 * (absent for schemes that do not permute), one subset-sum integer per
 * block, and the exact bit length of the original message.
 */
struct Envelope {
    std::optional<BigInt> d_prime;
    std::vector<BigInt> blocks;
    std::uint64_t msg_bit_len = 0;
};

/* A permuted selection out of a key vector, with 0-based source positions. */
struct WorkingKnapsack {
    std::vector<BigInt> values;
    std::vector<std::size_t> positions;
};

/* Same draw order as mh_keygen, with n = s*g elements. */
std::pair<PrivateKey, PublicKey> keygen(const Params& params, Rng& rng);

/*
 * Message digest fixed for interoperability: the 1024-bit value is
 * SHA-256(M || be32(0)) || ... || SHA-256(M || be32(3)) read as a
 * big-endian integer, reduced mod g!.
 */
BigInt digest_to_dprime(std::span<const std::uint8_t> message, std::size_t g);

/*
 * Applies the factorial digits of d_prime to every g-element subset of
 * key_vector (the same digits for each) and concatenates the first-c
 * selections.  Positions are global indices into key_vector, so sender
 * and receiver derive identical maps from their respective vectors.
 */
WorkingKnapsack derive_working_knapsack(std::span<const BigInt> key_vector,
                                        const BigInt& d_prime, const Params& params);

/* Rejects empty messages; blocks are MSB-first, the last one zero-padded. */
Envelope encrypt(const PublicKey& pub, std::span<const std::uint8_t> message);

/*
 * Recomputes the working selection from d_prime and solves each block.
 * Any unsolvable block yields failure; no partial plaintext escapes.
 */
std::optional<Bytes> decrypt(const PrivateKey& priv, const Envelope& env);

}  // namespace knapcrack::hwang
