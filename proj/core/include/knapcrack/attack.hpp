#pragma once

#include "knapcrack/bigint.hpp"
#include "knapcrack/bits.hpp"
#include "knapcrack/hwang.hpp"
#include "knapcrack/lattice.hpp"
#include "knapcrack/merkle_hellman.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace knapcrack::attack {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Config {
    std::size_t t = 5;           // public elements fed to the lattice, 3..min(n, 12)
    BigInt lambda_scale = 1;     // weight of the first (denominator) coordinate
    std::size_t max_candidates = 16;
    BigRat delta = BigRat(99, 100);
};

/*
 * Per-column weights for the diophantine-approximation basis.  Column 1
 * carries the candidate denominator k1 (weighted by lambda_scale); column
 * i in [2, t] carries a_i*k1 - a_1*k_i, which for the true multipliers is
 * bounded by 2*b_i < p / 2^(n-i-1).  Scaling column i by
 * sigma_i = 2^(n-i-1) equalizes those tolerances against k1 < a_1, which
 * is what makes the true combination the shortest vector; unweighted
 * columns leave it exponentially longer than the reduced rows once n
 * grows past the teens.  n is the full public key length, not t.
 */
std::vector<BigInt> column_weights(std::size_t n, std::size_t t);

/*
 * Basis rows: row 1 = (lambda, sigma_2*a_2, ..., sigma_t*a_t) and row i =
 * -sigma_i*a_1 in column i (zero elsewhere), so the combination
 * k1*row1 + sum k_i*row_i = (lambda*k1, sigma_2*(a_2*k1 - a_1*k_2), ...).
 */
lattice::IntegerBasis build_sda_lattice(std::span<const BigInt> a, const Config& cfg);

/*
 * First coordinates of the reduced rows, divided by lambda_scale and
 * taken by absolute value: the k1 candidates, deduplicated in row order.
 */
std::vector<BigInt> extract_candidates(const lattice::ReductionResult& red, const Config& cfg);

struct RecoveredKey {
    BigInt u_prime;               // candidate k1 reduced mod p_prime
    BigInt p_prime;               // a_1
    std::vector<BigInt> b_prime;  // a_i * u_prime mod p_prime, all i
    bool superincreasing_when_sorted = false;
};

struct KeyRecovery {
    std::vector<BigInt> candidates;
    std::optional<RecoveredKey> key;   // absent only when no candidate was extracted
    std::size_t accepted_index = npos;
};

/*
 * Runs the lattice, then tests candidates in order: the first whose
 * residue vector sorts superincreasing wins.  b_prime[0] is structurally
 * zero (a_1 * u mod a_1), so "sorted superincreasing" tolerates exactly
 * one zero entry at the bottom.  When no candidate is exact, the one
 * satisfying the most sorted prefix constraints is returned, flagged.
 */
KeyRecovery recover_key(std::span<const BigInt> a, const Config& cfg);

/*
 * Solves one subset-sum with a recovered key.  Zero residues carry no
 * information through the easy knapsack, so their bits are settled by a
 * brute-force match of the leftover against their public values, and the
 * whole selection is verified by exact re-encryption before anything is
 * returned.
 */
std::optional<BitVector> decrypt_with_recovered(const RecoveredKey& key,
                                                std::span<const BigInt> public_values,
                                                std::span<const BigInt> recovered_values,
                                                const BigInt& ciphertext);

struct MhAttackResult {
    KeyRecovery recovery;
    std::vector<std::optional<BitVector>> plaintexts;  // one slot per ciphertext
};

MhAttackResult attack_mh(std::span<const BigInt> a, std::span<const BigInt> ciphertexts,
                         const Config& cfg);

struct HwangAttackResult {
    KeyRecovery recovery;
    std::optional<Bytes> message;
    std::size_t blocks_failed = 0;
};

/* Eavesdropper's view: public key plus envelope, never the private key. */
HwangAttackResult attack_hwang(const hwang::PublicKey& pub, const hwang::Envelope& env,
                               const Config& cfg);

/*
 * Known-key diagnosis of the lattice target: the true multipliers
 * k_i = (a_i * w_inv - b_i) / p must be integers in [0, a_i), satisfy
 * |a_i*k_1 - a_1*k_i| < 2*b_i for i >= 2, and the keygen's density bound
 * b_i < p / 2^(n-i) is checked per instance rather than assumed.
 */
struct TrapdoorMultipliers {
    std::vector<BigInt> k;
    bool exact_division = false;
    bool in_range = false;
    bool eq_bound = false;
    bool density_bound = false;
};

TrapdoorMultipliers true_multipliers(const MhPrivateKey& priv, std::span<const BigInt> a);

}  // namespace knapcrack::attack
