#include "knapcrack/attack.hpp"

#include "knapcrack/subset_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace knapcrack::attack {

namespace {

void validate_config(std::size_t n, const Config& cfg) {
    if (cfg.t < 3) throw std::invalid_argument("attack config: t must be >= 3");
    if (cfg.t > n) throw std::invalid_argument("attack config: t must not exceed the key length");
    if (cfg.t > 12) throw std::invalid_argument("attack config: t must be <= 12");
    if (cfg.lambda_scale < 1) throw std::invalid_argument("attack config: lambda_scale must be >= 1");
    if (cfg.max_candidates < 1) {
        throw std::invalid_argument("attack config: max_candidates must be >= 1");
    }
}

/*
 * Sorted-prefix score: after sorting ascending, counts positions (beyond
 * the first) whose value strictly exceeds the sum of everything before.
 * A perfect score of size-1 is the sorted-superincreasing acceptance
 * test; it admits at most one zero, which sits at position 0.
 */
std::size_t sorted_prefix_score(std::vector<BigInt> values) {
    std::sort(values.begin(), values.end());
    std::size_t score = 0;
    BigInt prefix = values.empty() ? BigInt(0) : values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > prefix) ++score;
        prefix += values[i];
    }
    return score;
}

std::vector<BigInt> residue_vector(std::span<const BigInt> a, const BigInt& u,
                                   const BigInt& p_prime) {
    std::vector<BigInt> b_prime;
    b_prime.reserve(a.size());
    for (const BigInt& ai : a) b_prime.push_back(mod_nonneg(ai * u, p_prime));
    return b_prime;
}

}  // namespace

std::vector<BigInt> column_weights(std::size_t n, std::size_t t) {
    std::vector<BigInt> w(t);
    w[0] = 1;
    for (std::size_t j = 1; j < t; ++j) {
        // Column j holds element index i = j+1 (1-based); its tolerance
        // in the true combination is p / 2^(n-i-1).
        const std::size_t i = j + 1;
        w[j] = (n > i + 1) ? pow2(n - i - 1) : BigInt(1);
    }
    return w;
}

lattice::IntegerBasis build_sda_lattice(std::span<const BigInt> a, const Config& cfg) {
    validate_config(a.size(), cfg);
    const std::size_t t = cfg.t;
    for (std::size_t i = 0; i < t; ++i) {
        if (a[i] <= 0) throw std::invalid_argument("build_sda_lattice: public elements must be > 0");
    }
    const std::vector<BigInt> sigma = column_weights(a.size(), t);
    lattice::IntegerBasis basis;
    basis.rows.assign(t, std::vector<BigInt>(t, BigInt(0)));
    basis.rows[0][0] = cfg.lambda_scale;
    for (std::size_t j = 1; j < t; ++j) {
        basis.rows[0][j] = sigma[j] * a[j];
        basis.rows[j][j] = -(sigma[j] * a[0]);
    }
    return basis;
}

std::vector<BigInt> extract_candidates(const lattice::ReductionResult& red, const Config& cfg) {
    std::vector<BigInt> candidates;
    const std::size_t limit = std::min(red.reduced.rows.size(), cfg.max_candidates);
    for (std::size_t r = 0; r < limit; ++r) {
        const BigInt& first = red.reduced.rows[r][0];
        if (first == 0) continue;
        if (!mpz_divisible_p(first.get_mpz_t(), cfg.lambda_scale.get_mpz_t())) continue;
        BigInt cand = abs(first) / cfg.lambda_scale;
        if (std::find(candidates.begin(), candidates.end(), cand) == candidates.end()) {
            candidates.push_back(std::move(cand));
        }
    }
    return candidates;
}

KeyRecovery recover_key(std::span<const BigInt> a, const Config& cfg) {
    const lattice::IntegerBasis basis = build_sda_lattice(a, cfg);
    const lattice::ReductionResult red = lattice::lll_reduce(basis, cfg.delta);

    KeyRecovery out;
    out.candidates = extract_candidates(red, cfg);
    if (out.candidates.empty()) return out;

    const BigInt p_prime = a[0];
    const std::size_t exact_score = a.size() - 1;
    std::size_t best_index = npos;
    std::size_t best_score = 0;
    for (std::size_t idx = 0; idx < out.candidates.size(); ++idx) {
        const BigInt u = (p_prime > 1) ? mod_nonneg(out.candidates[idx], p_prime) : BigInt(0);
        std::vector<BigInt> b_prime = residue_vector(a, u, p_prime > 1 ? p_prime : BigInt(1));
        const std::size_t score = sorted_prefix_score(b_prime);
        if (score == exact_score) {
            out.key = RecoveredKey{u, p_prime, std::move(b_prime), true};
            out.accepted_index = idx;
            return out;
        }
        if (best_index == npos || score > best_score) {
            best_index = idx;
            best_score = score;
        }
    }
    const BigInt u = (p_prime > 1) ? mod_nonneg(out.candidates[best_index], p_prime) : BigInt(0);
    out.key = RecoveredKey{u, p_prime, residue_vector(a, u, p_prime > 1 ? p_prime : BigInt(1)),
                           false};
    out.accepted_index = best_index;
    return out;
}

std::optional<BitVector> decrypt_with_recovered(const RecoveredKey& key,
                                                std::span<const BigInt> public_values,
                                                std::span<const BigInt> recovered_values,
                                                const BigInt& ciphertext) {
    if (public_values.size() != recovered_values.size()) {
        throw std::invalid_argument("decrypt_with_recovered: value spans must align");
    }
    if (ciphertext < 0 || key.p_prime <= 1) return std::nullopt;

    std::vector<std::size_t> zero_idx;
    std::vector<std::size_t> nonzero_idx;
    std::vector<BigInt> nonzero_values;
    for (std::size_t i = 0; i < recovered_values.size(); ++i) {
        if (recovered_values[i] == 0) {
            zero_idx.push_back(i);
        } else {
            nonzero_idx.push_back(i);
            nonzero_values.push_back(recovered_values[i]);
        }
    }
    // An honest recovered key has at most the structural zero at index 0;
    // more zeros than the reference solver can absorb means a bad key.
    if (zero_idx.size() > 24) return std::nullopt;

    {
        std::vector<BigInt> sorted = nonzero_values;
        std::sort(sorted.begin(), sorted.end());
        if (!is_superincreasing(sorted)) return std::nullopt;
    }

    const BigInt target = mod_nonneg(ciphertext * key.u_prime, key.p_prime);
    std::optional<BitVector> partial;
    try {
        partial = solve_selected_multiset(nonzero_values, target);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (!partial) return std::nullopt;

    BitVector bits(recovered_values.size(), 0);
    BigInt residual = ciphertext;
    for (std::size_t j = 0; j < nonzero_idx.size(); ++j) {
        bits[nonzero_idx[j]] = (*partial)[j];
        if ((*partial)[j]) residual -= public_values[nonzero_idx[j]];
    }
    if (residual < 0) return std::nullopt;

    std::vector<BigInt> zero_pub;
    zero_pub.reserve(zero_idx.size());
    for (std::size_t i : zero_idx) zero_pub.push_back(public_values[i]);
    const auto completions = brute_force_subset_sum(zero_pub, residual);
    if (completions.size() != 1) return std::nullopt;
    for (std::size_t j = 0; j < zero_idx.size(); ++j) bits[zero_idx[j]] = completions[0][j];

    // Re-encryption check: the exact integer identity, not a modular one.
    BigInt check = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) check += public_values[i];
    }
    if (check != ciphertext) return std::nullopt;
    return bits;
}

MhAttackResult attack_mh(std::span<const BigInt> a, std::span<const BigInt> ciphertexts,
                         const Config& cfg) {
    MhAttackResult result;
    result.recovery = recover_key(a, cfg);
    result.plaintexts.assign(ciphertexts.size(), std::nullopt);
    if (!result.recovery.key) return result;
    const RecoveredKey& key = *result.recovery.key;
    for (std::size_t i = 0; i < ciphertexts.size(); ++i) {
        result.plaintexts[i] = decrypt_with_recovered(key, a, key.b_prime, ciphertexts[i]);
    }
    return result;
}

HwangAttackResult attack_hwang(const hwang::PublicKey& pub, const hwang::Envelope& env,
                               const Config& cfg) {
    pub.params.validate();
    if (!env.d_prime) throw std::invalid_argument("attack_hwang: envelope lacks d_prime");
    if (env.msg_bit_len == 0) throw std::invalid_argument("attack_hwang: empty message envelope");
    const std::size_t block_len = pub.params.block_len();
    const std::size_t expected_blocks = (env.msg_bit_len + block_len - 1) / block_len;
    if (env.blocks.size() != expected_blocks) {
        throw std::invalid_argument("attack_hwang: block count does not match message length");
    }

    HwangAttackResult result;
    result.recovery = recover_key(pub.a, cfg);
    if (!result.recovery.key) {
        result.blocks_failed = env.blocks.size();
        return result;
    }
    const RecoveredKey& key = *result.recovery.key;

    const auto working_pub = hwang::derive_working_knapsack(pub.a, *env.d_prime, pub.params);
    const auto working_rec =
        hwang::derive_working_knapsack(key.b_prime, *env.d_prime, pub.params);

    BitVector bits;
    bits.reserve(env.blocks.size() * block_len);
    for (const BigInt& c : env.blocks) {
        auto solved = decrypt_with_recovered(key, working_pub.values, working_rec.values, c);
        if (!solved) {
            ++result.blocks_failed;
            continue;
        }
        bits.insert(bits.end(), solved->begin(), solved->end());
    }
    if (result.blocks_failed == 0) {
        bits.resize(env.msg_bit_len);
        result.message = bits_to_bytes(bits);
    }
    return result;
}

TrapdoorMultipliers true_multipliers(const MhPrivateKey& priv, std::span<const BigInt> a) {
    const auto& b = priv.b.elements();
    if (a.size() != b.size()) {
        throw std::invalid_argument("true_multipliers: public and private lengths must match");
    }
    const std::size_t n = b.size();
    TrapdoorMultipliers out;
    out.exact_division = true;
    out.in_range = true;
    out.eq_bound = true;
    out.density_bound = true;
    out.k.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt num = a[i] * priv.w_inv - b[i];
        if (!mpz_divisible_p(num.get_mpz_t(), priv.p.get_mpz_t())) {
            out.exact_division = false;
            out.k.push_back(0);
            continue;
        }
        BigInt k = num / priv.p;
        if (k < 0 || k >= a[i]) out.in_range = false;
        out.k.push_back(std::move(k));
        if (pow2(n - 1 - i) * b[i] >= priv.p) out.density_bound = false;
    }
    if (out.exact_division) {
        for (std::size_t i = 1; i < n; ++i) {
            BigInt lhs = abs(a[i] * out.k[0] - a[0] * out.k[i]);
            if (lhs >= 2 * b[i]) out.eq_bound = false;
        }
    }
    return out;
}

}  // namespace knapcrack::attack
