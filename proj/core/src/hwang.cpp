#include "knapcrack/hwang.hpp"

#include <stdexcept>

namespace knapcrack::hwang {

void Params::validate() const {
    if (subsets == 0) throw std::invalid_argument("hwang params: subsets must be >= 1");
    if (subset_size == 0) throw std::invalid_argument("hwang params: subset_size must be >= 1");
    if (select == 0 || select > subset_size) {
        throw std::invalid_argument("hwang params: select must lie in [1, subset_size]");
    }
    if (gap_bits == 0) throw std::invalid_argument("hwang params: gap_bits must be >= 1");
}

std::pair<PrivateKey, PublicKey> keygen(const Params& params, Rng& rng) {
    params.validate();
    auto [mh_priv, mh_pub] = mh_keygen(params.n(), params.gap_bits, rng);
    PrivateKey priv{std::move(mh_priv.b), std::move(mh_priv.p), std::move(mh_priv.w),
                    std::move(mh_priv.w_inv), params};
    PublicKey pub{std::move(mh_pub.a), params};
    return {std::move(priv), std::move(pub)};
}

WorkingKnapsack derive_working_knapsack(std::span<const BigInt> key_vector,
                                        const BigInt& d_prime, const Params& params) {
    params.validate();
    if (key_vector.size() != params.n()) {
        throw std::invalid_argument("derive_working_knapsack: key vector length must be s*g");
    }
    const auto digits = factoradic::to_factorial_digits(d_prime, params.subset_size);
    WorkingKnapsack wk;
    wk.values.reserve(params.block_len());
    wk.positions.reserve(params.block_len());
    for (std::size_t s = 0; s < params.subsets; ++s) {
        const std::size_t base = s * params.subset_size;
        auto selection = factoradic::apply_selection(
            key_vector.subspan(base, params.subset_size), digits, params.select);
        for (std::size_t j = 0; j < selection.values.size(); ++j) {
            wk.values.push_back(std::move(selection.values[j]));
            wk.positions.push_back(base + selection.positions[j]);
        }
    }
    return wk;
}

Envelope encrypt(const PublicKey& pub, std::span<const std::uint8_t> message) {
    pub.params.validate();
    if (message.empty()) throw std::invalid_argument("hwang encrypt: message must be non-empty");
    if (pub.a.size() != pub.params.n()) {
        throw std::invalid_argument("hwang encrypt: public key length must be s*g");
    }
    Envelope env;
    env.d_prime = digest_to_dprime(message, pub.params.subset_size);
    const WorkingKnapsack wk = derive_working_knapsack(pub.a, *env.d_prime, pub.params);
    const BitVector bits = bytes_to_bits(message);
    env.msg_bit_len = bits.size();
    for (const BitVector& block : split_into_blocks(bits, pub.params.block_len())) {
        BigInt c = 0;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i]) c += wk.values[i];
        }
        env.blocks.push_back(std::move(c));
    }
    return env;
}

std::optional<Bytes> decrypt(const PrivateKey& priv, const Envelope& env) {
    priv.params.validate();
    if (!env.d_prime) throw std::invalid_argument("hwang decrypt: envelope lacks d_prime");
    if (env.msg_bit_len == 0) throw std::invalid_argument("hwang decrypt: empty message envelope");
    const std::size_t block_len = priv.params.block_len();
    const std::size_t expected_blocks = (env.msg_bit_len + block_len - 1) / block_len;
    if (env.blocks.size() != expected_blocks) {
        throw std::invalid_argument("hwang decrypt: block count does not match message length");
    }

    const WorkingKnapsack wk =
        derive_working_knapsack(priv.b.elements(), *env.d_prime, priv.params);
    // The modular mask cancels only if the selected subset sum cannot wrap
    // around p; a valid key guarantees this, so a violation is a key error.
    BigInt selected_sum = 0;
    for (const BigInt& v : wk.values) selected_sum += v;
    if (selected_sum >= priv.p) {
        throw std::domain_error("hwang decrypt: selected subset sum reaches the modulus");
    }

    BitVector bits;
    bits.reserve(env.blocks.size() * block_len);
    for (const BigInt& c : env.blocks) {
        if (c < 0) throw std::invalid_argument("hwang decrypt: negative block");
        const BigInt target = mod_nonneg(c * priv.w_inv, priv.p);
        auto solved = solve_selected_multiset(wk.values, target);
        if (!solved) return std::nullopt;
        bits.insert(bits.end(), solved->begin(), solved->end());
    }
    bits.resize(env.msg_bit_len);
    return bits_to_bytes(bits);
}

}  // namespace knapcrack::hwang
