#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace knapcrack {

using BigInt = mpz_class;
using BigRat = mpq_class;

/* Least non-negative residue of a mod m, also when a is negative. */
inline BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::optional<BigInt> invert_mod(const BigInt& x, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* Number of bits in |x|; zero has bit length 0. */
inline std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline BigInt pow2(std::size_t k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(unsigned long g) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), g);
    return r;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

/* Nearest integer to q, halves rounded towards +infinity. */
inline BigInt round_nearest(const BigRat& q) {
    BigInt num2 = 2 * q.get_num() + q.get_den();
    BigInt den2 = 2 * q.get_den();
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return r;
}

inline std::string to_dec(const BigInt& x) { return x.get_str(10); }

}  // namespace knapcrack
