#include "knapcrack/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace knapcrack::lattice {

void IntegerBasis::require_square() const {
    if (rows.empty()) throw std::invalid_argument("basis: must have at least one row");
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw std::invalid_argument("basis: row length must equal row count");
        }
    }
}

GramSchmidt gram_schmidt(const IntegerBasis& basis) {
    basis.require_square();
    const std::size_t d = basis.dim();
    std::vector<std::vector<BigRat>> bstar(d, std::vector<BigRat>(d));
    GramSchmidt gs;
    gs.norms_sq.resize(d);
    gs.mu.assign(d, std::vector<BigRat>(d, BigRat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < d; ++c) bstar[i][c] = BigRat(basis.rows[i][c]);
        for (std::size_t j = 0; j < i; ++j) {
            BigRat dot(0);
            for (std::size_t c = 0; c < d; ++c) dot += BigRat(basis.rows[i][c]) * bstar[j][c];
            gs.mu[i][j] = dot / gs.norms_sq[j];
            for (std::size_t c = 0; c < d; ++c) bstar[i][c] -= gs.mu[i][j] * bstar[j][c];
        }
        BigRat norm(0);
        for (std::size_t c = 0; c < d; ++c) norm += bstar[i][c] * bstar[i][c];
        if (norm == 0) throw std::domain_error("gram_schmidt: rows are linearly dependent");
        gs.norms_sq[i] = std::move(norm);
    }
    return gs;
}

namespace {

void row_submul(std::vector<BigInt>& target, const BigInt& q, const std::vector<BigInt>& src) {
    for (std::size_t c = 0; c < target.size(); ++c) target[c] -= q * src[c];
}

}  // namespace

ReductionResult lll_reduce(const IntegerBasis& basis, const BigRat& delta) {
    basis.require_square();
    if (delta <= BigRat(1, 4) || delta >= 1) {
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
    }
    const std::size_t d = basis.dim();
    GramSchmidt gs = gram_schmidt(basis);
    auto& mu = gs.mu;
    auto& B = gs.norms_sq;

    std::vector<std::vector<BigInt>> b = basis.rows;
    std::vector<std::vector<BigInt>> u(d, std::vector<BigInt>(d, BigInt(0)));
    for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;

    const BigRat half(1, 2);
    auto size_reduce = [&](std::size_t k, std::size_t l) {
        BigRat m = mu[k][l];
        if (m < 0) m = -m;
        if (m <= half) return;
        const BigInt q = round_nearest(mu[k][l]);
        row_submul(b[k], q, b[l]);
        row_submul(u[k], q, u[l]);
        for (std::size_t i = 0; i < l; ++i) mu[k][i] -= BigRat(q) * mu[l][i];
        mu[k][l] -= BigRat(q);
    };

    std::size_t k = 1;
    while (k < d) {
        size_reduce(k, k - 1);
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            const BigRat m = mu[k][k - 1];
            const BigRat bk = B[k];
            const BigRat b_new = bk + m * m * B[k - 1];
            mu[k][k - 1] = m * B[k - 1] / b_new;
            B[k] = B[k - 1] * bk / b_new;
            B[k - 1] = b_new;
            for (std::size_t i = k + 1; i < d; ++i) {
                const BigRat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = (k > 1) ? k - 1 : 1;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
            ++k;
        }
    }

    ReductionResult out;
    out.reduced = IntegerBasis{std::move(b)};
    out.transform = std::move(u);
    out.gso_norms = std::move(B);
    return out;
}

BigInt determinant(const IntegerBasis& basis) {
    basis.require_square();
    const std::size_t d = basis.dim();
    std::vector<std::vector<BigInt>> m = basis.rows;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < d && m[pivot][k] == 0) ++pivot;
            if (pivot == d) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j < d; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[d - 1][d - 1];
}

std::vector<BigInt> shortest_vector_exhaustive(const IntegerBasis& basis, unsigned coeff_bound) {
    basis.require_square();
    const std::size_t d = basis.dim();
    if (d > 4) throw std::invalid_argument("shortest_vector_exhaustive: dimension must be <= 4");
    if (coeff_bound < 1 || coeff_bound > 16) {
        throw std::invalid_argument("shortest_vector_exhaustive: coeff_bound must lie in [1, 16]");
    }
    const long bound = static_cast<long>(coeff_bound);
    std::vector<long> coeff(d, -bound);
    std::vector<BigInt> best;
    BigInt best_norm = -1;
    for (;;) {
        // Only scan coefficient vectors whose first nonzero entry is
        // positive; the mirrored vector has the same norm.
        std::size_t first_nonzero = d;
        for (std::size_t i = 0; i < d; ++i) {
            if (coeff[i] != 0) { first_nonzero = i; break; }
        }
        if (first_nonzero < d && coeff[first_nonzero] > 0) {
            std::vector<BigInt> v(d, BigInt(0));
            for (std::size_t i = 0; i < d; ++i) {
                if (coeff[i] == 0) continue;
                for (std::size_t c = 0; c < d; ++c) v[c] += BigInt(coeff[i]) * basis.rows[i][c];
            }
            BigInt norm = 0;
            for (const BigInt& x : v) norm += x * x;
            if (norm > 0 && (best_norm < 0 || norm < best_norm)) {
                best_norm = norm;
                best = std::move(v);
            }
        }
        std::size_t pos = d;
        while (pos-- > 0) {
            if (coeff[pos] < bound) { ++coeff[pos]; break; }
            coeff[pos] = -bound;
            if (pos == 0) return best;
        }
    }
}

}  // namespace knapcrack::lattice
