#pragma once

#include "knapcrack/bigint.hpp"

#include <cstddef>
#include <vector>

namespace knapcrack::lattice {

/* A square integer basis, one row per basis vector. */
struct IntegerBasis {
    std::vector<std::vector<BigInt>> rows;

    std::size_t dim() const { return rows.size(); }
    void require_square() const;  // throws std::invalid_argument
};

/*
 * Exact Gram-Schmidt data: squared norms of the orthogonalized vectors and
 * the lower-triangular projection coefficients mu[i][j] (j < i).  All
 * values are exact rationals; no floating point enters the reduction.
 */
struct GramSchmidt {
    std::vector<BigRat> norms_sq;
    std::vector<std::vector<BigRat>> mu;
};

/* Throws std::domain_error when the rows are linearly dependent. */
GramSchmidt gram_schmidt(const IntegerBasis& basis);

struct ReductionResult {
    IntegerBasis reduced;
    /* Unimodular row-operation record: transform * input = reduced. */
    std::vector<std::vector<BigInt>> transform;
    /* Exact squared Gram-Schmidt norms of the reduced basis. */
    std::vector<BigRat> gso_norms;
};

/*
 * LLL reduction at parameter delta in (1/4, 1).  The output basis is
 * size-reduced (|mu| <= 1/2) and satisfies the Lovasz condition
 * ||b*_i||^2 >= (delta - mu_{i,i-1}^2) ||b*_{i-1}||^2 at every i.
 * Bookkeeping follows the classic exact-arithmetic formulation: the GSO
 * coefficients are computed once up front and updated incrementally
 * through size reductions and swaps.
 */
ReductionResult lll_reduce(const IntegerBasis& basis, const BigRat& delta);

/* Exact integer determinant (Bareiss elimination); handy for unimodularity checks. */
BigInt determinant(const IntegerBasis& basis);

/*
 * Reference shortest-vector search over coefficient vectors with entries
 * in [-coeff_bound, coeff_bound].  Deliberately guarded: dimensions above
 * 4 or bounds above 16 are refused.  Returns the minimizing lattice
 * vector (first found wins ties, sign-normalized).
 */
std::vector<BigInt> shortest_vector_exhaustive(const IntegerBasis& basis, unsigned coeff_bound);

}  // namespace knapcrack::lattice
