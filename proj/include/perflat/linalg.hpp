#ifndef PERFLAT_LINALG_HPP
#define PERFLAT_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "perflat/matrix.hpp"

namespace perflat {

// Exact rank over the rationals, via fraction-free (Bareiss) elimination.
std::size_t rank_rational(const QMat& m);
std::size_t rank_rational(const IMat& m);

// Exact determinant of a square integer matrix (Bareiss).
Int det_int(const IMat& m);
Rat det_rat(const QMat& m);

// Solve a*x = b exactly; empty result when the system is singular or
// inconsistent.  a must be square.
std::optional<std::vector<Rat>> solve_square(const QMat& a,
                                             const std::vector<Rat>& b);

// Inverse of a square rational matrix; empty when singular.
std::optional<QMat> inverse(const QMat& m);

// All leading principal minors strictly positive.
bool is_positive_definite(const IMat& gram);
bool is_positive_definite(const QMat& gram);

// Row-style Hermite normal form of the row lattice of m: pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows dropped.
IMat hnf_rows(const IMat& m);

// Basis of the saturated integer kernel {x : m * x = 0}, one row per basis
// vector, in HNF-canonical form.
IMat kernel_basis(const IMat& m);

// Exact LLL reduction of a positive definite Gram matrix (delta = 3/4).
// Returns {reduced_gram, transform} with reduced = U * gram * U^T and
// det(U) = +-1.
std::pair<IMat, IMat> lll_reduce_gram(const IMat& gram);

}  // namespace perflat

#endif  // PERFLAT_LINALG_HPP
