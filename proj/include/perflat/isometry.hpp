#ifndef PERFLAT_ISOMETRY_HPP
#define PERFLAT_ISOMETRY_HPP

#include <cstdint>
#include <optional>

#include "perflat/matrix.hpp"

namespace perflat {

// Decides whether two positive definite integer Gram matrices are related by
// a unimodular change of basis.  On success the witness u satisfies
//     u * g1 * u^T = g2.
// Cheap invariants (dimension, determinant, minimum, kissing number) are
// checked first; the backtracking search then maps the basis of g2 onto
// vectors of g1.  Intended for d <= 10.
//
// Throws resource_limit_error when the search exceeds node_budget; that
// signals "undecided", never a wrong answer.
std::optional<IMat> isometry_equivalent(const IMat& g1, const IMat& g2,
                                        std::uint64_t node_budget = 50'000'000);

}  // namespace perflat

#endif  // PERFLAT_ISOMETRY_HPP
