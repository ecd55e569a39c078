#ifndef PERFLAT_MINVEC_HPP
#define PERFLAT_MINVEC_HPP

#include <functional>
#include <vector>

#include "perflat/matrix.hpp"

namespace perflat {

// One representative per antipodal pair of shortest nonzero vectors,
// coordinates taken with respect to the (implicit) basis of the Gram input.
// Representatives are normalised (first nonzero coordinate positive) and
// sorted lexicographically.
struct MinimalVectorSet {
  Int minimum = 0;               // squared norm
  std::vector<IntVec> reps;      // one per +- pair

  std::size_t pairs() const { return reps.size(); }

  // Pairwise inner products of the representatives under `gram`.
  IMat pair_gram(const IMat& gram) const;
};

// Visits every nonzero x with x^T gram x <= bound, one per antipodal pair
// (first nonzero coordinate positive), together with its exact norm.
// Enumeration is exact: rational LDL^T decomposition plus integer interval
// pruning, no floating point anywhere.
void enumerate_short_vectors(
    const IMat& gram, const Int& bound,
    const std::function<void(const IntVec&, const Int&)>& visit);

// Complete set of antipodal-pair representatives of the shortest nonzero
// vectors.  Rejects non-positive-definite input.
MinimalVectorSet minimal_vectors_general(const IMat& gram);
MinimalVectorSet minimal_vectors_general(const QMat& gram);

// All +- pair representatives of vectors of exactly the given norm.
std::vector<IntVec> vectors_of_norm(const IMat& gram, const Int& norm);

}  // namespace perflat

#endif  // PERFLAT_MINVEC_HPP
