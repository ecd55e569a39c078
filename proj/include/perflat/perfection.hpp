#ifndef PERFLAT_PERFECTION_HPP
#define PERFLAT_PERFECTION_HPP

#include <vector>

#include "perflat/matrix.hpp"

namespace perflat {

// Rank of the span of {v (x) v} over all given vectors: the matrix whose
// rows hold the d(d+1)/2 independent entries of v v^T (diagonal once,
// each off-diagonal pair once).
std::size_t symmetric_rank(const std::vector<IntVec>& vectors);

// A lattice given by its Gram matrix is perfect when the symmetric tensors
// of its minimal vectors have full rank d(d+1)/2.
bool is_perfect(const IMat& gram);

// The unique symmetric bilinear form with <v,v> = values[i] on a perfect
// set of exactly d(d+1)/2 vectors.  Not necessarily positive definite;
// throws domain_error when the set is not perfect (singular system).
QMat gram_from_perfect_set(const std::vector<IntVec>& vectors,
                           const std::vector<Rat>& values);

}  // namespace perflat

#endif  // PERFLAT_PERFECTION_HPP
