#ifndef PERFLAT_OVERLATTICE_HPP
#define PERFLAT_OVERLATTICE_HPP

#include <vector>

#include "perflat/matrix.hpp"

namespace perflat {

// An overlattice of Z^d, described by a rational basis in canonical form:
// basis = hnf(denominator * basis) / denominator with the smallest possible
// positive denominator.
struct Overlattice {
  Int index;        // [lattice : Z^d]
  Int denominator;  // all basis entries lie in (1/denominator) Z
  IMat scaled_basis;  // rows: denominator * basis vectors, in HNF

  QMat basis() const;
};

// All lattices containing Z^d with index at most max_index, duplicate-free.
// Enumerated as duals of Hermite-normal-form sublattices, so the count at
// fixed index N equals sigma_d(N).
std::vector<Overlattice> overlattices(std::size_t d, const Int& max_index);

// All sublattices of Z^d of index exactly N, as HNF basis matrices.
std::vector<IMat> sublattices_of_index(std::size_t d, const Int& n);

}  // namespace perflat

#endif  // PERFLAT_OVERLATTICE_HPP
