#ifndef PERFLAT_FAMILY_HPP
#define PERFLAT_FAMILY_HPP

#include <vector>

#include "perflat/matrix.hpp"
#include "perflat/minvec.hpp"

namespace perflat {

// Strictly increasing positive integers h_1 < ... < h_k (possibly empty),
// the forbidden indices of a family lattice.
struct HoleSequence {
  std::vector<long> holes;

  HoleSequence() = default;
  explicit HoleSequence(std::vector<long> h);

  std::size_t size() const { return holes.size(); }
  bool empty() const { return holes.empty(); }

  // All gaps h_{i+1} - h_i >= 6.
  bool gaps_at_least(long g) const;
  // h_1 >= 7, gaps >= 4 and h_k = d + k + 1 for the given dimension.
  bool auto_constraints(std::size_t d) const;
  // gaps >= 6 (the perfection-theorem constraint; needs d >= 10 to apply).
  bool perf_constraints() const { return gaps_at_least(6); }

  bool operator==(const HoleSequence& o) const { return holes == o.holes; }
  bool operator<(const HoleSequence& o) const { return holes < o.holes; }
};

// The lattice of integer vectors supported on the d+2 smallest positive
// integers outside `holes`, orthogonal to the all-ones vector and to the
// vector of support values.
struct LdLattice {
  std::size_t d = 0;
  HoleSequence holes;
  std::vector<long> support;  // the d+2 support values, increasing
  IntVec weight;              // support values as integers
  IMat basis;                 // d x (d+2), HNF-canonical kernel basis
  IMat gram;                  // d x d
};

LdLattice construct_ld(std::size_t d, const HoleSequence& holes);

// <c,c><h,h> - <c,h>^2; equals the determinant of the Gram matrix.
Int ld_determinant(std::size_t d, const HoleSequence& holes);

// All antipodal pairs b_a + b_b - b_c - b_d with a+b = c+d over the support,
// expressed in ambient Z^{d+2} coordinates.  Minimum 4 whenever at least one
// such quadruple exists; otherwise falls back to general enumeration (in
// basis coordinates converted back to the ambient space).
MinimalVectorSet ld_minimal_vectors(const LdLattice& lat);

// Number of minimal quadruple pairs, computed combinatorially.
std::size_t ld_minimal_pair_count(std::size_t d, const HoleSequence& holes);

// Pairwise inner products of the ld_minimal_vectors representatives
// (ambient coordinates, standard inner product).
IMat ld_minset_gram(const MinimalVectorSet& minset);

// The reflected hole sequence {omega+1-h} of the essentially isomorphic
// partner lattice; an involution on effective hole sequences.
HoleSequence essential_partner(std::size_t d, const HoleSequence& holes);

// All hole sequences meeting the perfection and the recognition constraints
// simultaneously, in lexicographic order; defined for d >= 46 and counted by
// alpha(d-8).
std::vector<HoleSequence> family_members(std::size_t d);

}  // namespace perflat

#endif  // PERFLAT_FAMILY_HPP
