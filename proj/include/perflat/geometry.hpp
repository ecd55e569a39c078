#ifndef PERFLAT_GEOMETRY_HPP
#define PERFLAT_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "perflat/matrix.hpp"

namespace perflat {

// --- exact polytope membership -------------------------------------------

// Is p a convex combination of the given points?  Exact rational simplex.
bool in_convex_hull(const std::vector<IntVec>& points, const std::vector<Rat>& p);

// Is p in the interior of conv(points)?  Decided by testing that p +- eps e_j
// stays in the hull for every coordinate direction.
bool in_hull_interior(const std::vector<IntVec>& points,
                      const std::vector<Rat>& p);

// Is v a vertex of conv(points)?  (v must be one of the points.)
bool is_hull_vertex(const std::vector<IntVec>& points, const IntVec& v);

// --- hollow sublattices ----------------------------------------------------

// For d independent vectors v_1..v_d (rows, coordinates in the ambient
// lattice Z^d): is the interior of conv(+-v_1, ..., +-v_d) free of nonzero
// lattice points, and what is the index of the generated sublattice?
// Supported for d <= 6.
std::pair<bool, Int> hollow_index(const IMat& generators);

// --- symmetric generator sets ----------------------------------------------

// Lattice points interior to conv(V u -V); V holds one vector per +- pair.
// Supported for d <= 5; throws domain_error when the hull is not
// full-dimensional.
std::vector<IntVec> interior_lattice_points(const std::vector<IntVec>& half_v);

// --- small-height bases -----------------------------------------------------

// Basis f_1..f_d of Z^d adapted to independent vectors v_1..v_d so that
// v_i = sum_{j>=i} alpha_{i,j} f_j with |alpha_{i,j}| <= 2^{max(0,j-i-1)} I,
// I the index of the sublattice spanned by the v_i.
struct SmallHeightBasis {
  IMat basis;   // rows f_1..f_d
  IMat alpha;   // coordinates of v_i over the f_j, upper triangular
  Int index;
};

SmallHeightBasis small_height_basis(const IMat& vectors);

// --- root-lattice index extremes --------------------------------------------

enum class RootType { A, D };

// Maximal index of a sublattice generated by `dim` linearly independent
// roots, verified by exhaustive branch-and-bound over root subsets.
Int root_lattice_extremes(RootType type, unsigned dim);

// Root representatives (one per +- pair) in lattice coordinates, together
// with the ambient-lattice basis; exposed for the exhaustive tests.
std::vector<IntVec> root_representatives(RootType type, unsigned dim);

// The underlying branch-and-bound, usable for any dim (also odd D, which is
// reported but not part of root_lattice_extremes' contract).  The search is
// exhaustive; a greedy determinant-maximising seed only tightens pruning.
Int root_index_maximum(RootType type, unsigned dim);

}  // namespace perflat

#endif  // PERFLAT_GEOMETRY_HPP
