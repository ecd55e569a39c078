#ifndef PERFLAT_BOUNDS_HPP
#define PERFLAT_BOUNDS_HPP

#include <optional>
#include <string>

#include "perflat/interval.hpp"

namespace perflat {

// Upper bounds for I_d, the maximal index of a sublattice generated by d
// independent minimal vectors of a well-rounded d-dimensional lattice.
// All floors are certified (the enclosure is widened until the floor is
// unambiguous); hermite and best_known are only tabulated for small d.
struct BoundReport {
  unsigned d = 0;
  Int minkowski;                  // floor((4/pi)^{d/2} (d/2)!)
  Int blichfeldt;                 // floor((2/pi)^{d/2} Gamma(2 + d/2))
  std::optional<Int> hermite;     // floor(gamma_d^{d/2}), d <= 8
  std::optional<Int> best_known;  // exact I_d, d <= 9
};

BoundReport id_upper_bounds(unsigned d);

enum class IdChoice { minkowski, blichfeldt, hermite, best_known };

Int id_bound_value(unsigned d, IdChoice choice);

// The perfect-lattice counting bound I^{d+1} C(3^d I, C(d,2)) and its
// improved variant I^{d+1} C(floor((3^d I - (2d+1))/2), C(d,2)), evaluated
// exactly, with a certified log2 enclosure of the base bound.
struct PerfectCountBound {
  unsigned d = 0;
  Int id_value;
  Int base;
  Int improved;
  RatInterval log2_base;
};

PerfectCountBound perfect_count_upper(unsigned d, IdChoice choice);
PerfectCountBound perfect_count_upper(unsigned d, const Int& id_value);

// Cell-count bound I^{d+1} C(3^d I, k+1) for a k-dimensional cell.
Int cell_count_upper(unsigned d, const Int& k, const Int& id_value);

// Orbit bound for symmetric lattice polytopes without interior points:
// (d!)^{d+1} 2^{3^d d!}.  Exact value for small d, certified log2 always.
struct PolytopeCountBound {
  unsigned d = 0;
  std::optional<Int> exact;  // materialised for d <= 3 only
  RatInterval log2_value;
};

PolytopeCountBound polytope_count_upper(unsigned d);

// H_d <= d!, the hollow-sublattice index bound.
Int hollow_upper(unsigned d);

}  // namespace perflat

#endif  // PERFLAT_BOUNDS_HPP
