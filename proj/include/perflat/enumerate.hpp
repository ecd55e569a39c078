#ifndef PERFLAT_ENUMERATE_HPP
#define PERFLAT_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "perflat/matrix.hpp"

namespace perflat {

struct PerfectLatticeRecord {
  unsigned dimension = 0;
  IMat gram;  // primitive integral scaling
  Int determinant;
  std::size_t kissing_pairs = 0;
  std::size_t d2_rank = 0;
  Int overlattice_index;  // index of the overlattice that produced the record
  std::string label;      // matched root lattice, empty when unidentified
};

struct EnumerateOptions {
  bool long_running = false;    // required for d = 4
  bool minor_pruning = false;   // optional third acceleration
  bool symmetry_reduction = true;
  bool hull_pruning = true;
  std::uint64_t node_budget = 500'000'000;
};

// All perfect lattices of dimension d up to similarity, 2 <= d <= 4.
// Deterministic output, sorted by (determinant, gram entries).
std::vector<PerfectLatticeRecord> enumerate_perfect(
    unsigned d, const EnumerateOptions& options = {});

}  // namespace perflat

#endif  // PERFLAT_ENUMERATE_HPP
