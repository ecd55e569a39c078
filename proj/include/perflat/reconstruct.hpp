#ifndef PERFLAT_RECONSTRUCT_HPP
#define PERFLAT_RECONSTRUCT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "perflat/family.hpp"
#include "perflat/matrix.hpp"

namespace perflat {

// Pairwise inner products of minimal-vector representatives of a minimum-4
// lattice, stored compactly (all products lie in {-4,...,4}).  Hole recovery
// reads nothing but this matrix.
class MinsetGram {
 public:
  static MinsetGram from_reps(const std::vector<IntVec>& reps);
  static MinsetGram from_matrix(const IMat& gram);

  std::size_t size() const { return n_; }
  int at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  // Relabels the representatives by a seeded random permutation and flips a
  // random subset of signs; the lattice it describes is unchanged.
  MinsetGram scrambled(std::uint64_t seed) const;

  IMat to_matrix() const;

  // Exact rank (dimension of the span of the underlying vectors).
  std::size_t rank() const;

 private:
  std::size_t n_ = 0;
  std::vector<signed char> data_;
};

// Simple graph with bitset adjacency.
class Graph {
 public:
  explicit Graph(std::size_t n);
  std::size_t size() const { return n_; }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const;
  // pointer to the `words()` adjacency words of vertex v
  const std::uint64_t* row(std::size_t v) const { return &bits_[v * words_]; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> deg_;
};

// Neighbour structure of a minimal vector v: the neighbours w (inner product
// 2 with v) grouped into orbits {w, v-w} of the involution, with the parity
// graph (edge = even inner product between orbit representatives).
// Each orbit holds its two neighbours as sign-encoded minset references
// +-(index + 1): the reference s*(i+1) stands for s * reps[i].
struct NeighbourQuotient {
  std::size_t center = 0;  // index of v in the minset
  std::vector<std::array<int, 2>> orbits;
  Graph parity{0};

  std::size_t classes() const { return orbits.size(); }
};

NeighbourQuotient neighbour_quotient(const MinsetGram& g, std::size_t v);

// All alpha-quasi-equivalence classes of size >= min_size found by seeded
// greedy growth from high-degree vertices, each verified exactly against
// both defining inequalities.  Classes are pairwise disjoint.
std::vector<std::vector<std::size_t>> quasi_equivalence_classes(
    const Graph& g, const Rat& alpha, std::size_t min_size);

// Exact verification of the two defining inequalities for one vertex set.
bool verify_quasi_class(const Graph& g, const std::vector<std::size_t>& c,
                        const Rat& alpha);

// Recovered invariant of a family lattice.
struct RecoveredStructure {
  std::size_t d = 0;
  HoleSequence holes;
  std::size_t admissible_pair = 0;  // minset index of the admissible vector
};

// Diagnostics of a recovery run, serialisable through the CLI.
struct RecoveryReport {
  std::size_t candidates_scanned = 0;
  std::size_t admissible_index = 0;
  std::size_t class_size_a = 0, class_size_b = 0;
  std::size_t error_edges = 0;
  std::vector<long> path_labels;
  RecoveredStructure result;
};

// The four admissibility conditions for minimal vector v, with the ambient
// dimension d supplied by the caller.
bool is_admissible(const MinsetGram& g, std::size_t v, std::size_t d);

// Same, deriving d as the exact rank of the minset gram.
bool is_admissible(const MinsetGram& g, std::size_t v);

// Recovers (d, holes) from the Gram data of the minimal vectors of a lattice
// isomorphic to a family member with d >= 46 under the recognition
// constraints.  Throws not_in_family_error when recovery fails or the final
// consistency checks do not confirm the answer; never returns a wrong
// sequence.
RecoveredStructure recover_holes(const MinsetGram& g,
                                 RecoveryReport* report = nullptr);

// Test-only helper: support-overlap class of a neighbour, computed from
// ambient coordinates.  0 = aabb, 1 = abab, 2 = abba.
int support_class_of(const IntVec& v, const IntVec& w);

}  // namespace perflat

#endif  // PERFLAT_RECONSTRUCT_HPP
