#include <doctest.h>

#include <functional>
#include <set>

#include "perflat/counting.hpp"
#include "perflat/family.hpp"
#include "perflat/linalg.hpp"
#include "perflat/minvec.hpp"

using namespace perflat;

TEST_CASE("weight vectors from the construction") {
  LdLattice a = construct_ld(6, HoleSequence({2, 5, 6, 9}));
  CHECK(a.support == std::vector<long>{1, 3, 4, 7, 8, 10, 11, 12});
  LdLattice b = construct_ld(10, HoleSequence({4, 10}));
  CHECK(b.support ==
        std::vector<long>{1, 2, 3, 5, 6, 7, 8, 9, 11, 12, 13, 14});
  LdLattice c = construct_ld(2, HoleSequence{});
  CHECK(c.support == std::vector<long>{1, 2, 3, 4});
  CHECK(c.basis.rows() == 2);
}

TEST_CASE("basis vectors are orthogonal to both constraint vectors") {
  for (auto holes : {std::vector<long>{}, {3}, {2, 8}, {4, 10}}) {
    LdLattice lat = construct_ld(9, HoleSequence(holes));
    for (std::size_t i = 0; i < lat.basis.rows(); ++i) {
      Int s = 0, w = 0;
      for (std::size_t j = 0; j < lat.basis.cols(); ++j) {
        s += lat.basis(i, j);
        w += lat.basis(i, j) * lat.weight[j];
      }
      CHECK(s == 0);
      CHECK(w == 0);
    }
    // even lattice: all diagonal gram entries even
    for (std::size_t i = 0; i < lat.d; ++i)
      CHECK(lat.gram(i, i) % 2 == 0);
  }
}

TEST_CASE("degenerate support is rejected") {
  // holes (2,4,6,...) would leave an arithmetic progression for small d
  CHECK_THROWS_AS(construct_ld(2, HoleSequence({2, 4})), domain_error);
}

TEST_CASE("determinant formula matches the exact gram determinant") {
  CHECK(ld_determinant(9, HoleSequence{}) == 1210);
  CHECK(ld_determinant(10, HoleSequence({4, 10})) == 2507);
  CHECK(ld_determinant(9, HoleSequence({4, 10})) == 1804);
  for (auto& [d, holes] : std::vector<std::pair<unsigned, std::vector<long>>>{
           {9, {}}, {9, {2, 8}}, {7, {3}}, {11, {2, 9}}, {12, {5, 11}}}) {
    LdLattice lat = construct_ld(d, HoleSequence(holes));
    CHECK(det_int(lat.gram) == ld_determinant(d, lat.holes));
  }
}

TEST_CASE("minimal vectors of the family") {
  LdLattice l9 = construct_ld(9, HoleSequence{});
  MinimalVectorSet m9 = ld_minimal_vectors(l9);
  CHECK(m9.minimum == 4);
  CHECK(m9.pairs() == 70);
  CHECK(ld_minimal_pair_count(9, l9.holes) == 70);

  MinimalVectorSet m910 = ld_minimal_vectors(construct_ld(9, HoleSequence({4, 10})));
  CHECK(m910.pairs() == 54);

  MinimalVectorSet m2 = ld_minimal_vectors(construct_ld(2, HoleSequence{}));
  REQUIRE(m2.pairs() == 1);
  CHECK(m2.reps[0] == IntVec{Int(1), Int(-1), Int(-1), Int(1)});
}

TEST_CASE("family minimal vectors agree with general enumeration") {
  for (auto& [d, holes] : std::vector<std::pair<unsigned, std::vector<long>>>{
           {5, {}}, {9, {4, 10}}, {12, {3, 9}}}) {
    LdLattice lat = construct_ld(d, HoleSequence(holes));
    MinimalVectorSet fam = ld_minimal_vectors(lat);
    MinimalVectorSet gen = minimal_vectors_general(lat.gram);
    CHECK(gen.minimum == fam.minimum);
    CHECK(gen.pairs() == fam.pairs());
    // compare as gram data: sorted multiset of pairwise products
    std::multiset<Int> a, b;
    for (const IntVec& u : fam.reps)
      for (const IntVec& v : fam.reps) a.insert(abs(dot(u, v)));
    for (const IntVec& u : gen.reps)
      for (const IntVec& v : gen.reps)
        b.insert(abs(gram_product(lat.gram, u, v)));
    CHECK(a == b);
  }
}

TEST_CASE("essential partner reflections") {
  CHECK(essential_partner(6, HoleSequence({2, 5, 6, 9})).holes ==
        std::vector<long>{4, 7, 8, 11});
  CHECK(essential_partner(10, HoleSequence({4, 10})).holes ==
        std::vector<long>{5, 11});
  CHECK(essential_partner(9, HoleSequence{}).empty());
}

TEST_CASE("essential partner is an involution with equal determinant") {
  std::vector<std::pair<unsigned, std::vector<long>>> cases = {
      {9, {2, 8}}, {9, {4, 10}}, {8, {3}}, {12, {2, 9}}, {7, {5}}};
  for (auto& [d, holes] : cases) {
    HoleSequence h(holes);
    HoleSequence p = essential_partner(d, h);
    CHECK(essential_partner(d, p) == h);
    CHECK(ld_determinant(d, h) == ld_determinant(d, p));
  }
}

TEST_CASE("family members in dimension 46") {
  auto members = family_members(46);
  CHECK(Int(static_cast<long>(members.size())) == alpha(38));
  CHECK(Int(static_cast<long>(members.size())) == family_count(46));
  for (const HoleSequence& h : members) {
    CHECK(h.holes.front() >= 7);
    CHECK(h.gaps_at_least(6));
    CHECK(h.auto_constraints(46));
  }
  CHECK_THROWS_AS(family_members(45), domain_error);
}

TEST_CASE("family members match direct constrained backtracking") {
  // independent oracle: for each k the last hole is pinned at d + k + 1, so
  // count the ways of placing k-1 interior holes in [7, d+k-5] with gaps >= 6
  const unsigned d = 46;
  std::size_t count = 0;
  for (long k = 1;; ++k) {
    long last = static_cast<long>(d) + k + 1;
    std::size_t here = 0;
    std::function<void(long, long)> place = [&](long chosen, long lo) {
      if (chosen == k - 1) {
        ++here;
        return;
      }
      for (long v = lo; v <= last - 6 * (k - 1 - chosen); ++v)
        place(chosen + 1, v + 6);
    };
    place(0, 7);
    if (here == 0) break;
    count += here;
  }
  CHECK(count == family_members(d).size());
}
