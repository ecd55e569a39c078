#include <doctest.h>

#include <numeric>

#include "perflat/family.hpp"
#include "perflat/isometry.hpp"
#include "perflat/linalg.hpp"

using namespace perflat;

namespace {

std::uint64_t rng_next(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

IMat signed_permutation(std::uint64_t& s, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[rng_next(s) % i]);
  IMat p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    p(i, perm[i]) = rng_next(s) & 1 ? 1 : -1;
  return p;
}

}  // namespace

TEST_CASE("signed permutation conjugates are detected") {
  std::uint64_t s = 31337;
  IMat g{{Int(4), Int(1), Int(0)},
         {Int(1), Int(4), Int(2)},
         {Int(0), Int(2), Int(6)}};
  REQUIRE(is_positive_definite(g));
  for (int iter = 0; iter < 5; ++iter) {
    IMat p = signed_permutation(s, 3);
    IMat g2 = p * g * p.transposed();
    auto w = isometry_equivalent(g, g2);
    REQUIRE(w.has_value());
    CHECK(*w * g * w->transposed() == g2);
  }
}

TEST_CASE("essentially isomorphic six-dimensional lattices") {
  LdLattice a = construct_ld(6, HoleSequence({2, 5, 6, 9}));
  LdLattice b = construct_ld(6, HoleSequence({4, 7, 8, 11}));
  auto w = isometry_equivalent(a.gram, b.gram);
  REQUIRE(w.has_value());
  CHECK(*w * a.gram * w->transposed() == b.gram);
}

TEST_CASE("different determinants are rejected quickly") {
  LdLattice a = construct_ld(9, HoleSequence({2, 8}));
  LdLattice b = construct_ld(9, HoleSequence({2, 9}));
  CHECK(det_int(a.gram) == 1700);
  CHECK(det_int(b.gram) == 1674);
  CHECK_FALSE(isometry_equivalent(a.gram, b.gram).has_value());
}

TEST_CASE("reflexive and symmetric on random positive forms") {
  std::uint64_t s = 11;
  for (int iter = 0; iter < 4; ++iter) {
    IMat b(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          b(i, j) = static_cast<long>(rng_next(s) % 7) - 3;
    } while (det_int(b) == 0);
    IMat g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Int acc = 0;
        for (std::size_t k = 0; k < 3; ++k) acc += b(i, k) * b(j, k);
        g(i, j) = acc;
      }
    auto w = isometry_equivalent(g, g);
    REQUIRE(w.has_value());
    CHECK(*w * g * w->transposed() == g);
  }
}
