#include <doctest.h>

#include "perflat/family.hpp"
#include "perflat/linalg.hpp"
#include "perflat/minvec.hpp"
#include "perflat/perfection.hpp"

using namespace perflat;

namespace {

std::uint64_t rng_next(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

IMat random_unimodular(std::uint64_t& s, std::size_t n, int shears) {
  IMat u = IMat::identity(n);
  for (int t = 0; t < shears; ++t) {
    std::size_t i = rng_next(s) % n, j = rng_next(s) % n;
    if (i == j) continue;
    Int c = static_cast<long>(rng_next(s) % 5) - 2;
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

std::vector<IntVec> basis_coords(const LdLattice& lat,
                                 const MinimalVectorSet& mins) {
  // express the ambient minimal vectors over the lattice basis
  QMat bt(lat.d + 2, lat.d);
  for (std::size_t i = 0; i < lat.d; ++i)
    for (std::size_t j = 0; j < lat.d + 2; ++j) bt(j, i) = Rat(lat.basis(i, j));
  std::vector<IntVec> out;
  for (const IntVec& v : mins.reps) {
    // solve basis^T x = v by elimination
    QMat aug(lat.d + 2, lat.d + 1);
    for (std::size_t i = 0; i < lat.d + 2; ++i) {
      for (std::size_t j = 0; j < lat.d; ++j) aug(i, j) = bt(i, j);
      aug(i, lat.d) = Rat(v[i]);
    }
    std::size_t row = 0;
    std::vector<Rat> sol(lat.d, Rat(0));
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < lat.d; ++col) {
      std::size_t piv = row;
      while (piv < lat.d + 2 && aug(piv, col) == 0) ++piv;
      if (piv == lat.d + 2) continue;
      aug.swap_rows(row, piv);
      Rat inv = Rat(1) / aug(row, col);
      for (std::size_t j = col; j <= lat.d; ++j) aug(row, j) *= inv;
      for (std::size_t i = 0; i < lat.d + 2; ++i) {
        if (i == row || aug(i, col) == 0) continue;
        Rat f = aug(i, col);
        for (std::size_t j = col; j <= lat.d; ++j) aug(i, j) -= f * aug(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = aug(i, lat.d);
    IntVec c(lat.d);
    for (std::size_t j = 0; j < lat.d; ++j) {
      REQUIRE(sol[j].get_den() == 1);
      c[j] = sol[j].get_num();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("symmetric rank of family minimal vectors") {
  LdLattice l9 = construct_ld(9, HoleSequence{});
  CHECK(symmetric_rank(ld_minimal_vectors(l9).reps) == 45);
  LdLattice l910 = construct_ld(9, HoleSequence({4, 10}));
  CHECK(symmetric_rank(ld_minimal_vectors(l910).reps) == 44);
  CHECK(symmetric_rank({IntVec{Int(3), Int(1)}}) == 1);
}

TEST_CASE("perfection from abstract gram input") {
  CHECK(is_perfect(construct_ld(10, HoleSequence({4, 10})).gram));
  CHECK_FALSE(is_perfect(construct_ld(9, HoleSequence({4, 10})).gram));
  CHECK_FALSE(is_perfect(IMat::identity(2)));
}

TEST_CASE("symmetric rank is invariant under sign flips and basis changes") {
  std::uint64_t s = 1234;
  LdLattice lat = construct_ld(6, HoleSequence({2, 5, 6, 9}));
  MinimalVectorSet mins = ld_minimal_vectors(lat);
  std::vector<IntVec> coords = basis_coords(lat, mins);
  std::size_t base = symmetric_rank(coords);
  CHECK(base == 21);  // perfect in dimension 6

  std::vector<IntVec> flipped = coords;
  for (std::size_t i = 0; i < flipped.size(); i += 2)
    for (Int& x : flipped[i]) x = -x;
  CHECK(symmetric_rank(flipped) == base);

  for (int iter = 0; iter < 20; ++iter) {
    IMat u = random_unimodular(s, lat.d, 8);
    std::vector<IntVec> moved;
    for (const IntVec& c : coords) moved.push_back(mat_vec(u, c));
    CHECK(symmetric_rank(moved) == base);
  }
}

TEST_CASE("gram from a perfect set in dimension 2") {
  std::vector<IntVec> vecs = {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)},
                              IntVec{Int(1), Int(1)}};
  QMat g = gram_from_perfect_set(vecs, {Rat(1), Rat(1), Rat(1)});
  CHECK(g(0, 0) == 1);
  CHECK(g(0, 1) == Rat(-1, 2));
  CHECK(g(1, 1) == 1);
}

TEST_CASE("gram from perfect sets in dimension 3") {
  std::vector<Rat> ones(6, Rat(1));
  std::vector<IntVec> degen = {
      IntVec{Int(1), Int(0), Int(0)}, IntVec{Int(0), Int(1), Int(0)},
      IntVec{Int(0), Int(0), Int(1)}, IntVec{Int(1), Int(1), Int(0)},
      IntVec{Int(0), Int(1), Int(1)}, IntVec{Int(1), Int(0), Int(1)}};
  QMat g1 = gram_from_perfect_set(degen, ones);
  QMat expected1{{Rat(1), Rat(-1, 2), Rat(-1, 2)},
                 {Rat(-1, 2), Rat(1), Rat(-1, 2)},
                 {Rat(-1, 2), Rat(-1, 2), Rat(1)}};
  CHECK(g1 == expected1);
  CHECK_FALSE(is_positive_definite(g1));  // the degenerate form

  std::vector<IntVec> a3 = {
      IntVec{Int(1), Int(0), Int(0)}, IntVec{Int(0), Int(1), Int(0)},
      IntVec{Int(0), Int(0), Int(1)}, IntVec{Int(1), Int(1), Int(0)},
      IntVec{Int(0), Int(1), Int(1)}, IntVec{Int(1), Int(0), Int(-1)}};
  QMat g2 = gram_from_perfect_set(a3, ones);
  QMat expected2{{Rat(1), Rat(-1, 2), Rat(1, 2)},
                 {Rat(-1, 2), Rat(1), Rat(-1, 2)},
                 {Rat(1, 2), Rat(-1, 2), Rat(1)}};
  CHECK(g2 == expected2);
  CHECK(is_positive_definite(g2));
}

TEST_CASE("non-perfect sets are rejected") {
  std::vector<IntVec> dep = {
      IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}, IntVec{Int(0), Int(2)}};
  CHECK_THROWS_AS(gram_from_perfect_set(dep, {Rat(1), Rat(1), Rat(1)}),
                  domain_error);
}

TEST_CASE("hyperplane-union property on random perfect unions") {
  // sets built from two perfect hyperplane sections plus an outside vector
  // span the full symmetric square
  std::uint64_t s = 77;
  for (int iter = 0; iter < 10; ++iter) {
    const std::size_t d = 3 + iter % 3;  // 3..5
    std::vector<IntVec> set;
    // perfect set inside the hyperplane x_d = 0
    for (std::size_t i = 0; i + 1 < d; ++i) {
      IntVec e(d, 0);
      e[i] = 1;
      set.push_back(e);
      for (std::size_t j = i + 1; j + 1 < d; ++j) {
        IntVec f(d, 0);
        f[i] = 1;
        f[j] = 1;
        set.push_back(f);
      }
    }
    // perfect set inside the hyperplane x_1 = 0 (shifted basis e_2..e_d)
    for (std::size_t i = 1; i < d; ++i) {
      IntVec e(d, 0);
      e[i] = 1;
      set.push_back(e);
      for (std::size_t j = i + 1; j < d; ++j) {
        IntVec f(d, 0);
        f[i] = 1;
        f[j] = 1;
        set.push_back(f);
      }
    }
    // one vector outside both hyperplanes
    IntVec out(d, 0);
    out[0] = 1 + static_cast<long>(rng_next(s) % 3);
    out[d - 1] = 1 + static_cast<long>(rng_next(s) % 3);
    for (std::size_t i = 1; i + 1 < d; ++i)
      out[i] = static_cast<long>(rng_next(s) % 3) - 1;
    set.push_back(out);
    CHECK(symmetric_rank(set) == d * (d + 1) / 2);
  }
}
