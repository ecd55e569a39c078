#include "perflat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "perflat/geometry.hpp"
#include "perflat/isometry.hpp"
#include "perflat/linalg.hpp"
#include "perflat/minvec.hpp"
#include "perflat/overlattice.hpp"
#include "perflat/perfection.hpp"

namespace perflat {

namespace {

// Candidate lattice vector in the overlattice, stored as integer numerators
// over the common denominator q.
using Cand = std::vector<long>;

// All lattice points of the overlattice with coordinates in [-1, 1],
// excluding zero, one per antipodal pair.
std::vector<Cand> cube_candidates(const Overlattice& o, unsigned d) {
  const long q = static_cast<long>(o.denominator.get_si());
  QMat binv = *inverse(o.basis());
  std::vector<Cand> out;
  Cand m(d, 0);
  std::function<void(unsigned)> walk = [&](unsigned k) {
    if (k == d) {
      bool zero = std::all_of(m.begin(), m.end(), [](long v) { return v == 0; });
      if (zero) return;
      // antipodal normalisation
      for (long v : m) {
        if (v > 0) break;
        if (v < 0) return;
      }
      // membership: m/q must have integer coordinates over the basis
      for (unsigned j = 0; j < d; ++j) {
        Rat s(0);
        for (unsigned i = 0; i < d; ++i)
          if (m[i] != 0) s += Rat(m[i], q) * binv(i, j);
        if (s.get_den() != 1) return;
      }
      out.push_back(m);
      return;
    }
    for (long v = -q; v <= q; ++v) {
      m[k] = v;
      walk(k + 1);
    }
  };
  walk(0);
  return out;
}

bool is_basis_vector(const Cand& m, long q) {
  int nz = 0;
  for (long v : m) {
    if (v == 0) continue;
    ++nz;
    if (v != q) return false;  // candidates are sign-normalised
  }
  return nz == 1;
}

// Does the overlattice contain the standard basis as a hollow set?  The open
// cross-polytope must contain no nonzero lattice point: no point with
// l1-norm < 1.
bool basis_hollow(const Overlattice& o, unsigned d) {
  const long q = static_cast<long>(o.denominator.get_si());
  QMat binv = *inverse(o.basis());
  Cand m(d, 0);
  bool hollow = true;
  std::function<void(unsigned, long)> walk = [&](unsigned k, long l1) {
    if (!hollow) return;
    if (k == d) {
      if (l1 == 0 || l1 >= q) return;
      for (unsigned j = 0; j < d; ++j) {
        Rat s(0);
        for (unsigned i = 0; i < d; ++i)
          if (m[i] != 0) s += Rat(m[i], q) * binv(i, j);
        if (s.get_den() != 1) return;
      }
      hollow = false;
      return;
    }
    for (long v = -(q - 1); v <= q - 1; ++v) {
      m[k] = v;
      walk(k + 1, l1 + std::abs(v));
    }
  };
  walk(0, 0);
  return hollow;
}

// Canonical key of an overlattice under coordinate permutations and sign
// flips, for orbit deduplication.
std::string signed_perm_canonical_key(const Overlattice& o, unsigned d) {
  std::vector<unsigned> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    for (unsigned signs = 0; signs < (1u << d); ++signs) {
      IMat t(d, d);
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
          Int v = o.scaled_basis(i, perm[j]);
          if (signs >> j & 1) v = -v;
          t(i, j) = v;
        }
      IMat h = hnf_rows(t);
      std::string key;
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
          key += h(i, j).get_str();
          key += ',';
        }
      if (best.empty() || key < best) best = key;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Convex-hull acceleration: v may only extend the pool when the hull of
// +-b_1..+-b_d, +-v meets the lattice in its vertices only.
bool passes_hull_filter(const Overlattice& o, unsigned d, const Cand& v,
                        const std::vector<Cand>& all_points) {
  const long q = static_cast<long>(o.denominator.get_si());
  std::vector<IntVec> hull_pts;
  for (unsigned i = 0; i < d; ++i) {
    IntVec e(d, 0), f(d, 0);
    e[i] = q;
    f[i] = -q;
    hull_pts.push_back(e);
    hull_pts.push_back(f);
  }
  IntVec vv(d), nv(d);
  for (unsigned i = 0; i < d; ++i) {
    vv[i] = v[i];
    nv[i] = -v[i];
  }
  hull_pts.push_back(vv);
  hull_pts.push_back(nv);

  // every generator must be a vertex
  for (const IntVec& p : hull_pts)
    if (!is_hull_vertex(hull_pts, p)) return false;

  // no other lattice point of the cube may lie in the hull (scaled by q)
  for (const Cand& u : all_points) {
    IntVec uu(d);
    for (unsigned i = 0; i < d; ++i) uu[i] = u[i];
    bool is_gen = false;
    for (const IntVec& p : hull_pts)
      if (p == uu) is_gen = true;
    IntVec neg(d);
    for (unsigned i = 0; i < d; ++i) neg[i] = -uu[i];
    for (const IntVec& p : hull_pts)
      if (p == neg) is_gen = true;
    if (is_gen) continue;
    std::vector<Rat> pr(d), nr(d);
    for (unsigned i = 0; i < d; ++i) {
      pr[i] = Rat(uu[i]);
      nr[i] = Rat(neg[i]);
    }
    if (in_convex_hull(hull_pts, pr) || in_convex_hull(hull_pts, nr))
      return false;
  }
  return true;
}

// All square minors of the coordinate matrix lie in [-q^size, q^size]
// (integer scaling of the [-1,1] condition); conservative reading over all
// minor sizes.
bool minors_in_unit_box(const std::vector<const Cand*>& rows, unsigned d,
                        long q) {
  const std::size_t r = rows.size();
  std::vector<unsigned> cols(d);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t size = 1; size <= std::min<std::size_t>(r, d); ++size) {
    std::vector<std::size_t> ri(size);
    std::function<bool(std::size_t, std::size_t)> loop_rows =
        [&](std::size_t pos, std::size_t from) -> bool {
      if (pos == size) {
        std::vector<unsigned> ci(size);
        std::function<bool(std::size_t, unsigned)> loop_cols =
            [&](std::size_t cpos, unsigned cfrom) -> bool {
          if (cpos == size) {
            IMat sub(size, size);
            for (std::size_t a = 0; a < size; ++a)
              for (std::size_t b = 0; b < size; ++b)
                sub(a, b) = (*rows[ri[a]])[ci[b]];
            Int dd = det_int(sub);
            Int cap = pow_int(Int(q), size);
            return dd >= -cap && dd <= cap;
          }
          for (unsigned c = cfrom; c < d; ++c) {
            ci[cpos] = c;
            if (!loop_cols(cpos + 1, c + 1)) return false;
          }
          return true;
        };
        return loop_cols(0, 0);
      }
      for (std::size_t i = from; i < r; ++i) {
        ri[pos] = i;
        if (!loop_rows(pos + 1, i + 1)) return false;
      }
      return true;
    };
    if (!loop_rows(0, 0)) return false;
  }
  return true;
}

struct Eliminator {
  // augmented rows over the off-diagonal unknowns Q_ij (i<j), RHS last
  std::size_t unknowns;
  std::vector<std::vector<Rat>> rows;  // reduced, with leading pivots
  std::vector<std::size_t> lead;

  explicit Eliminator(std::size_t u) : unknowns(u) {}

  // returns false when the new equation is dependent (rank does not grow)
  bool push(std::vector<Rat> row) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row[lead[r]] == 0) continue;
      Rat f = row[lead[r]];
      for (std::size_t j = 0; j <= unknowns; ++j) row[j] -= f * rows[r][j];
    }
    std::size_t l = unknowns;
    for (std::size_t j = 0; j < unknowns; ++j)
      if (row[j] != 0) {
        l = j;
        break;
      }
    if (l == unknowns) return false;
    Rat inv = Rat(1) / row[l];
    for (std::size_t j = 0; j <= unknowns; ++j) row[j] *= inv;
    rows.push_back(std::move(row));
    lead.push_back(l);
    return true;
  }

  void pop() {
    rows.pop_back();
    lead.pop_back();
  }

  // full-rank back substitution
  std::vector<Rat> solve() const {
    std::vector<Rat> x(unknowns, Rat(0));
    for (std::size_t r = rows.size(); r-- > 0;) {
      Rat v = rows[r][unknowns];
      for (std::size_t j = lead[r] + 1; j < unknowns; ++j)
        v -= rows[r][j] * x[j];
      x[lead[r]] = v;
    }
    return x;
  }
};

std::string identify_root_lattice(const IMat& gram) {
  const unsigned d = static_cast<unsigned>(gram.rows());
  auto a_gram = [&](unsigned n) {
    IMat g(n, n);
    for (unsigned i = 0; i < n; ++i) {
      g(i, i) = 2;
      if (i + 1 < n) {
        g(i, i + 1) = -1;
        g(i + 1, i) = -1;
      }
    }
    return g;
  };
  if (isometry_equivalent(gram, a_gram(d))) return "A" + std::to_string(d);
  if (d == 4) {
    IMat d4{{Int(2), Int(-1), Int(0), Int(0)},
            {Int(-1), Int(2), Int(-1), Int(-1)},
            {Int(0), Int(-1), Int(2), Int(0)},
            {Int(0), Int(-1), Int(0), Int(2)}};
    if (isometry_equivalent(gram, d4)) return "D4";
  }
  return "";
}

IMat primitive_integral(const QMat& gram) {
  Int l = 1;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      l = lcm(l, gram(i, j).get_den());
  IMat g(gram.rows(), gram.cols());
  Int content = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      g(i, j) = Rat(gram(i, j) * Rat(l)).get_num();
      content = gcd(content, g(i, j));
    }
  if (content > 1)
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j) g(i, j) /= content;
  return g;
}

}  // namespace

std::vector<PerfectLatticeRecord> enumerate_perfect(
    unsigned d, const EnumerateOptions& options) {
  if (d < 2 || d > 4)
    throw domain_error("enumerate_perfect: supported for 2 <= d <= 4");
  if (d == 4 && !options.long_running)
    throw domain_error("enumerate_perfect: d = 4 requires the long option");

  static const long best_id[5] = {0, 0, 1, 1, 2};
  const Int max_index(best_id[d]);

  std::vector<Overlattice> lats = overlattices(d, max_index);
  if (options.symmetry_reduction) {
    std::vector<Overlattice> reduced;
    std::vector<std::string> seen;
    for (const Overlattice& o : lats) {
      std::string key = signed_perm_canonical_key(o, d);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        reduced.push_back(o);
      }
    }
    lats = std::move(reduced);
  }

  std::uint64_t nodes = 0;
  std::vector<PerfectLatticeRecord> records;

  for (const Overlattice& o : lats) {
    if (!basis_hollow(o, d)) continue;
    const long q = static_cast<long>(o.denominator.get_si());

    std::vector<Cand> cube = cube_candidates(o, d);
    std::vector<Cand> pool;
    for (const Cand& m : cube) {
      if (is_basis_vector(m, q)) continue;
      if (options.hull_pruning && !passes_hull_filter(o, d, m, cube)) continue;
      pool.push_back(m);
    }

    const std::size_t need = d * (d - 1) / 2;
    Eliminator elim(need);
    std::vector<const Cand*> chosen;

    auto emit = [&]() {
      std::vector<Rat> offdiag = elim.solve();
      QMat quad(d, d);
      std::size_t c = 0;
      for (unsigned i = 0; i < d; ++i) {
        quad(i, i) = 1;
        for (unsigned j = i + 1; j < d; ++j) {
          quad(i, j) = offdiag[c];
          quad(j, i) = offdiag[c];
          ++c;
        }
      }
      if (!is_positive_definite(quad)) return;
      // gram of the overlattice under the new form
      QMat b = o.basis();
      QMat gram_q(d, d);
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
          Rat s(0);
          for (unsigned k = 0; k < d; ++k)
            for (unsigned l = 0; l < d; ++l)
              s += b(i, k) * quad(k, l) * b(j, l);
          gram_q(i, j) = s;
        }
      // exact minimum check: no vector shorter than the perfect set's norm 1
      Int scale = 1;
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) scale = lcm(scale, gram_q(i, j).get_den());
      IMat gram_i(d, d);
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
          gram_i(i, j) = Rat(gram_q(i, j) * Rat(scale)).get_num();
      MinimalVectorSet mins = minimal_vectors_general(gram_i);
      if (mins.minimum != scale) return;  // a vector shorter than 1 exists

      IMat prim = primitive_integral(gram_q);
      MinimalVectorSet prim_mins = minimal_vectors_general(prim);
      PerfectLatticeRecord rec;
      rec.dimension = d;
      rec.gram = prim;
      rec.determinant = det_int(prim);
      rec.kissing_pairs = prim_mins.pairs();
      rec.d2_rank = symmetric_rank(prim_mins.reps);
      rec.overlattice_index = o.index;
      for (const PerfectLatticeRecord& r : records) {
        if (r.determinant != rec.determinant ||
            r.kissing_pairs != rec.kissing_pairs)
          continue;
        if (isometry_equivalent(r.gram, rec.gram)) return;  // duplicate
      }
      rec.label = identify_root_lattice(prim);
      records.push_back(std::move(rec));
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
      if (chosen.size() == need) {
        emit();
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool.size() - i < need - chosen.size()) break;
        if (++nodes > options.node_budget)
          throw resource_limit_error("enumerate_perfect: node budget exceeded");
        const Cand& v = pool[i];
        // equation 2 sum_{i<j} m_i m_j Q_ij = q^2 - sum m_i^2
        std::vector<Rat> row(need + 1, Rat(0));
        std::size_t c = 0;
        long norm = 0;
        for (unsigned a = 0; a < d; ++a) norm += v[a] * v[a];
        for (unsigned a = 0; a < d; ++a)
          for (unsigned b2 = a + 1; b2 < d; ++b2)
            row[c++] = Rat(2 * v[a] * v[b2]);
        row[need] = Rat(q * q - norm);
        if (!elim.push(std::move(row))) continue;
        chosen.push_back(&v);
        bool ok = true;
        if (options.minor_pruning) {
          std::vector<const Cand*> with_basis;
          // basis rows are q * e_i
          static thread_local std::vector<Cand> basis_rows;
          basis_rows.clear();
          for (unsigned a = 0; a < d; ++a) {
            Cand e(d, 0);
            e[a] = q;
            basis_rows.push_back(e);
          }
          for (const Cand& e : basis_rows) with_basis.push_back(&e);
          for (const Cand* p : chosen) with_basis.push_back(p);
          ok = minors_in_unit_box(with_basis, d, q);
        }
        if (ok) dfs(i + 1);
        chosen.pop_back();
        elim.pop();
      }
    };
    dfs(0);
  }

  std::sort(records.begin(), records.end(),
            [](const PerfectLatticeRecord& a, const PerfectLatticeRecord& b) {
              if (a.determinant != b.determinant)
                return a.determinant < b.determinant;
              for (std::size_t i = 0; i < a.gram.rows(); ++i)
                for (std::size_t j = 0; j < a.gram.cols(); ++j)
                  if (a.gram(i, j) != b.gram(i, j))
                    return a.gram(i, j) < b.gram(i, j);
              return false;
            });
  return records;
}

}  // namespace perflat
