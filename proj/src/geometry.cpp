#include "perflat/geometry.hpp"

#include <algorithm>
#include <functional>

#include "perflat/linalg.hpp"

namespace perflat {

namespace {

// ---------------------------------------------------------------------------
// Dense exact simplex: max c^T x subject to A x = b, x >= 0.
// Bland's rule, two phases.  Returns the optimum; nullopt when infeasible.
// All problems solved here are bounded polytopes, so unboundedness is an
// internal error.
std::optional<Rat> lp_maximize(QMat a, std::vector<Rat> b, std::vector<Rat> c) {
  const std::size_t m = a.rows();
  const std::size_t n0 = a.cols();
  for (std::size_t i = 0; i < m; ++i)
    if (sgn(b[i]) < 0) {
      for (std::size_t j = 0; j < n0; ++j) a(i, j) = -a(i, j);
      b[i] = -b[i];
    }

  // Tableau over columns [x | artificials], rows [constraints | z-row].
  const std::size_t n = n0 + m;
  QMat t(m + 1, n + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n0; ++j) t(i, j) = a(i, j);
    t(i, n0 + i) = 1;
    t(i, n) = b[i];
    basis[i] = n0 + i;
  }

  auto pivot = [&](std::size_t row, std::size_t col) {
    Rat inv = Rat(1) / t(row, col);
    for (std::size_t j = 0; j <= n; ++j) t(row, j) *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || t(i, col) == 0) continue;
      Rat f = t(i, col);
      for (std::size_t j = 0; j <= n; ++j) t(i, j) -= f * t(row, j);
    }
    basis[row] = col;
  };

  auto run = [&](std::size_t ncols) -> bool {
    while (true) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (sgn(t(m, j)) > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      if (enter == ncols) return true;
      std::size_t leave = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(t(i, enter)) <= 0) continue;
        if (leave == m) {
          leave = i;
          continue;
        }
        Rat cur = t(i, n) / t(i, enter);
        Rat best = t(leave, n) / t(leave, enter);
        if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  };

  // Phase 1: maximize -sum(artificials).
  for (std::size_t j = n0; j < n; ++j) t(m, j) = -1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) t(m, j) += t(i, j);
  if (!run(n)) throw domain_error("lp: phase 1 unbounded");
  if (sgn(t(m, n)) != 0) return std::nullopt;  // infeasible

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n0) continue;
    std::size_t col = n0;
    for (std::size_t j = 0; j < n0; ++j)
      if (t(i, j) != 0) {
        col = j;
        break;
      }
    if (col < n0) pivot(i, col);
    // otherwise the row is redundant; the artificial stays at value 0
  }

  // Phase 2 objective.
  for (std::size_t j = 0; j <= n; ++j) t(m, j) = 0;
  for (std::size_t j = 0; j < n0; ++j) t(m, j) = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n0) continue;
    Rat f = t(m, basis[i]);
    if (f == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) t(m, j) -= f * t(i, j);
  }
  if (!run(n0)) throw domain_error("lp: phase 2 unbounded");
  return -t(m, n);
}

QMat hull_constraints(const std::vector<IntVec>& points, std::size_t d) {
  // columns: one lambda per point; rows: d coordinate equations + sum = 1
  QMat a(d + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = Rat(points[j][i]);
    a(d, j) = 1;
  }
  return a;
}

}  // namespace

bool in_convex_hull(const std::vector<IntVec>& points,
                    const std::vector<Rat>& p) {
  if (points.empty()) return false;
  const std::size_t d = points[0].size();
  QMat a = hull_constraints(points, d);
  std::vector<Rat> b(d + 1);
  for (std::size_t i = 0; i < d; ++i) b[i] = p[i];
  b[d] = 1;
  std::vector<Rat> c(points.size(), Rat(0));
  return lp_maximize(a, b, c).has_value();
}

bool in_hull_interior(const std::vector<IntVec>& points,
                      const std::vector<Rat>& p) {
  if (points.empty()) return false;
  const std::size_t d = points[0].size();
  // p interior iff p +- delta e_i stays in the hull with delta > 0 for every
  // direction: maximize delta subject to  sum lambda_j v_j - delta e = p.
  for (std::size_t dir = 0; dir < 2 * d; ++dir) {
    const std::size_t axis = dir / 2;
    const int s = dir % 2 ? -1 : 1;
    QMat a(d + 1, points.size() + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) a(i, j) = Rat(points[j][i]);
      a(d, j) = 1;
    }
    a(axis, points.size()) = Rat(-s);
    std::vector<Rat> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) b[i] = p[i];
    b[d] = 1;
    std::vector<Rat> c(points.size() + 1, Rat(0));
    c[points.size()] = 1;
    auto opt = lp_maximize(a, b, c);
    if (!opt || sgn(*opt) <= 0) return false;
  }
  return true;
}

bool is_hull_vertex(const std::vector<IntVec>& points, const IntVec& v) {
  std::vector<IntVec> rest;
  for (const IntVec& p : points)
    if (p != v) rest.push_back(p);
  if (rest.empty()) return true;
  std::vector<Rat> p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rat(v[i]);
  return !in_convex_hull(rest, p);
}

std::pair<bool, Int> hollow_index(const IMat& generators) {
  const std::size_t d = generators.rows();
  if (generators.cols() != d) throw domain_error("hollow_index: need d x d");
  if (d > 6) throw domain_error("hollow_index: supported for d <= 6 only");
  Int index = det_int(generators);
  if (index == 0) throw domain_error("hollow_index: dependent generators");
  if (index < 0) index = -index;

  // conv(+-v_1..+-v_d) is the cross-polytope {sum x_i v_i : sum |x_i| <= 1};
  // a lattice point is interior iff its coordinate vector has l1-norm < 1.
  QMat vinv = *inverse(to_rational(generators));
  std::vector<long> box(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    Int m = 0;
    for (std::size_t i = 0; i < d; ++i) m = std::max(m, Int(abs(generators(i, k))));
    box[k] = static_cast<long>(m.get_si());
  }
  std::vector<long> p(d, 0);
  bool hollow = true;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (!hollow) return;
    if (k == d) {
      bool zero = std::all_of(p.begin(), p.end(), [](long x) { return x == 0; });
      if (zero) return;
      // x = p * V^{-1} (row vector times inverse), l1 norm
      Rat l1(0);
      for (std::size_t i = 0; i < d; ++i) {
        Rat xi(0);
        for (std::size_t j = 0; j < d; ++j)
          if (p[j] != 0) xi += Rat(p[j]) * vinv(j, i);
        l1 += xi < 0 ? -xi : xi;
      }
      if (l1 < 1) hollow = false;
      return;
    }
    for (long v = -box[k]; v <= box[k]; ++v) {
      p[k] = v;
      walk(k + 1);
    }
  };
  walk(0);
  return {hollow, index};
}

std::vector<IntVec> interior_lattice_points(const std::vector<IntVec>& half_v) {
  if (half_v.empty()) throw domain_error("interior_lattice_points: empty set");
  const std::size_t d = half_v[0].size();
  if (d > 5)
    throw domain_error("interior_lattice_points: supported for d <= 5 only");
  std::vector<IntVec> pts;
  for (const IntVec& v : half_v) {
    pts.push_back(v);
    IntVec n(d);
    for (std::size_t i = 0; i < d; ++i) n[i] = -v[i];
    pts.push_back(std::move(n));
  }
  IMat m(half_v.size(), d);
  for (std::size_t i = 0; i < half_v.size(); ++i) m.set_row(i, half_v[i]);
  if (rank_rational(m) != d)
    throw domain_error("interior_lattice_points: hull is not full-dimensional");

  std::vector<long> box(d, 0);
  for (const IntVec& v : pts)
    for (std::size_t k = 0; k < d; ++k)
      box[k] = std::max(box[k], std::labs(v[k].get_si()));

  // Cheap linear-functional filter: for any u in the hull and any point w,
  // u.w is bounded by the extremes over the vertices.
  std::vector<Int> fbound(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Int mmax = 0;
    for (const IntVec& v : pts) mmax = std::max(mmax, Int(abs(dot(pts[i], v))));
    fbound[i] = mmax;
  }

  std::vector<IntVec> interior;
  std::vector<long> p(d, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == d) {
      IntVec q(d);
      for (std::size_t i = 0; i < d; ++i) q[i] = p[i];
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (abs(dot(pts[i], q)) > fbound[i]) return;
      std::vector<Rat> qr(d);
      for (std::size_t i = 0; i < d; ++i) qr[i] = Rat(q[i]);
      if (in_hull_interior(pts, qr)) interior.push_back(q);
      return;
    }
    for (long v = -box[k]; v <= box[k]; ++v) {
      p[k] = v;
      walk(k + 1);
    }
  };
  walk(0);
  std::sort(interior.begin(), interior.end());
  return interior;
}

SmallHeightBasis small_height_basis(const IMat& vectors) {
  const std::size_t d = vectors.rows();
  if (vectors.cols() != d) throw domain_error("small_height_basis: need d x d");
  Int index = det_int(vectors);
  if (index == 0)
    throw domain_error("small_height_basis: dependent vectors");
  if (index < 0) index = -index;

  std::function<IMat(const IMat&)> build = [&](const IMat& v) -> IMat {
    const std::size_t n = v.rows();
    if (n == 1) {
      IMat f(1, 1);
      f(0, 0) = v(0, 0) > 0 ? 1 : -1;
      return f;
    }
    // pi(v_0) = 1, pi(v_i) = 0: pi is the first column of v^{-1}.
    QMat vinv = *inverse(to_rational(v));
    Int q = 1;
    for (std::size_t i = 0; i < n; ++i) q = lcm(q, vinv(i, 0).get_den());
    IntVec u(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = Rat(vinv(i, 0) * Rat(q)).get_num();
      g = gcd(g, u[i]);
    }
    Int a = q / g;  // pi(Z^n) = (1/a) Z

    // ker(pi) as a saturated sublattice, and the remaining vectors in its
    // coordinates.
    IMat urow(1, n);
    for (std::size_t i = 0; i < n; ++i) urow(0, i) = u[i];
    IMat kb = kernel_basis(urow);  // (n-1) x n
    QMat kbq = to_rational(kb);
    QMat kbt_inv;  // solve c * kb = v_i  =>  kb^T c^T = v_i^T
    QMat kbt(n, n - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) kbt(i, j) = kbq(j, i);
    IMat sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      // least-squares-free consistent solve: use the first n-1 independent
      // rows of kb^T via full Gaussian elimination on the rectangular system
      QMat aug(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) aug(i, j) = kbt(i, j);
        aug(i, n - 1) = Rat(v(r, i));
      }
      // eliminate
      std::size_t row = 0;
      std::vector<Rat> sol(n - 1, Rat(0));
      std::vector<std::size_t> pivot_col;
      for (std::size_t col = 0; col + 1 < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && aug(piv, col) == 0) ++piv;
        if (piv == n) continue;
        aug.swap_rows(row, piv);
        Rat inv = Rat(1) / aug(row, col);
        for (std::size_t j = col; j < n; ++j) aug(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == row || aug(i, col) == 0) continue;
          Rat f = aug(i, col);
          for (std::size_t j = col; j < n; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_col.push_back(col);
        ++row;
      }
      for (std::size_t i = 0; i < pivot_col.size(); ++i)
        sol[pivot_col[i]] = aug(i, n - 1);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (sol[j].get_den() != 1)
          throw domain_error("internal: non-integral kernel coordinates");
        sub(r - 1, j) = sol[j].get_num();
      }
    }

    IMat fsub = build(sub);  // (n-1) x (n-1) basis of ker(pi) in kb coords
    // Solve u . x = g for an integer x, by iterated extended gcd.
    IntVec x(n, 0);
    {
      Int acc = 0;
      IntVec coef(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        if (acc == 0) {
          acc = u[i];
          coef[i] = 1;
          continue;
        }
        Int gg, s, t;
        mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   acc.get_mpz_t(), u[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) coef[j] *= s;
        coef[i] = t;
        acc = gg;
      }
      // acc == +-g
      if (acc == -g)
        for (Int& cc : coef) cc = -cc;
      x = coef;
    }
    // Reduce x into the half-open fundamental parallelepiped of the v_i for
    // coordinates 1..n-1 (coordinate 0 is pinned at 1/a).
    std::vector<Rat> mu(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat s(0);
      for (std::size_t j = 0; j < n; ++j) s += Rat(x[j]) * vinv(j, i);
      mu[i] = s;
    }
    for (std::size_t i = 1; i < n; ++i) {
      Int fl = floor_rat(mu[i]);
      if (fl != 0)
        for (std::size_t j = 0; j < n; ++j) x[j] -= fl * v(i, j);
    }

    IMat f(n, n);
    for (std::size_t j = 0; j < n; ++j) f(0, j) = x[j];
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) s += fsub(i - 1, k) * kb(k, j);
        f(i, j) = s;
      }
    return f;
  };

  SmallHeightBasis out;
  out.index = index;
  out.basis = build(vectors);
  QMat alpha_q = to_rational(vectors) * *inverse(to_rational(out.basis));
  out.alpha = IMat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (alpha_q(i, j).get_den() != 1)
        throw domain_error("internal: non-integral small-height coordinates");
      out.alpha(i, j) = alpha_q(i, j).get_num();
    }
  return out;
}

std::vector<IntVec> root_representatives(RootType type, unsigned dim) {
  std::vector<IntVec> reps;
  if (type == RootType::A) {
    // A_d inside Z^{d+1}; basis b_i = e_i - e_{i+1}; the root e_i - e_j
    // (i < j) has lattice coordinates 1 at positions i..j-1.
    for (unsigned i = 0; i < dim + 1; ++i)
      for (unsigned j = i + 1; j < dim + 1; ++j) {
        IntVec v(dim, 0);
        for (unsigned k = i; k < j; ++k) v[k] = 1;
        reps.push_back(std::move(v));
      }
  } else {
    if (dim < 3) throw domain_error("root_representatives: D needs dim >= 3");
    // D_n basis: f_1 = e_1 + e_2, f_i = e_{i-1} - e_i (i >= 2).
    IMat basis(dim, dim);
    basis(0, 0) = 1;
    basis(0, 1) = 1;
    for (unsigned i = 1; i < dim; ++i) {
      basis(i, i - 1) = 1;
      basis(i, i) = -1;
    }
    QMat binv = *inverse(to_rational(basis));
    auto to_coords = [&](const IntVec& ambient) {
      IntVec c(dim);
      for (unsigned j = 0; j < dim; ++j) {
        Rat s(0);
        for (unsigned i = 0; i < dim; ++i)
          if (ambient[i] != 0) s += Rat(ambient[i]) * binv(i, j);
        if (s.get_den() != 1)
          throw domain_error("internal: root not in D lattice");
        c[j] = s.get_num();
      }
      return c;
    };
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = i + 1; j < dim; ++j)
        for (int s : {1, -1}) {
          IntVec amb(dim, 0);
          amb[i] = 1;
          amb[j] = s;
          reps.push_back(to_coords(amb));
        }
  }
  return reps;
}

namespace {

// Gram matrices of the ambient quadratic form in lattice coordinates.
IMat root_gram(RootType type, unsigned dim) {
  IMat g(dim, dim);
  if (type == RootType::A) {
    for (unsigned i = 0; i < dim; ++i) {
      g(i, i) = 2;
      if (i + 1 < dim) {
        g(i, i + 1) = -1;
        g(i + 1, i) = -1;
      }
    }
  } else {
    IMat basis(dim, dim);
    basis(0, 0) = 1;
    basis(0, 1) = 1;
    for (unsigned i = 1; i < dim; ++i) {
      basis(i, i - 1) = 1;
      basis(i, i) = -1;
    }
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = 0; j < dim; ++j) {
        Int s = 0;
        for (unsigned k = 0; k < dim; ++k) s += basis(i, k) * basis(j, k);
        g(i, j) = s;
      }
  }
  return g;
}

Int gram_det_of(const std::vector<const IntVec*>& chosen, const IMat& metric) {
  const std::size_t k = chosen.size();
  IMat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Int s = gram_product(metric, *chosen[i], *chosen[j]);
      g(i, j) = s;
      g(j, i) = s;
    }
  return det_int(g);
}

}  // namespace

Int root_index_maximum(RootType type, unsigned dim) {
  std::vector<IntVec> reps = root_representatives(type, dim);
  IMat metric = root_gram(type, dim);
  const Int det_metric = det_int(metric);

  // Greedy seed: extend by the representative that maximises the Gram
  // determinant of the chosen prefix.
  Int best = 0;
  {
    std::vector<const IntVec*> chosen;
    std::vector<bool> used(reps.size(), false);
    for (unsigned step = 0; step < dim; ++step) {
      Int best_det = -1;
      std::size_t best_i = reps.size();
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (used[i]) continue;
        chosen.push_back(&reps[i]);
        Int dgi = gram_det_of(chosen, metric);
        chosen.pop_back();
        if (dgi > best_det) {
          best_det = dgi;
          best_i = i;
        }
      }
      used[best_i] = true;
      chosen.push_back(&reps[best_i]);
    }
    IMat coords(dim, dim);
    for (unsigned i = 0; i < dim; ++i) coords.set_row(i, *chosen[i]);
    best = abs(det_int(coords));
  }

  // Exhaustive branch and bound.  Fischer: det(Gram(full)) is at most
  // det(Gram(prefix)) times the product of the remaining norms (all 2), so a
  // branch is dead once that product cannot beat best^2 * det(metric).
  std::vector<const IntVec*> chosen;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (chosen.size() == dim) {
      IMat coords(dim, dim);
      for (unsigned i = 0; i < dim; ++i) coords.set_row(i, *chosen[i]);
      Int v = abs(det_int(coords));
      if (v > best) best = v;
      return;
    }
    for (std::size_t i = from; i < reps.size(); ++i) {
      if (reps.size() - i < dim - chosen.size()) break;
      chosen.push_back(&reps[i]);
      Int dg = gram_det_of(chosen, metric);
      if (dg > 0) {
        Int cap = dg * pow_int(2, dim - chosen.size());
        if (cap > best * best * det_metric) dfs(i + 1);
      }
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

Int root_lattice_extremes(RootType type, unsigned dim) {
  if (type == RootType::A && dim < 1)
    throw domain_error("root_lattice_extremes: A needs dim >= 1");
  if (type == RootType::D && (dim < 4 || dim % 2 != 0))
    throw domain_error(
        "root_lattice_extremes: D supported for even dim >= 4 only");
  return root_index_maximum(type, dim);
}

}  // namespace perflat
