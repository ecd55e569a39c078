#include "perflat/linalg.hpp"

#include <algorithm>

namespace perflat {

namespace {

// Clears denominators row by row; rank and row space over Q are unchanged.
IMat clear_denominators(const QMat& m) {
  IMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(l);
      out(i, j) = v.get_num();
    }
  }
  return out;
}

}  // namespace

std::size_t rank_rational(const IMat& m) {
  if (m.empty()) throw domain_error("rank of empty matrix");
  IMat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(rank, piv);
    const Int pivot = a(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a(i, j) = (pivot * a(i, j) - a(i, col) * a(rank, j)) / prev;
      a(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const QMat& m) {
  if (m.empty()) throw domain_error("rank of empty matrix");
  return rank_rational(clear_denominators(m));
}

Int det_int(const IMat& m) {
  if (m.rows() != m.cols()) throw domain_error("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IMat a = m;
  Int prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return s > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det_rat(const QMat& m) {
  if (m.rows() != m.cols()) throw domain_error("det of non-square matrix");
  const std::size_t n = m.rows();
  Rat scale = 1;
  QMat a = m;
  // Scale rows to integers, track the factor, then Bareiss on integers.
  IMat b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, a(i, j).get_den());
    scale /= Rat(l);
    for (std::size_t j = 0; j < n; ++j) b(i, j) = Rat(a(i, j) * Rat(l)).get_num();
  }
  return scale * Rat(det_int(b));
}

std::optional<std::vector<Rat>> solve_square(const QMat& a,
                                             const std::vector<Rat>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw domain_error("solve shape");
  QMat m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return std::nullopt;
    m.swap_rows(k, piv);
    const Rat inv = Rat(1) / m(k, k);
    for (std::size_t j = k; j <= n; ++j) m(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rat f = m(i, k);
      for (std::size_t j = k; j <= n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n);
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw domain_error("inverse of non-square matrix");
  QMat a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(k, piv);
    const Rat inv = Rat(1) / a(k, k);
    for (std::size_t j = k; j < 2 * n; ++j) a(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rat f = a(i, k);
      for (std::size_t j = k; j < 2 * n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  QMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

namespace {

template <typename M>
bool leading_minors_positive(const M& gram) {
  if (gram.rows() != gram.cols() || gram.empty()) return false;
  const std::size_t n = gram.rows();
  QMat a = [&] {
    QMat q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = Rat(gram(i, j));
    return q;
  }();
  // Fraction-free-ish LDL: pivots d_k are ratios of leading minors, so all
  // minors positive <=> all pivots positive.
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace

bool is_positive_definite(const IMat& gram) {
  return is_symmetric(gram) && leading_minors_positive(gram);
}

bool is_positive_definite(const QMat& gram) {
  return is_symmetric(gram) && leading_minors_positive(gram);
}

namespace {

// Row HNF with optional transform accumulation: u * m_in = hnf (before
// dropping zero rows).
IMat hnf_rows_impl(const IMat& m, IMat* u_out) {
  IMat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IMat u = IMat::identity(rows);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // Euclidean reduction of column `col` among rows r..end.
    while (true) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a(i, col) == 0) continue;
        if (piv == rows || abs(a(i, col)) < abs(a(piv, col))) piv = i;
      }
      if (piv == rows) break;
      a.swap_rows(r, piv);
      u.swap_rows(r, piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, col) == 0) continue;
        Int q = floor_div(a(i, col), a(r, col));
        if (q != 0) {
          for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
          for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
        }
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
      for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
    }
    // Reduce the rows above into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a(i, col), a(r, col));
      if (q != 0) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
        for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
      }
    }
    ++r;
  }
  if (u_out) *u_out = u;
  if (r == rows) return a;
  IMat out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace

IMat hnf_rows(const IMat& m) { return hnf_rows_impl(m, nullptr); }

IMat kernel_basis(const IMat& m) {
  // Reduce m^T by unimodular row operations; rows of the transform that end
  // on zero rows of the echelon form span {x : m*x = 0}, saturated.
  IMat t = m.transposed();
  IMat u;
  IMat a = t;
  const std::size_t rows = a.rows();
  IMat h = hnf_rows_impl(a, &u);
  const std::size_t r = h.rows();
  IMat k(rows - r, m.cols());
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) k(i - r, j) = u(i, j);
  return hnf_rows(k);
}

std::pair<IMat, IMat> lll_reduce_gram(const IMat& gram) {
  if (!is_positive_definite(gram))
    throw domain_error("lll_reduce_gram: gram not positive definite");
  const std::size_t n = gram.rows();
  IMat g = gram;
  IMat u = IMat::identity(n);

  // Gram-Schmidt data mu, B (squared norms of the orthogonalised vectors),
  // recomputed from g on demand.
  QMat mu(n, n);
  std::vector<Rat> B(n);
  auto recompute = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rat s = Rat(g(i, j));
        for (std::size_t k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * B[k];
        mu(i, j) = s / B[j];
      }
      Rat b = Rat(g(i, i));
      for (std::size_t k = 0; k < i; ++k) b -= mu(i, k) * mu(i, k) * B[k];
      B[i] = b;
    }
  };

  // b_i <- b_i - q * b_j, applied to both u and g.  The diagonal entry uses
  // the old g_ij, so it is captured first.
  auto apply_translate = [&](std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    Int gij = g(i, j), gjj = g(j, j);
    for (std::size_t k = 0; k < n; ++k) u(i, k) -= q * u(j, k);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) {
        g(i, k) -= q * g(j, k);
        g(k, i) = g(i, k);
      }
    }
    g(i, i) = g(i, i) - 2 * q * gij + q * q * gjj;
  };

  auto swap_basis = [&](std::size_t i, std::size_t j) {
    u.swap_rows(i, j);
    g.swap_rows(i, j);
    for (std::size_t k = 0; k < n; ++k) std::swap(g(k, i), g(k, j));
  };

  recompute();
  std::size_t k = 1;
  const Rat delta(3, 4);
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Rat m2 = 2 * mu(k, j);
      if (m2 > 1 || m2 < -1) {
        Int q = floor_rat(mu(k, j) + Rat(1, 2));
        apply_translate(k, j, q);
        recompute();
      }
    }
    if (B[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1]) {
      ++k;
    } else {
      swap_basis(k, k - 1);
      recompute();
      k = std::max<std::size_t>(1, k - 1);
    }
  }
  return {g, u};
}

}  // namespace perflat
