#include "perflat/minvec.hpp"

#include <algorithm>

#include "perflat/linalg.hpp"

namespace perflat {

IMat MinimalVectorSet::pair_gram(const IMat& gram) const {
  const std::size_t n = reps.size();
  IMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Int v = gram_product(gram, reps[i], reps[j]);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

namespace {

// G = L D L^T with L unit lower triangular.  Throws on non-PD input.
void ldl(const IMat& gram, QMat& l, std::vector<Rat>& d) {
  const std::size_t n = gram.rows();
  l = QMat(n, n);
  d.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) {
      Rat s = Rat(gram(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k) * d[k];
      l(i, j) = s / d[j];
    }
    Rat s = Rat(gram(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * l(i, k) * d[k];
    if (sgn(s) <= 0) throw domain_error("gram matrix is not positive definite");
    d[i] = s;
  }
}

void normalize_sign(IntVec& v) {
  for (const Int& c : v) {
    if (c != 0) {
      if (c < 0)
        for (Int& x : v) x = -x;
      return;
    }
  }
}

}  // namespace

void enumerate_short_vectors(
    const IMat& gram, const Int& bound,
    const std::function<void(const IntVec&, const Int&)>& visit) {
  if (!is_symmetric(gram)) throw domain_error("gram matrix must be symmetric");
  const std::size_t n = gram.rows();
  QMat l;
  std::vector<Rat> d;
  ldl(gram, l, d);

  // Q(x) = sum_i d_i (x_i + sum_{j>i} l_{ji} x_j)^2, recursed from the last
  // coordinate down; at each level the admissible integer window is computed
  // by exact comparisons.
  IntVec x(n, 0);

  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t i,
                                                         const Rat& budget) {
    Rat c(0);
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += l(j, i) * Rat(x[j]);
    // d_i (t + c)^2 <= budget  <=>  (t*q + p)^2 <= M * q^2
    // with c = p/q and M = budget/d_i.  The integer window for s = t*q + p
    // is exactly [-smax, smax] with smax = isqrt(floor(M * q^2)).
    Rat ratio = budget / d[i];
    const Int& p = c.get_num();
    const Int& q = c.get_den();
    Int limit2_num = ratio.get_num() * q * q;
    const Int& limit2_den = ratio.get_den();
    Int smax = isqrt(limit2_num / limit2_den);
    Int t_lo = ceil_div(-smax - p, q);
    Int t_hi = floor_div(smax - p, q);
    for (Int t = t_lo; t <= t_hi; ++t) {
      x[i] = t;
      Rat term = Rat(t) + c;
      Rat rest = budget - d[i] * term * term;
      if (sgn(rest) < 0) continue;
      if (i == 0) {
        bool zero = std::all_of(x.begin(), x.end(),
                                [](const Int& v) { return v == 0; });
        if (!zero) {
          // Report one representative per antipodal pair.
          std::size_t first = 0;
          while (x[first] == 0) ++first;
          if (x[first] > 0) visit(x, gram_product(gram, x, x));
        }
      } else {
        rec(i - 1, rest);
      }
    }
    x[i] = 0;
  };

  if (n == 0) return;
  rec(n - 1, Rat(bound));
}

MinimalVectorSet minimal_vectors_general(const IMat& gram) {
  if (!is_positive_definite(gram))
    throw domain_error("minimal_vectors_general: gram not positive definite");
  const std::size_t n = gram.rows();
  Int bound = gram(0, 0);
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, gram(i, i));

  MinimalVectorSet out;
  out.minimum = bound;
  enumerate_short_vectors(gram, bound, [&](const IntVec& v, const Int& norm) {
    if (norm > out.minimum) return;
    if (norm < out.minimum) {
      out.minimum = norm;
      out.reps.clear();
    }
    out.reps.push_back(v);
  });
  for (auto& v : out.reps) normalize_sign(v);
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

MinimalVectorSet minimal_vectors_general(const QMat& gram) {
  // Clear the common denominator; representatives are unchanged and the
  // minimum rescales back exactly.
  Int l = 1;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      l = lcm(l, gram(i, j).get_den());
  IMat g(gram.rows(), gram.cols());
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      g(i, j) = Rat(gram(i, j) * Rat(l)).get_num();
  MinimalVectorSet m = minimal_vectors_general(g);
  // Callers dealing with rational gram matrices divide by l themselves when
  // they need the rational minimum; here the minimum is reported in the
  // scaled (integral) metric only if it stays integral.
  Rat scaled_min = Rat(m.minimum) / Rat(l);
  if (scaled_min.get_den() == 1) m.minimum = scaled_min.get_num();
  else
    throw domain_error("rational gram has non-integral minimum; scale first");
  return m;
}

std::vector<IntVec> vectors_of_norm(const IMat& gram, const Int& norm) {
  std::vector<IntVec> out;
  enumerate_short_vectors(gram, norm, [&](const IntVec& v, const Int& nv) {
    if (nv == norm) out.push_back(v);
  });
  for (auto& v : out) normalize_sign(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace perflat
