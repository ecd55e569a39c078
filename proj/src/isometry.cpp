#include "perflat/isometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "perflat/linalg.hpp"
#include "perflat/minvec.hpp"

namespace perflat {

namespace {

struct Search {
  const IMat& r1;
  std::size_t n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  // candidate vectors per target row, both signs included
  std::vector<std::vector<IntVec>> cands;
  const IMat& r2;
  const std::vector<std::size_t>& order;
  std::vector<IntVec> placed;

  bool extend(std::size_t level) {
    if (level == n) return true;
    const std::size_t k = order[level];
    for (const IntVec& v : cands[level]) {
      if (++nodes > budget)
        throw resource_limit_error("isometry search exceeded node budget");
      bool ok = true;
      for (std::size_t l = 0; l < level && ok; ++l) {
        Int ip = gram_product(r1, v, placed[l]);
        if (ip != r2(k, order[l])) ok = false;
      }
      if (!ok) continue;
      placed.push_back(v);
      if (extend(level + 1)) return true;
      placed.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<IMat> isometry_equivalent(const IMat& g1, const IMat& g2,
                                        std::uint64_t node_budget) {
  if (g1.rows() != g2.rows()) return std::nullopt;
  if (!is_positive_definite(g1) || !is_positive_definite(g2))
    throw domain_error("isometry_equivalent: inputs must be positive definite");
  const std::size_t n = g1.rows();
  if (det_int(g1) != det_int(g2)) return std::nullopt;

  auto [r1, t1] = lll_reduce_gram(g1);
  auto [r2, t2] = lll_reduce_gram(g2);

  MinimalVectorSet m1 = minimal_vectors_general(r1);
  MinimalVectorSet m2 = minimal_vectors_general(r2);
  if (m1.minimum != m2.minimum || m1.pairs() != m2.pairs())
    return std::nullopt;

  // Candidate vectors in lattice 1 for each basis vector of lattice 2,
  // grouped by norm.
  std::map<Int, std::vector<IntVec>> by_norm;
  for (std::size_t k = 0; k < n; ++k) {
    const Int& norm = r2(k, k);
    if (by_norm.count(norm)) continue;
    std::vector<IntVec> signed_cands;
    for (const IntVec& v : vectors_of_norm(r1, norm)) {
      signed_cands.push_back(v);
      IntVec neg(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
      signed_cands.push_back(std::move(neg));
    }
    by_norm.emplace(norm, std::move(signed_cands));
  }

  // Most-constrained rows first: by candidate count, then norm.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ca = by_norm[r2(a, a)].size(), cb = by_norm[r2(b, b)].size();
    if (ca != cb) return ca < cb;
    if (r2(a, a) != r2(b, b)) return r2(a, a) < r2(b, b);
    return a < b;
  });

  Search s{r1, n, node_budget, 0, {}, r2, order, {}};
  s.cands.resize(n);
  for (std::size_t level = 0; level < n; ++level)
    s.cands[level] = by_norm[r2(order[level], order[level])];
  if (s.cands.empty() && n > 0) return std::nullopt;
  for (std::size_t level = 0; level < n; ++level)
    if (s.cands[level].empty()) return std::nullopt;

  if (!s.extend(0)) return std::nullopt;

  // Rows of w, in the order of `order`, give images of the r2 basis inside
  // lattice r1: w * r1 * w^T = r2.
  IMat w(n, n);
  for (std::size_t level = 0; level < n; ++level)
    w.set_row(order[level], s.placed[level]);

  // g2 = u * g1 * u^T with u = t2^{-1} * w * t1.
  QMat t2inv = *inverse(to_rational(t2));
  QMat uq = t2inv * to_rational(w) * to_rational(t1);
  IMat u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (uq(i, j).get_den() != 1)
        throw domain_error("internal: non-integral isometry witness");
      u(i, j) = uq(i, j).get_num();
    }
  return u;
}

}  // namespace perflat
