#include "perflat/perfection.hpp"

#include "perflat/linalg.hpp"
#include "perflat/minvec.hpp"

namespace perflat {

std::size_t symmetric_rank(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) throw domain_error("symmetric_rank: empty vector list");
  const std::size_t d = vectors[0].size();
  const std::size_t cols = d * (d + 1) / 2;
  IMat m(vectors.size(), cols);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    const IntVec& v = vectors[r];
    if (v.size() != d) throw domain_error("symmetric_rank: ragged input");
    std::size_t c = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) m(r, c++) = v[i] * v[j];
  }
  return rank_rational(m);
}

bool is_perfect(const IMat& gram) {
  const std::size_t d = gram.rows();
  MinimalVectorSet mins = minimal_vectors_general(gram);
  return symmetric_rank(mins.reps) == d * (d + 1) / 2;
}

QMat gram_from_perfect_set(const std::vector<IntVec>& vectors,
                           const std::vector<Rat>& values) {
  if (vectors.empty()) throw domain_error("gram_from_perfect_set: empty set");
  const std::size_t d = vectors[0].size();
  const std::size_t m = d * (d + 1) / 2;
  if (vectors.size() != m || values.size() != m)
    throw domain_error("gram_from_perfect_set: need exactly d(d+1)/2 vectors");

  // q(v) = sum_i v_i^2 g_ii + 2 sum_{i<j} v_i v_j g_ij, one linear equation
  // per vector in the unknowns (g_ii, g_ij).
  QMat a(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    const IntVec& v = vectors[r];
    std::size_t c = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Int coef = v[i] * v[j];
        if (i != j) coef *= 2;
        a(r, c++) = Rat(coef);
      }
  }
  auto sol = solve_square(a, values);
  if (!sol)
    throw domain_error("gram_from_perfect_set: set is not perfect");
  QMat g(d, d);
  std::size_t c = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      g(i, j) = (*sol)[c];
      g(j, i) = (*sol)[c];
      ++c;
    }
  return g;
}

}  // namespace perflat
