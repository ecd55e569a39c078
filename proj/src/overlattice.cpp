#include "perflat/overlattice.hpp"

#include <algorithm>
#include <functional>

#include "perflat/linalg.hpp"

namespace perflat {

QMat Overlattice::basis() const {
  QMat b(scaled_basis.rows(), scaled_basis.cols());
  for (std::size_t i = 0; i < scaled_basis.rows(); ++i)
    for (std::size_t j = 0; j < scaled_basis.cols(); ++j) {
      b(i, j) = Rat(scaled_basis(i, j), denominator);
      b(i, j).canonicalize();
    }
  return b;
}

namespace {

void divisors_of(const Int& n, std::vector<Int>& out) {
  out.clear();
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
}

// Recursively fill the HNF diagonal, then the free entries above it.
void enumerate_hnf(std::size_t d, const Int& n, std::size_t col, IMat& h,
                   std::vector<IMat>& out) {
  if (col == d) {
    if (n == 1) out.push_back(h);
    return;
  }
  std::vector<Int> divs;
  divisors_of(n, divs);
  for (const Int& a : divs) {
    h(col, col) = a;
    // entries above the pivot run over [0, a)
    std::function<void(std::size_t)> fill = [&](std::size_t row) {
      if (row == col) {
        enumerate_hnf(d, n / a, col + 1, h, out);
        return;
      }
      for (Int v = 0; v < a; ++v) {
        h(row, col) = v;
        fill(row + 1);
      }
      h(row, col) = 0;
    };
    fill(0);
  }
  h(col, col) = 0;
}

}  // namespace

std::vector<IMat> sublattices_of_index(std::size_t d, const Int& n) {
  if (d == 0 || n < 1) throw domain_error("sublattices_of_index: bad input");
  std::vector<IMat> out;
  IMat h(d, d);
  enumerate_hnf(d, n, 0, h, out);
  return out;
}

std::vector<Overlattice> overlattices(std::size_t d, const Int& max_index) {
  if (d < 1 || max_index < 1) throw domain_error("overlattices: bad input");
  std::vector<Overlattice> out;
  for (Int n = 1; n <= max_index; ++n) {
    for (const IMat& h : sublattices_of_index(d, n)) {
      // Dual basis of the index-n sublattice: rows of (h^-1)^T.  Clearing
      // denominators with n gives an integer matrix: n * h^-T = adj(h)^T * sign.
      QMat hq = to_rational(h);
      QMat inv = *inverse(hq);
      IMat scaled(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Rat v = inv(j, i) * Rat(n);
          if (v.get_den() != 1)
            throw domain_error("internal: dual basis not in (1/n)Z");
          scaled(i, j) = v.get_num();
        }
      Overlattice o;
      o.index = n;
      o.scaled_basis = hnf_rows(scaled);
      // Reduce the denominator: divide out the gcd of all entries and n.
      Int g = n;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g = gcd(g, o.scaled_basis(i, j));
      if (g > 1) {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) o.scaled_basis(i, j) /= g;
        o.denominator = n / g;
      } else {
        o.denominator = n;
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace perflat
