#include "perflat/counting.hpp"

#include <map>
#include <mutex>

namespace perflat {

namespace {

std::mutex alpha_mutex;
std::vector<Int> alpha_table;  // alpha_table[i] = alpha(i+1)

void fill_alpha(unsigned n) {
  if (alpha_table.size() >= n) return;
  if (alpha_table.empty())
    for (unsigned i = 1; i <= 6; ++i) alpha_table.emplace_back(i);
  for (unsigned m = static_cast<unsigned>(alpha_table.size()) + 1; m <= n; ++m)
    alpha_table.push_back(alpha_table[m - 2] + alpha_table[m - 6]);
}

}  // namespace

Int alpha(unsigned n) {
  if (n < 1) throw domain_error("alpha: n must be >= 1");
  std::lock_guard<std::mutex> lock(alpha_mutex);
  fill_alpha(n);
  return alpha_table[n - 1];
}

Int HolePolynomial::evaluate_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs) s += c;
  return s;
}

HolePolynomial alpha_polynomial(unsigned n) {
  if (n < 1) throw domain_error("alpha_polynomial: n must be >= 1");
  // iterative fill of the recursion p(n) = p(n-1) + t p(n-5),
  // p(i) = 1 + (i-1) t for i <= 6
  std::vector<std::vector<Int>> table;
  auto shift_add = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    // a + t*b
    std::vector<Int> r = a;
    if (r.size() < b.size() + 1) r.resize(b.size() + 1, 0);
    for (std::size_t k = 0; k < b.size(); ++k) r[k + 1] += b[k];
    return r;
  };
  for (unsigned i = 1; i <= std::min(n, 6u); ++i)
    table.push_back(i == 1 ? std::vector<Int>{1} : std::vector<Int>{1, Int(i - 1)});
  for (unsigned m = 7; m <= n; ++m)
    table.push_back(shift_add(table[m - 2], table[m - 6]));
  HolePolynomial p;
  p.coeffs = table[n - 1];
  return p;
}

AlphaAsymptoticReport alpha_asymptotic_check(unsigned n, unsigned bits) {
  if (n < 10) throw domain_error("alpha_asymptotic_check: n must be >= 10");
  AlphaAsymptoticReport rep;
  rep.n = n;
  rep.rho = plastic_root_interval(bits);
  RatInterval an{Rat(alpha(n))};
  rep.ratio = an / rep.rho.pow(n);
  RatInterval c45{Rat(45)}, c61{Rat(61)}, c36{Rat(36)}, c161{Rat(161)};
  rep.limit = (c45 + c61 * rep.rho + c36 * rep.rho * rep.rho) / c161;
  rep.deviation = (rep.ratio - rep.limit).abs();
  return rep;
}

Int sigma(unsigned d, const Int& n) {
  if (d < 1 || n < 1) throw domain_error("sigma: bad input");
  // factor n by trial division
  std::map<Int, unsigned long> factors;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++factors[p];
      m /= p;
    }
  if (m > 1) ++factors[m];

  Int result = 1;
  for (const auto& [p, e] : factors) {
    // q-binomial [e + d - 1, d - 1]_p = prod_{j=1}^{d-1} (p^{e+j}-1)/(p^j-1)
    Int num = 1, den = 1;
    for (unsigned j = 1; j <= d - 1; ++j) {
      num *= pow_int(p, e + j) - 1;
      den *= pow_int(p, j) - 1;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    result *= q;
  }
  return result;
}

Int family_count(unsigned d) {
  if (d < 46) throw domain_error("family_count: defined for d >= 46 only");
  return alpha(d - 8);
}

}  // namespace perflat
