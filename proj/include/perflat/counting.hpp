#ifndef PERFLAT_COUNTING_HPP
#define PERFLAT_COUNTING_HPP

#include <vector>

#include "perflat/interval.hpp"
#include "perflat/numeric.hpp"

namespace perflat {

// alpha(n): number of strictly increasing sequences 1 = s_1 < ... < s_n with
// steps in {1,2} and any two skipped integers at distance >= 6.  Satisfies
// alpha(i) = i for i <= 6 and alpha(n) = alpha(n-1) + alpha(n-5).
Int alpha(unsigned n);

// Coefficients of the hole-counting refinement: coefficient of t^k counts
// the sequences contributing to alpha(n) with exactly k skipped integers.
// Evaluation at t = 1 gives alpha(n).
struct HolePolynomial {
  std::vector<Int> coeffs;  // coeffs[k] multiplies t^k

  Int evaluate_at_one() const;
};

HolePolynomial alpha_polynomial(unsigned n);

// Certified report on alpha(n) / rho^n against the limit constant
// (45 + 61 rho + 36 rho^2) / 161, with rho the real root of z^3 - z - 1.
// All quantities are exact rational enclosures.
struct AlphaAsymptoticReport {
  unsigned n;
  RatInterval rho;
  RatInterval ratio;      // alpha(n) / rho^n
  RatInterval limit;      // (45 + 61 rho + 36 rho^2) / 161
  RatInterval deviation;  // |ratio - limit|
};

AlphaAsymptoticReport alpha_asymptotic_check(unsigned n, unsigned bits = 96);

// Number of subgroups of index N in Z^d, by the q-binomial product formula
// over the prime factorisation of N.
Int sigma(unsigned d, const Int& n);

// alpha(d - 8): the number of family lattices of dimension d >= 46.
Int family_count(unsigned d);

}  // namespace perflat

#endif  // PERFLAT_COUNTING_HPP
