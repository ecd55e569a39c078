#include "perflat/bounds.hpp"

namespace perflat {

namespace {

Int double_factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = n; k > 1; k -= 2) r *= k;
  return r;
}

// Certified floor of r * sqrt(2)^s2 / pi^m with rational r > 0 and s2 in
// {0, -1}.  Escalates precision until the floor is unambiguous; the value
// is irrational for m >= 1, so this terminates.
Int certified_floor(const Rat& r, int sqrt2_exp, unsigned pi_exp) {
  if (pi_exp == 0 && sqrt2_exp == 0) return floor_rat(r);
  for (unsigned terms = 24;; terms *= 2) {
    RatInterval value{r, r};
    if (pi_exp > 0) value = value / pi_interval(terms).pow(pi_exp);
    if (sqrt2_exp == -1)
      value = value / sqrt_interval(Rat(2), 8 * terms);
    Int flo = floor_rat(value.lo), fhi = floor_rat(value.hi);
    if (flo == fhi) return flo;
    if (terms > 1u << 20)
      throw resource_limit_error("certified_floor failed to converge");
  }
}

}  // namespace

BoundReport id_upper_bounds(unsigned d) {
  if (d < 1) throw domain_error("id_upper_bounds: d must be >= 1");
  BoundReport rep;
  rep.d = d;

  // (4/pi)^{d/2} (d/2)!  ==  2^d Gamma(d/2 + 1) / pi^{d/2}
  if (d % 2 == 0) {
    Rat r = Rat(pow_int(2, d) * factorial(d / 2));
    rep.minkowski = certified_floor(r, 0, d / 2);
  } else {
    // Gamma(d/2 + 1) = sqrt(pi) d!! / 2^{(d+1)/2}; the sqrt(pi) cancels one
    // half-power of pi, leaving 2^{(d-1)/2} d!! / pi^{(d-1)/2}.
    Rat r = Rat(pow_int(2, (d - 1) / 2) * double_factorial(d));
    rep.minkowski = certified_floor(r, 0, (d - 1) / 2);
  }

  // (2/pi)^{d/2} Gamma(2 + d/2)
  if (d % 2 == 0) {
    Rat r = Rat(pow_int(2, d / 2) * factorial(d / 2 + 1));
    rep.blichfeldt = certified_floor(r, 0, d / 2);
  } else {
    // Gamma(2 + d/2) = sqrt(pi) (d+2)!! / 2^{(d+3)/2}; combined with
    // 2^{d/2} this leaves (d+2)!! / (2 sqrt(2) pi^{(d-1)/2}).
    Rat r = Rat(double_factorial(d + 2)) / Rat(2);
    rep.blichfeldt = certified_floor(r, -1, (d - 1) / 2);
  }

  // gamma_d^d is known exactly for d <= 8.
  static const Rat gamma_pow_d[9] = {Rat(0),       Rat(1), Rat(4, 3), Rat(2),
                                     Rat(4),       Rat(8), Rat(64, 3), Rat(64),
                                     Rat(256)};
  if (d <= 8) {
    // floor(sqrt(gamma_d^d)), exact on rationals
    rep.hermite = floor_sqrt_rat(gamma_pow_d[d]);
  }

  static const long known_id[10] = {0, 1, 1, 1, 2, 2, 4, 8, 16, 16};
  if (d <= 9) rep.best_known = Int(known_id[d]);
  return rep;
}

Int id_bound_value(unsigned d, IdChoice choice) {
  BoundReport rep = id_upper_bounds(d);
  switch (choice) {
    case IdChoice::minkowski:
      return rep.minkowski;
    case IdChoice::blichfeldt:
      return rep.blichfeldt;
    case IdChoice::hermite:
      if (!rep.hermite)
        throw domain_error("hermite bound unknown for d > 8");
      return *rep.hermite;
    case IdChoice::best_known:
      if (!rep.best_known)
        throw domain_error("best-known I_d unknown for d > 9");
      return *rep.best_known;
  }
  throw domain_error("bad IdChoice");
}

PerfectCountBound perfect_count_upper(unsigned d, const Int& id_value) {
  if (d < 2) throw domain_error("perfect_count_upper: d must be >= 2");
  if (id_value < 1) throw domain_error("perfect_count_upper: I must be >= 1");
  PerfectCountBound b;
  b.d = d;
  b.id_value = id_value;
  Int pool = pow_int(3, d) * id_value;
  unsigned long k = static_cast<unsigned long>(d) * (d - 1) / 2;
  Int prefix = pow_int(id_value, d + 1);
  b.base = prefix * binomial(pool, k);
  Int improved_pool = floor_div(pool - Int(2 * d + 1), Int(2));
  b.improved = prefix * binomial(improved_pool, k);
  b.log2_base = log2_interval(Rat(b.base), 48);
  return b;
}

PerfectCountBound perfect_count_upper(unsigned d, IdChoice choice) {
  return perfect_count_upper(d, id_bound_value(d, choice));
}

Int cell_count_upper(unsigned d, const Int& k, const Int& id_value) {
  if (k < 0 || Rat(k) > Rat(Int(d) * Int(d + 1), 2))
    throw domain_error("cell_count_upper: k out of range");
  Int pool = pow_int(3, d) * id_value;
  Int kk = k + 1;
  if (kk > pool) return 0;
  return pow_int(id_value, d + 1) *
         binomial(pool, kk.get_ui());
}

PolytopeCountBound polytope_count_upper(unsigned d) {
  if (d < 1) throw domain_error("polytope_count_upper: d must be >= 1");
  PolytopeCountBound b;
  b.d = d;
  Int dfac = factorial(d);
  Int exponent = pow_int(3, d) * dfac;
  // log2 = (d+1) log2(d!) + 3^d d!
  RatInterval l2fac = d == 1 ? RatInterval{Rat(0)} : log2_interval(Rat(dfac), 48);
  RatInterval dd{Rat(d + 1)};
  b.log2_value = dd * l2fac + RatInterval{Rat(exponent)};
  if (d <= 3) {
    Int value = pow_int(dfac, d + 1);
    mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), exponent.get_ui());
    b.exact = value;
  }
  return b;
}

Int hollow_upper(unsigned d) {
  if (d < 1) throw domain_error("hollow_upper: d must be >= 1");
  return factorial(d);
}

}  // namespace perflat
