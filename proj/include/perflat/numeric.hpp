#ifndef PERFLAT_NUMERIC_HPP
#define PERFLAT_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace perflat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Thrown when an input is outside the supported domain (bad dimension,
// degenerate support, non-positive-definite Gram, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a search exceeds its configured node budget.  Signals
// "undecided", never a wrong answer.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by hole recovery when the input is not (recognisably) a member
// of the lattice family.
class not_in_family_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

// floor(sqrt(x)) for x >= 0.
inline Int isqrt(const Int& x) {
  if (x < 0) throw domain_error("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Int ceil_rat(const Rat& q) {
  return ceil_div(q.get_num(), q.get_den());
}

// Largest integer t with t*t <= q, for q >= 0.
inline Int floor_sqrt_rat(const Rat& q) {
  if (sgn(q) < 0) throw domain_error("floor_sqrt_rat of negative value");
  Int t = isqrt(q.get_num() / q.get_den());
  while (Rat(t + 1) * Rat(t + 1) <= q) ++t;
  while (t > 0 && Rat(t) * Rat(t) > q) --t;
  return t;
}

inline Int binomial(const Int& n, unsigned long k) {
  if (n < 0) throw domain_error("binomial with negative top");
  if (Int(k) > n) return 0;
  Int num = 1, den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= n - Int(i);
    den *= Int(i + 1);
  }
  return num / den;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace perflat

#endif  // PERFLAT_NUMERIC_HPP
