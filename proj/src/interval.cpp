#include "perflat/interval.hpp"

#include <algorithm>

namespace perflat {

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (sgn(o.lo) <= 0 && sgn(o.hi) >= 0)
    throw domain_error("interval division by interval containing zero");
  Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

RatInterval RatInterval::abs() const {
  if (sgn(lo) >= 0) return *this;
  if (sgn(hi) <= 0) return {Rat(-hi), Rat(-lo)};
  return {Rat(0), std::max(Rat(-lo), hi)};
}

RatInterval RatInterval::pow(unsigned long e) const {
  RatInterval r{Rat(1), Rat(1)};
  RatInterval base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatInterval pi_interval(unsigned terms) {
  // pi/4 = 4 atan(1/5) - atan(1/239); both series alternate, so truncation
  // brackets the value between consecutive partial sums.
  auto atan_inv = [&](long x) {
    Rat sum = 0;
    Int xx = Int(x) * Int(x);
    Rat term(1, x);
    Rat lo(0), hi(0);
    for (unsigned k = 0; k <= terms + 1; ++k) {
      Rat contrib = term / Rat(2 * k + 1);
      if (k % 2 == 0)
        sum += contrib;
      else
        sum -= contrib;
      term /= Rat(xx);
      if (k == terms) lo = sum;
      if (k == terms + 1) hi = sum;
    }
    if (lo > hi) std::swap(lo, hi);
    return RatInterval{lo, hi};
  };
  RatInterval a5 = atan_inv(5), a239 = atan_inv(239);
  RatInterval quarter =
      RatInterval{Rat(4), Rat(4)} * a5 - a239;
  return quarter * RatInterval{Rat(4), Rat(4)};
}

RatInterval sqrt_interval(const Rat& x, unsigned bits) {
  if (sgn(x) < 0) throw domain_error("sqrt_interval of negative value");
  // lo = floor(sqrt(x * 4^bits)) / 2^bits, hi = (lo_num + 1) / 2^bits.
  Int scale = pow_int(2, bits);
  Rat scaled = x * Rat(scale) * Rat(scale);
  Int root = isqrt(scaled.get_num() / scaled.get_den());
  Rat lo(root, scale), hi(root + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

RatInterval plastic_root_interval(unsigned bits) {
  auto p = [](const Rat& z) { return z * z * z - z - 1; };
  Rat lo(1), hi(2);  // p(1) = -1 < 0 < 5 = p(2)
  for (unsigned i = 0; i < bits + 2; ++i) {
    Rat mid = (lo + hi) / 2;
    if (sgn(p(mid)) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

RatInterval log2_interval(const Rat& x, unsigned target_bits) {
  if (sgn(x) <= 0) throw domain_error("log2 of non-positive value");
  // Normalise x = 2^e * y with y in [1, 2), then extract binary digits of
  // log2(y) by repeated squaring on an outward-rounded interval.
  // Jump close to the normalised mantissa via bit lengths, then adjust.
  long e = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  Rat y = x;
  if (e > 0)
    y /= Rat(pow_int(2, static_cast<unsigned long>(e)));
  else if (e < 0)
    y *= Rat(pow_int(2, static_cast<unsigned long>(-e)));
  while (y >= 2) {
    y /= 2;
    ++e;
  }
  while (y < 1) {
    y *= 2;
    --e;
  }
  const unsigned work_bits = 2 * target_bits + 64;
  const Int den = pow_int(2, work_bits);
  auto round_down = [&](const Rat& v) {
    Rat r(floor_rat(v * Rat(den)), den);
    r.canonicalize();
    return r;
  };
  auto round_up = [&](const Rat& v) {
    Rat r(ceil_rat(v * Rat(den)), den);
    r.canonicalize();
    return r;
  };
  RatInterval yy{round_down(y), round_up(y)};
  Rat frac_lo = 0, frac_hi = 0;
  Rat place(1, 2);
  for (unsigned i = 0; i < target_bits; ++i) {
    yy = RatInterval{round_down(yy.lo * yy.lo), round_up(yy.hi * yy.hi)};
    if (yy.lo >= 2) {
      frac_lo += place;
      frac_hi += place;
      yy = RatInterval{round_down(yy.lo / 2), round_up(yy.hi / 2)};
    } else if (yy.hi < 2) {
      // digit 0
    } else {
      // undetermined digit: stop with a one-place bracket
      frac_hi += place;
      return {Rat(e) + frac_lo, Rat(e) + frac_hi + place};
    }
    place /= 2;
  }
  return {Rat(e) + frac_lo, Rat(e) + frac_hi + place * 2};
}

std::string decimal_string(const Rat& x, unsigned digits) {
  Rat v = x;
  std::string sign;
  if (sgn(v) < 0) {
    sign = "-";
    v = -v;
  }
  Int scale = pow_int(10, digits);
  Int scaled = floor_rat(v * Rat(scale));
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string f = frac.get_str();
  while (f.size() < digits) f.insert(f.begin(), '0');
  if (digits == 0) return sign + whole.get_str();
  return sign + whole.get_str() + "." + f;
}

}  // namespace perflat
