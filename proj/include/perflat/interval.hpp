#ifndef PERFLAT_INTERVAL_HPP
#define PERFLAT_INTERVAL_HPP

#include "perflat/numeric.hpp"

namespace perflat {

// Closed rational interval [lo, hi].  All arithmetic is outward-exact, so a
// value once enclosed stays enclosed; used wherever a floor or a comparison
// must be certified rather than trusted to machine precision.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw domain_error("interval bounds out of order");
  }
  explicit RatInterval(const Rat& v) : lo(v), hi(v) {}

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }

  RatInterval operator+(const RatInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  RatInterval operator-(const RatInterval& o) const {
    return {lo - o.hi, hi - o.lo};
  }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator/(const RatInterval& o) const;
  RatInterval abs() const;
  RatInterval pow(unsigned long e) const;
};

// Enclosure of pi from a Machin-type formula with exact alternating-series
// tail bounds; width shrinks as `terms` grows.
RatInterval pi_interval(unsigned terms);

// Enclosure of sqrt(x) for x >= 0 with denominator 2^bits.
RatInterval sqrt_interval(const Rat& x, unsigned bits);

// Enclosure of the unique real root of z^3 - z - 1, by exact bisection.
RatInterval plastic_root_interval(unsigned bits);

// Enclosure of log2(x) for rational x > 0, of width about 2^-target_bits.
RatInterval log2_interval(const Rat& x, unsigned target_bits);

// Fixed-point decimal rendering of a rational, rounding toward zero.
std::string decimal_string(const Rat& x, unsigned digits);

}  // namespace perflat

#endif  // PERFLAT_INTERVAL_HPP
