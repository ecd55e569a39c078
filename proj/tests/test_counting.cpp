#include <doctest.h>

#include <functional>

#include "perflat/counting.hpp"
#include "perflat/overlattice.hpp"

using namespace perflat;

namespace {

// exhaustive oracle: strictly increasing sequences starting at 1, steps in
// {1,2}, any two skipped integers at distance >= 6
long alpha_oracle(unsigned n) {
  long count = 0;
  std::function<void(unsigned, long, long)> rec = [&](unsigned len, long last,
                                                      long last_missing) {
    if (len == n) {
      ++count;
      return;
    }
    rec(len + 1, last + 1, last_missing);
    long missing = last + 1;
    if (last_missing < 0 || missing - last_missing >= 6)
      rec(len + 1, last + 2, missing);
  };
  rec(1, 1, -1);
  return count;
}

}  // namespace

TEST_CASE("alpha prefix and recursion") {
  std::vector<long> expected = {1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(alpha(static_cast<unsigned>(i + 1)) == expected[i]);
}

TEST_CASE("alpha equals the brute-force count up to 24") {
  for (unsigned n = 1; n <= 24; ++n) CHECK(alpha(n) == alpha_oracle(n));
}

TEST_CASE("alpha exponential lower bound") {
  for (unsigned n = 1; n <= 60; ++n)
    CHECK(alpha(n) >= pow_int(2, n / 6));
}

TEST_CASE("hole polynomial") {
  HolePolynomial p6 = alpha_polynomial(6);
  REQUIRE(p6.coeffs.size() == 2);
  CHECK(p6.coeffs[0] == 1);
  CHECK(p6.coeffs[1] == 5);
  for (unsigned n = 1; n <= 40; ++n) {
    HolePolynomial p = alpha_polynomial(n);
    CHECK(p.evaluate_at_one() == alpha(n));
    CHECK(p.coeffs[0] == 1);  // the hole-free sequence
  }
}

TEST_CASE("asymptotic ratio report") {
  AlphaAsymptoticReport rep = alpha_asymptotic_check(60);
  // certified: the upper end of the deviation enclosure is below 1e-6
  CHECK(rep.deviation.hi < Rat(1, 1000000));
  // the limit constant is about 1.0145
  CHECK(rep.limit.lo > Rat(101, 100));
  CHECK(rep.limit.hi < Rat(102, 100));
  AlphaAsymptoticReport rep10 = alpha_asymptotic_check(10);
  CHECK(rep10.deviation.lo >= 0);  // report-only at small n

  // monotone-ish convergence observed across 50, 60, 70
  AlphaAsymptoticReport r50 = alpha_asymptotic_check(50);
  AlphaAsymptoticReport r70 = alpha_asymptotic_check(70);
  CHECK(r70.deviation.hi < r50.deviation.hi);
}

TEST_CASE("sigma values") {
  CHECK(sigma(5, 1) == 1);
  CHECK(sigma(2, 2) == 3);
  CHECK(sigma(3, 4) == 35);
  CHECK(sigma(3, 2) == 7);
}

TEST_CASE("sigma is multiplicative and bounded by N^d") {
  for (unsigned d = 1; d <= 3; ++d) {
    CHECK(sigma(d, 6) == sigma(d, 2) * sigma(d, 3));
    CHECK(sigma(d, 35) == sigma(d, 5) * sigma(d, 7));
    for (long n = 1; n <= 30; ++n)
      CHECK(sigma(d, n) <= pow_int(Int(n), d));
  }
  // sigma_d(p) = (p^d - 1)/(p - 1)
  for (long p : {2L, 3L, 5L, 7L})
    CHECK(sigma(4, p) == (pow_int(Int(p), 4) - 1) / (p - 1));
}

TEST_CASE("sigma matches the HNF enumeration oracle") {
  for (unsigned d = 1; d <= 3; ++d)
    for (long n = 1; n <= 30; ++n)
      CHECK(sigma(d, n) ==
            Int(static_cast<long>(sublattices_of_index(d, n).size())));
}

TEST_CASE("family count bounds") {
  CHECK(family_count(46) == alpha(38));
  CHECK(family_count(54) == alpha(46));
  CHECK_THROWS_AS(family_count(45), domain_error);
}
