#include "perflat/family.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "perflat/linalg.hpp"

namespace perflat {

HoleSequence::HoleSequence(std::vector<long> h) : holes(std::move(h)) {
  for (std::size_t i = 0; i < holes.size(); ++i) {
    if (holes[i] < 1) throw domain_error("holes must be positive");
    if (i && holes[i] <= holes[i - 1])
      throw domain_error("holes must be strictly increasing");
  }
}

bool HoleSequence::gaps_at_least(long g) const {
  for (std::size_t i = 1; i < holes.size(); ++i)
    if (holes[i] - holes[i - 1] < g) return false;
  return true;
}

bool HoleSequence::auto_constraints(std::size_t d) const {
  if (holes.empty()) return false;
  if (holes.front() < 7) return false;
  if (!gaps_at_least(4)) return false;
  return holes.back() == static_cast<long>(d + holes.size() + 1);
}

namespace {

std::vector<long> support_of(std::size_t d, const HoleSequence& holes) {
  std::vector<long> support;
  support.reserve(d + 2);
  std::size_t hi = 0;
  for (long v = 1; support.size() < d + 2; ++v) {
    while (hi < holes.size() && holes.holes[hi] < v) ++hi;
    if (hi < holes.size() && holes.holes[hi] == v) continue;
    support.push_back(v);
  }
  return support;
}

bool is_arithmetic_progression(const std::vector<long>& s) {
  if (s.size() < 3) return true;
  long diff = s[1] - s[0];
  for (std::size_t i = 2; i < s.size(); ++i)
    if (s[i] - s[i - 1] != diff) return false;
  return true;
}

}  // namespace

LdLattice construct_ld(std::size_t d, const HoleSequence& holes) {
  if (d < 2) throw domain_error("construct_ld: d must be >= 2");
  LdLattice lat;
  lat.d = d;
  lat.holes = holes;
  lat.support = support_of(d, holes);
  if (is_arithmetic_progression(lat.support))
    throw domain_error("construct_ld: support is an arithmetic progression");
  lat.weight.reserve(d + 2);
  for (long v : lat.support) lat.weight.emplace_back(v);

  IMat constraints(2, d + 2);
  for (std::size_t j = 0; j < d + 2; ++j) {
    constraints(0, j) = 1;
    constraints(1, j) = lat.weight[j];
  }
  lat.basis = kernel_basis(constraints);
  if (lat.basis.rows() != d)
    throw domain_error("construct_ld: kernel rank mismatch");
  lat.gram = IMat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < d + 2; ++k)
        s += lat.basis(i, k) * lat.basis(j, k);
      lat.gram(i, j) = s;
      lat.gram(j, i) = s;
    }
  return lat;
}

Int ld_determinant(std::size_t d, const HoleSequence& holes) {
  std::vector<long> support = support_of(d, holes);
  if (is_arithmetic_progression(support))
    throw domain_error("ld_determinant: support is an arithmetic progression");
  Int cc = static_cast<long>(d + 2), hh = 0, ch = 0;
  for (long v : support) {
    hh += Int(v) * Int(v);
    ch += v;
  }
  return cc * hh - ch * ch;
}

std::size_t ld_minimal_pair_count(std::size_t d, const HoleSequence& holes) {
  std::vector<long> support = support_of(d, holes);
  std::set<long> in(support.begin(), support.end());
  long lo = support.front(), hi = support.back();
  std::size_t count = 0;
  for (long s = 2 * lo + 1; s <= 2 * hi - 1; ++s) {
    std::size_t pairs = 0;
    for (long a = lo; 2 * a < s; ++a)
      if (in.count(a) && in.count(s - a)) ++pairs;
    count += pairs * (pairs - 1) / 2;
  }
  return count;
}

MinimalVectorSet ld_minimal_vectors(const LdLattice& lat) {
  const std::size_t n = lat.d + 2;
  std::vector<long> pos(lat.support.back() + 1, -1);
  for (std::size_t j = 0; j < n; ++j) pos[lat.support[j]] = static_cast<long>(j);

  MinimalVectorSet out;
  out.minimum = 4;
  long lo = lat.support.front(), hi = lat.support.back();
  for (long s = 2 * lo + 1; s <= 2 * hi - 1; ++s) {
    std::vector<std::pair<long, long>> pairs;
    for (long a = lo; 2 * a < s; ++a) {
      long b = s - a;
      if (b > hi) continue;
      if (pos[a] >= 0 && pos[b] >= 0) pairs.emplace_back(a, b);
    }
    // v = b_a + b_b - b_c - b_d for two disjoint pairs with the same sum;
    // normalised so the smallest involved index carries +1.
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        IntVec v(n, 0);
        // pairs are sorted by first element, so pairs[i].first is smallest
        v[pos[pairs[i].first]] = 1;
        v[pos[pairs[i].second]] = 1;
        v[pos[pairs[j].first]] = -1;
        v[pos[pairs[j].second]] = -1;
        out.reps.push_back(std::move(v));
      }
  }
  if (out.reps.empty()) {
    // Minimum exceeds 4: fall back to general enumeration over the basis,
    // converting coordinates back to the ambient space.
    MinimalVectorSet gen = minimal_vectors_general(lat.gram);
    out.minimum = gen.minimum;
    for (const IntVec& c : gen.reps) {
      IntVec v(n, 0);
      for (std::size_t i = 0; i < lat.d; ++i)
        for (std::size_t k = 0; k < n; ++k) v[k] += c[i] * lat.basis(i, k);
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0) {
          if (v[k] < 0)
            for (Int& x : v) x = -x;
          break;
        }
      out.reps.push_back(std::move(v));
    }
  }
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

IMat ld_minset_gram(const MinimalVectorSet& minset) {
  const std::size_t n = minset.reps.size();
  IMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Int v = dot(minset.reps[i], minset.reps[j]);
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

HoleSequence essential_partner(std::size_t d, const HoleSequence& holes) {
  std::vector<long> support = support_of(d, holes);
  if (is_arithmetic_progression(support))
    throw domain_error("essential_partner: degenerate support");
  long omega = support.back();
  std::vector<long> reflected;
  for (long h : holes.holes) {
    long r = omega + 1 - h;
    if (r >= 1) reflected.push_back(r);
  }
  std::sort(reflected.begin(), reflected.end());
  return HoleSequence(reflected);
}

std::vector<HoleSequence> family_members(std::size_t d) {
  if (d < 46)
    throw domain_error("family_members: defined for d >= 46 only");
  const std::size_t n = d - 8;
  // Sequences s_1 = 1 < s_2 < ... < s_n with steps in {1,2} and any two
  // skipped integers at distance >= 6 translate into hole sequences via
  // h = s_i + 6 for each size-2 step, plus the forced final hole.
  std::vector<HoleSequence> out;
  std::vector<long> steps2;  // values s_i where a step of size 2 starts
  std::function<void(std::size_t, long, long)> rec =
      [&](std::size_t len, long last, long last_missing) {
        if (len == n) {
          std::vector<long> holes;
          for (long s : steps2) holes.push_back(s + 6);
          holes.push_back(last + 10);  // omega - 1 with omega = s_n + 11
          out.push_back(HoleSequence(holes));
          return;
        }
        rec(len + 1, last + 1, last_missing);
        long missing = last + 1;
        if (last_missing < 0 || missing - last_missing >= 6) {
          steps2.push_back(last);
          rec(len + 1, last + 2, missing);
          steps2.pop_back();
        }
      };
  rec(1, 1, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace perflat
