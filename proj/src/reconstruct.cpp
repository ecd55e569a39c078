#include "perflat/reconstruct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace perflat {

// ---------------------------------------------------------------------------
// MinsetGram

MinsetGram MinsetGram::from_reps(const std::vector<IntVec>& reps) {
  MinsetGram g;
  g.n_ = reps.size();
  g.data_.assign(g.n_ * g.n_, 0);
  // exploit sparsity: the family representatives have four nonzero entries
  std::vector<std::vector<std::pair<std::size_t, int>>> nz(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = 0; k < reps[i].size(); ++k)
      if (reps[i][k] != 0)
        nz[i].emplace_back(k, static_cast<int>(reps[i][k].get_si()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) {
      long s = 0;
      for (const auto& [k, c] : nz[i]) {
        const Int& w = reps[j][k];
        if (w != 0) s += c * w.get_si();
      }
      if (s < -4 || s > 4)
        throw domain_error("MinsetGram: inner product out of range");
      g.data_[i * g.n_ + j] = static_cast<signed char>(s);
      g.data_[j * g.n_ + i] = static_cast<signed char>(s);
    }
  }
  for (std::size_t i = 0; i < g.n_; ++i)
    if (g.at(i, i) != 4)
      throw domain_error("MinsetGram: expects a minimum-4 minimal vector set");
  return g;
}

MinsetGram MinsetGram::from_matrix(const IMat& gram) {
  if (!is_symmetric(gram)) throw domain_error("MinsetGram: not symmetric");
  MinsetGram g;
  g.n_ = gram.rows();
  g.data_.assign(g.n_ * g.n_, 0);
  for (std::size_t i = 0; i < g.n_; ++i)
    for (std::size_t j = 0; j < g.n_; ++j) {
      const Int& v = gram(i, j);
      if (v < -4 || v > 4)
        throw domain_error("MinsetGram: inner product out of range");
      if (i == j && v != 4)
        throw domain_error("MinsetGram: expects a minimum-4 minimal vector set");
      g.data_[i * g.n_ + j] = static_cast<signed char>(v.get_si());
    }
  return g;
}

namespace {

// splitmix64; deterministic across platforms
struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

MinsetGram MinsetGram::scrambled(std::uint64_t seed) const {
  Rng rng{seed * 0x9e3779b97f4a7c15ull + 1};
  std::vector<std::size_t> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n_; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<int> signs(n_);
  for (std::size_t i = 0; i < n_; ++i) signs[i] = rng.next() & 1 ? 1 : -1;
  MinsetGram out;
  out.n_ = n_;
  out.data_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out.data_[i * n_ + j] = static_cast<signed char>(
          signs[i] * signs[j] * at(perm[i], perm[j]));
  return out;
}

IMat MinsetGram::to_matrix() const {
  IMat m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j);
  return m;
}

std::size_t MinsetGram::rank() const {
  // Greedy LDL over the positive semidefinite gram: a vector is independent
  // of the selected ones iff its Schur-complement pivot is nonzero.
  std::vector<std::size_t> sel;
  std::vector<std::vector<Rat>> lrows;  // unit lower triangular rows
  std::vector<Rat> diag;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t k = sel.size();
    std::vector<Rat> w(k);
    for (std::size_t r = 0; r < k; ++r) {
      Rat s = Rat(at(sel[r], i));
      for (std::size_t c = 0; c < r; ++c) s -= lrows[r][c] * w[c];
      w[r] = s;
    }
    Rat pivot = Rat(at(i, i));
    for (std::size_t r = 0; r < k; ++r) pivot -= w[r] * w[r] / diag[r];
    if (sgn(pivot) == 0) continue;
    if (sgn(pivot) < 0)
      throw domain_error("MinsetGram: matrix is not positive semidefinite");
    for (std::size_t r = 0; r < k; ++r) w[r] /= diag[r];
    lrows.push_back(std::move(w));
    diag.push_back(pivot);
    sel.push_back(i);
  }
  return sel.size();
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0), deg_(n, 0) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw domain_error("Graph: no loops");
  if (adjacent(a, b)) return;
  bits_[a * words_ + b / 64] |= 1ull << (b % 64);
  bits_[b * words_ + a / 64] |= 1ull << (a % 64);
  ++deg_[a];
  ++deg_[b];
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return bits_[a * words_ + b / 64] >> (b % 64) & 1;
}

std::size_t Graph::degree(std::size_t v) const { return deg_[v]; }

// ---------------------------------------------------------------------------
// neighbour quotients

NeighbourQuotient neighbour_quotient(const MinsetGram& g, std::size_t v) {
  NeighbourQuotient q;
  q.center = v;
  // signed references with <v, ref> = 2
  std::vector<int> nbrs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j == v) continue;
    int p = g.at(v, j);
    if (p == 2)
      nbrs.push_back(static_cast<int>(j) + 1);
    else if (p == -2)
      nbrs.push_back(-(static_cast<int>(j) + 1));
  }
  auto idx_of = [](int ref) { return static_cast<std::size_t>(std::abs(ref)) - 1; };
  auto sgn_of = [](int ref) { return ref > 0 ? 1 : -1; };
  auto prod = [&](int a, int b) {
    return sgn_of(a) * sgn_of(b) * g.at(idx_of(a), idx_of(b));
  };

  // pair each neighbour w with the unique neighbour equal to v - w, i.e. the
  // one with <w, v-w> = -2
  std::vector<bool> used(nbrs.size(), false);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (used[i]) continue;
    std::size_t partner = nbrs.size();
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (used[j]) continue;
      if (prod(nbrs[i], nbrs[j]) == -2) {
        partner = j;
        break;
      }
    }
    if (partner == nbrs.size())
      throw not_in_family_error("neighbour involution failed (incomplete set?)");
    used[i] = used[partner] = true;
    q.orbits.push_back({nbrs[i], nbrs[partner]});
  }

  const std::size_t m = q.orbits.size();
  q.parity = Graph(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      int p = g.at(idx_of(q.orbits[a][0]), idx_of(q.orbits[b][0]));
      if ((p & 1) == 0) q.parity.add_edge(a, b);
    }
  return q;
}

// ---------------------------------------------------------------------------
// quasi-equivalence classes

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount_and(const std::uint64_t* a, const Bits& b) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return s;
}

std::size_t popcount(const Bits& a) {
  std::size_t s = 0;
  for (std::uint64_t w : a) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool get_bit(const Bits& a, std::size_t i) { return a[i / 64] >> (i % 64) & 1; }
void set_bit(Bits& a, std::size_t i) { a[i / 64] |= 1ull << (i % 64); }

}  // namespace

bool verify_quasi_class(const Graph& g, const std::vector<std::size_t>& c,
                        const Rat& alpha) {
  if (sgn(alpha) < 0 || alpha >= Rat(1, 3))
    throw domain_error("quasi-equivalence: alpha must lie in [0, 1/3)");
  if (c.empty()) return false;
  const Int& num = alpha.get_num();
  const Int& den = alpha.get_den();
  const std::size_t n = g.size();
  Bits cmask(g.words(), 0);
  for (std::size_t v : c) set_bit(cmask, v);
  const std::size_t csize = c.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t inter = popcount_and(g.row(v), cmask);
    if (get_bit(cmask, v)) {
      // |(N(v) u {v}) delta C| <= alpha |C|
      std::size_t nv = g.degree(v) + 1;
      std::size_t both = inter + 1;
      std::size_t delta = nv + csize - 2 * both;
      if (Int(delta) * den > num * Int(csize)) return false;
    } else {
      // |N(v) ^ C| < (1 - 3 alpha) |C|
      if (Int(inter) * den >= (den - 3 * num) * Int(csize)) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> quasi_equivalence_classes(
    const Graph& g, const Rat& alpha, std::size_t min_size) {
  if (sgn(alpha) < 0 || alpha >= Rat(1, 3))
    throw domain_error("quasi-equivalence: alpha must lie in [0, 1/3)");
  const std::size_t n = g.size();
  std::vector<std::size_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  std::vector<std::vector<std::size_t>> found;
  Bits claimed(g.words(), 0);
  for (std::size_t seed : seeds) {
    if (get_bit(claimed, seed)) continue;
    Bits c(g.row(seed), g.row(seed) + g.words());
    set_bit(c, seed);
    std::size_t csize = popcount(c);
    for (int round = 0; round < 32 && csize > 0; ++round) {
      Bits next(g.words(), 0);
      std::size_t nsize = 0;
      for (std::size_t u = 0; u < n; ++u) {
        std::size_t score = popcount_and(g.row(u), c) + (get_bit(c, u) ? 1 : 0);
        if (2 * score > csize) {
          set_bit(next, u);
          ++nsize;
        }
      }
      if (next == c) break;
      c = std::move(next);
      csize = nsize;
    }
    if (csize < min_size || csize == 0) continue;
    std::vector<std::size_t> members;
    for (std::size_t u = 0; u < n; ++u)
      if (get_bit(c, u)) members.push_back(u);
    if (!verify_quasi_class(g, members, alpha)) continue;
    bool dup = false;
    for (const auto& f : found)
      if (f == members) dup = true;
    if (dup) continue;
    found.push_back(members);
    for (std::size_t u : members) set_bit(claimed, u);
  }
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------------------------------
// admissibility and recovery

namespace {

struct PathOutcome {
  std::vector<long> holes;
  std::size_t d = 0, k = 0;
  std::size_t error_edges = 0;
  std::vector<long> labels;  // labels along the final path, including midpoints
};

// Conditions (2)-(4) for classes A,B of the quotient: errors in both classes,
// an A-A-B triangle in the error graph, and a valid oriented path after
// removing triangle B-vertices and inserting midpoints on A->H edges.
std::optional<PathOutcome> build_path(const NeighbourQuotient& q,
                                      const std::vector<std::size_t>& a_class,
                                      const std::vector<std::size_t>& b_class) {
  const std::size_t m = q.classes();
  std::vector<int> side(m, -1);  // 0 = A, 1 = B, -1 = outside
  for (std::size_t v : a_class) side[v] = 0;
  for (std::size_t v : b_class) side[v] = 1;

  // error graph on A u B
  Graph err(m);
  std::size_t error_edges = 0;
  bool err_in_a = false, err_in_b = false;
  for (std::size_t u = 0; u < m; ++u) {
    if (side[u] < 0) continue;
    for (std::size_t w = u + 1; w < m; ++w) {
      if (side[w] < 0) continue;
      bool adj = q.parity.adjacent(u, w);
      bool same = side[u] == side[w];
      bool is_err = same ? !adj : adj;
      if (is_err) {
        err.add_edge(u, w);
        ++error_edges;
        if (same && side[u] == 0) err_in_a = true;
        if (same && side[u] == 1) err_in_b = true;
      }
    }
  }
  if (!err_in_a || !err_in_b) return std::nullopt;  // condition (2)

  // condition (3): remove B-vertices lying in a triangle with two A-vertices
  std::vector<bool> removed(m, false);
  bool any_triangle = false;
  for (std::size_t b : b_class) {
    bool tri = false;
    for (std::size_t a1 : a_class) {
      if (!err.adjacent(b, a1)) continue;
      for (std::size_t a2 : a_class) {
        if (a2 <= a1 || !err.adjacent(b, a2)) continue;
        if (err.adjacent(a1, a2)) {
          tri = true;
          break;
        }
      }
      if (tri) break;
    }
    if (tri) {
      removed[b] = true;
      any_triangle = true;
    }
  }
  if (!any_triangle) return std::nullopt;

  // remaining vertex set: A plus H = B minus removed
  std::vector<std::size_t> verts;
  for (std::size_t u = 0; u < m; ++u)
    if (side[u] == 0 || (side[u] == 1 && !removed[u])) verts.push_back(u);
  const std::size_t k =
      static_cast<std::size_t>(std::count_if(verts.begin(), verts.end(),
                                             [&](std::size_t u) { return side[u] == 1; }));
  if (k == 0) return std::nullopt;

  std::vector<bool> in_sub(m, false);
  for (std::size_t u : verts) in_sub[u] = true;
  auto sub_neighbours = [&](std::size_t u) {
    std::vector<std::size_t> nb;
    for (std::size_t w : verts)
      if (w != u && err.adjacent(u, w)) nb.push_back(w);
    return nb;
  };

  // the remaining graph must be a path with one leaf in A and one in H
  std::size_t leaf_a = m, leaf_h = m;
  for (std::size_t u : verts) {
    std::size_t deg = sub_neighbours(u).size();
    if (deg > 2 || deg == 0) return std::nullopt;
    if (deg == 1) {
      if (side[u] == 0) {
        if (leaf_a != m) return std::nullopt;  // two leaves in A
        leaf_a = u;
      } else {
        if (leaf_h != m) return std::nullopt;
        leaf_h = u;
      }
    }
  }
  if (leaf_a == m || leaf_h == m) return std::nullopt;

  // walk from the A-leaf
  std::vector<std::size_t> order;
  std::size_t prev = m, cur = leaf_a;
  while (true) {
    order.push_back(cur);
    std::vector<std::size_t> nb = sub_neighbours(cur);
    std::size_t next = m;
    for (std::size_t w : nb)
      if (w != prev) next = w;
    if (next == m) break;
    prev = cur;
    cur = next;
  }
  if (order.size() != verts.size()) return std::nullopt;  // disconnected
  if (order.back() != leaf_h) return std::nullopt;

  // H-vertices may not be adjacent to each other and each must follow an
  // A-vertex; label positions 5, 6, ... with a midpoint before every H.
  PathOutcome out;
  out.error_edges = error_edges;
  out.k = k;
  long label = 5;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (side[order[i]] == 1) {
      if (i == 0 || side[order[i - 1]] != 0) return std::nullopt;
      out.labels.push_back(label);  // midpoint
      ++label;
      out.holes.push_back(label);
    }
    out.labels.push_back(label);
    ++label;
  }
  // d from the labelled length: last label is d + k + 1
  long last = label - 1;
  long dd = last - static_cast<long>(k) - 1;
  if (dd < 1) return std::nullopt;
  out.d = static_cast<std::size_t>(dd);
  return out;
}

struct CandidateResult {
  PathOutcome path;
  std::size_t class_a = 0, class_b = 0;
};

// conditions (1)-(4) with the class-size gate expressed through the exact
// required size |N|/2; the (2d-7)/3 threshold is re-checked once d is known
std::optional<CandidateResult> try_candidate(const NeighbourQuotient& q) {
  const std::size_t m = q.classes();
  if (m == 0 || m % 2 != 0) return std::nullopt;
  const std::size_t half = m / 2;
  if (half < 29) return std::nullopt;  // class well-definedness threshold
  auto classes = quasi_equivalence_classes(q.parity, Rat(2, 7), half);
  if (classes.size() != 2) return std::nullopt;
  if (classes[0].size() != half || classes[1].size() != half)
    return std::nullopt;
  auto outcome = build_path(q, classes[0], classes[1]);
  std::size_t ai = 0;
  if (!outcome) {
    outcome = build_path(q, classes[1], classes[0]);
    ai = 1;
  }
  if (!outcome) return std::nullopt;
  // condition (1) threshold and the theorem's dimension floor
  const std::size_t d = outcome->d;
  if (d < 46) return std::nullopt;
  if (m < 2 * ((2 * d - 7 + 2) / 3)) return std::nullopt;  // 2 ceil((2d-7)/3)
  // path length must equal 2d - 6 - |N|/2
  if (outcome->labels.size() != 2 * d - 6 - half) return std::nullopt;
  CandidateResult res;
  res.path = std::move(*outcome);
  res.class_a = classes[ai].size();
  res.class_b = classes[1 - ai].size();
  return res;
}

}  // namespace

bool is_admissible(const MinsetGram& g, std::size_t v, std::size_t d) {
  NeighbourQuotient q = neighbour_quotient(g, v);
  const std::size_t m = q.classes();
  const std::size_t threshold = (2 * d - 7 + 2) / 3;  // ceil((2d-7)/3)
  if (m % 2 != 0 || m < 2 * threshold) return false;
  auto res = try_candidate(q);
  if (!res) return false;
  return res->path.d == d;
}

bool is_admissible(const MinsetGram& g, std::size_t v) {
  return is_admissible(g, v, g.rank());
}

RecoveredStructure recover_holes(const MinsetGram& g, RecoveryReport* report) {
  const std::size_t n = g.size();
  if (n == 0) throw not_in_family_error("empty minimal vector set");

  // neighbour counts drive the scan order
  std::vector<std::size_t> ncount(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      int p = g.at(i, j);
      if ((p == 2 || p == -2) && j != i) ++c;
    }
    ncount[i] = c;
  }
  std::vector<std::size_t> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
    if (ncount[a] != ncount[b]) return ncount[a] > ncount[b];
    return a < b;
  });

  std::size_t scanned = 0;
  for (std::size_t v : cand) {
    if (ncount[v] % 2 != 0) continue;
    const std::size_t m = ncount[v] / 2;  // orbit count
    if (m % 2 != 0 || m / 2 < 29) continue;
    ++scanned;
    NeighbourQuotient q = neighbour_quotient(g, v);
    auto res = try_candidate(q);
    if (!res) continue;

    RecoveredStructure rec;
    rec.d = res->path.d;
    rec.holes = HoleSequence(res->path.holes);
    rec.admissible_pair = v;

    // confirmation against a fresh construction; a mismatch means the input
    // was not a family minimal-vector set after all
    if (!rec.holes.auto_constraints(rec.d))
      throw not_in_family_error("recovered holes violate the constraints");
    if (ld_minimal_pair_count(rec.d, rec.holes) != n)
      throw not_in_family_error("recovered lattice has wrong kissing number");
    LdLattice check = construct_ld(rec.d, rec.holes);
    MinsetGram check_gram =
        MinsetGram::from_reps(ld_minimal_vectors(check).reps);
    std::vector<std::size_t> profile_in(ncount), profile_chk(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        int p = check_gram.at(i, j);
        if ((p == 2 || p == -2) && j != i) ++c;
      }
      profile_chk[i] = c;
    }
    std::sort(profile_in.begin(), profile_in.end());
    std::sort(profile_chk.begin(), profile_chk.end());
    if (profile_in != profile_chk)
      throw not_in_family_error("neighbour profile mismatch after recovery");

    if (report) {
      report->candidates_scanned = scanned;
      report->admissible_index = v;
      report->class_size_a = res->class_a;
      report->class_size_b = res->class_b;
      report->error_edges = res->path.error_edges;
      report->path_labels = res->path.labels;
      report->result = rec;
    }
    return rec;
  }
  throw not_in_family_error("no admissible minimal vector found");
}

int support_class_of(const IntVec& v, const IntVec& w) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) supp.push_back(i);
  if (supp.size() != 4)
    throw domain_error("support_class_of: v must have quadruple support");
  int hits = 0, mask = 0;
  for (int p = 0; p < 4; ++p)
    if (w[supp[p]] != 0) {
      ++hits;
      mask |= 1 << p;
    }
  if (hits != 2)
    throw domain_error("support_class_of: w is not a support neighbour");
  switch (mask) {
    case 0b0011:
    case 0b1100:
      return 0;  // aabb
    case 0b0101:
    case 0b1010:
      return 1;  // abab
    case 0b1001:
    case 0b0110:
      return 2;  // abba
  }
  throw domain_error("support_class_of: unreachable");
}

}  // namespace perflat
