// Command-line front end: family construction, the dimension-9 table,
// perfection checks, hole recovery, counting formulas, bound tables,
// perfect-lattice enumeration and the geometry checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "perflat/bounds.hpp"
#include "perflat/counting.hpp"
#include "perflat/enumerate.hpp"
#include "perflat/family.hpp"
#include "perflat/geometry.hpp"
#include "perflat/isometry.hpp"
#include "perflat/json_io.hpp"
#include "perflat/linalg.hpp"
#include "perflat/perfection.hpp"
#include "perflat/reconstruct.hpp"

namespace {

using namespace perflat;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUndecided = 2;

struct CommonOpts {
  std::string format = "tsv";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t node_budget = 50'000'000;
};

std::vector<long> parse_holes(const std::string& s) {
  std::vector<long> holes;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    holes.push_back(std::stol(tok));
  }
  return holes;
}

int cmd_family(unsigned d, const std::string& holes_str, const CommonOpts& opts,
               const std::string& minset_out, std::uint64_t scramble_seed,
               bool scramble) {
  LdLattice lat = construct_ld(d, HoleSequence(parse_holes(holes_str)));
  MinimalVectorSet mins = ld_minimal_vectors(lat);
  std::size_t d2 = symmetric_rank(mins.reps);
  if (opts.format == "json") {
    nlohmann::json j = to_json(lat);
    j["determinant"] = ld_determinant(d, lat.holes).get_str();
    j["minimum"] = mins.minimum.get_str();
    j["kissing_pairs"] = mins.pairs();
    j["d2_rank"] = d2;
    HoleSequence partner = essential_partner(d, lat.holes);
    j["essential_partner"] = partner.holes;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "d\t" << d << "\n";
    std::cout << "holes\t";
    for (std::size_t i = 0; i < lat.holes.size(); ++i)
      std::cout << (i ? "," : "") << lat.holes.holes[i];
    std::cout << "\n";
    std::cout << "det\t" << ld_determinant(d, lat.holes) << "\n";
    std::cout << "minimum\t" << mins.minimum << "\n";
    std::cout << "pairs\t" << mins.pairs() << "\n";
    std::cout << "d2\t" << d2 << "\n";
  }
  if (!minset_out.empty()) {
    MinsetGram g = MinsetGram::from_reps(mins.reps);
    if (scramble) g = g.scrambled(scramble_seed);
    std::ofstream out(minset_out);
    if (!out) {
      std::cerr << "cannot open " << minset_out << "\n";
      return kExitInvalid;
    }
    write_gram_file(out, g.to_matrix());
  }
  return kExitOk;
}

int cmd_table9(const CommonOpts& opts) {
  struct Row {
    unsigned d;
    std::vector<long> holes;
  };
  std::vector<Row> rows = {
      {9, {}},      {9, {2}},     {9, {3}},     {9, {4}},
      {9, {5}},     {9, {6}},     {9, {2, 8}},  {9, {2, 9}},
      {9, {2, 10}}, {9, {2, 11}}, {9, {2, 12}}, {9, {3, 9}},
      {9, {3, 10}}, {9, {3, 11}}, {9, {4, 10}}, {10, {4, 10}}};
  nlohmann::json jrows = nlohmann::json::array();
  if (opts.format == "tsv")
    std::cout << "dim\tholes\tdet\tpairs\td2\n";
  for (const Row& r : rows) {
    HoleSequence h(r.holes);
    LdLattice lat = construct_ld(r.d, h);
    MinimalVectorSet mins = ld_minimal_vectors(lat);
    Int det = ld_determinant(r.d, h);
    std::size_t d2 = symmetric_rank(mins.reps);
    std::string holes_str;
    for (std::size_t i = 0; i < r.holes.size(); ++i)
      holes_str += (i ? "," : "") + std::to_string(r.holes[i]);
    if (opts.format == "json") {
      nlohmann::json j;
      j["dim"] = r.d;
      j["holes"] = r.holes;
      j["det"] = det.get_str();
      j["pairs"] = mins.pairs();
      j["d2"] = d2;
      jrows.push_back(std::move(j));
    } else {
      std::cout << r.d << "\t" << holes_str << "\t" << det << "\t"
                << mins.pairs() << "\t" << d2 << "\n";
    }
  }
  if (opts.format == "json") std::cout << jrows.dump(2) << "\n";
  return kExitOk;
}

int cmd_perfect_check(const std::string& file, const CommonOpts& opts) {
  IMat gram;
  if (file == "-") {
    gram = read_gram_file(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return kExitInvalid;
    }
    gram = read_gram_file(in);
  }
  MinimalVectorSet mins = minimal_vectors_general(gram);
  std::size_t d2 = symmetric_rank(mins.reps);
  std::size_t full = gram.rows() * (gram.rows() + 1) / 2;
  if (opts.format == "json") {
    nlohmann::json j;
    j["minimum"] = mins.minimum.get_str();
    j["kissing_pairs"] = mins.pairs();
    j["d2_rank"] = d2;
    j["perfect"] = d2 == full;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "minimum\t" << mins.minimum << "\n";
    std::cout << "pairs\t" << mins.pairs() << "\n";
    std::cout << "d2\t" << d2 << "\n";
    std::cout << "perfect\t" << (d2 == full ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_recover(const std::string& file, const CommonOpts& opts) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return kExitInvalid;
  }
  IMat gram = read_gram_file(in);
  MinsetGram g = MinsetGram::from_matrix(gram);
  RecoveryReport report;
  try {
    RecoveredStructure rec = recover_holes(g, &report);
    if (opts.format == "json") {
      std::cout << to_json(report).dump(2) << "\n";
    } else {
      std::cout << "d=" << rec.d << " holes=";
      for (std::size_t i = 0; i < rec.holes.size(); ++i)
        std::cout << (i ? "," : "") << rec.holes.holes[i];
      std::cout << "\n";
    }
  } catch (const not_in_family_error& e) {
    std::cerr << "not-in-family: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitOk;
}

int cmd_count(const std::string& alpha_range, unsigned sigma_d,
              const std::string& sigma_n, unsigned family_d,
              bool polynomial, const CommonOpts& opts) {
  nlohmann::json j;
  if (!alpha_range.empty()) {
    unsigned lo = 1, hi = 1;
    auto dots = alpha_range.find("..");
    if (dots == std::string::npos) {
      lo = hi = static_cast<unsigned>(std::stoul(alpha_range));
    } else {
      lo = static_cast<unsigned>(std::stoul(alpha_range.substr(0, dots)));
      hi = static_cast<unsigned>(std::stoul(alpha_range.substr(dots + 2)));
    }
    if (opts.format == "tsv") {
      std::cout << "n\talpha";
      if (polynomial) std::cout << "\tpolynomial";
      std::cout << "\n";
    }
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = lo; n <= hi; ++n) {
      if (opts.format == "json") {
        nlohmann::json row;
        row["n"] = n;
        row["alpha"] = alpha(n).get_str();
        if (polynomial) {
          nlohmann::json cs = nlohmann::json::array();
          for (const Int& c : alpha_polynomial(n).coeffs) cs.push_back(c.get_str());
          row["polynomial"] = cs;
        }
        rows.push_back(std::move(row));
      } else {
        std::cout << n << "\t" << alpha(n);
        if (polynomial) {
          std::cout << "\t";
          HolePolynomial p = alpha_polynomial(n);
          for (std::size_t k = 0; k < p.coeffs.size(); ++k)
            std::cout << (k ? "," : "") << p.coeffs[k];
        }
        std::cout << "\n";
      }
    }
    if (opts.format == "json") j["alpha"] = std::move(rows);
  }
  if (!sigma_n.empty()) {
    Int n(sigma_n);
    Int v = sigma(sigma_d, n);
    if (opts.format == "json")
      j["sigma"] = v.get_str();
    else
      std::cout << "sigma_" << sigma_d << "(" << n << ")\t" << v << "\n";
  }
  if (family_d) {
    Int v = family_count(family_d);
    if (opts.format == "json")
      j["family_count"] = v.get_str();
    else
      std::cout << "family_count(" << family_d << ")\t" << v << "\n";
  }
  if (opts.format == "json") std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_bounds(unsigned dmax, const CommonOpts& opts) {
  if (opts.format == "tsv")
    std::cout << "d\tminkowski\tblichfeldt\thermite\tbest_known\tthmbound_log2\n";
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned d = 1; d <= dmax; ++d) {
    BoundReport rep = id_upper_bounds(d);
    std::string herm = rep.hermite ? rep.hermite->get_str() : "unknown";
    std::string best = rep.best_known ? rep.best_known->get_str() : "unknown";
    std::string log2;
    if (d >= 2) {
      PerfectCountBound pc = perfect_count_upper(d, rep.blichfeldt);
      log2 = decimal_string((pc.log2_base.lo + pc.log2_base.hi) / 2, 3);
    } else {
      log2 = "-";
    }
    if (opts.format == "json") {
      nlohmann::json j;
      j["d"] = d;
      j["minkowski"] = rep.minkowski.get_str();
      j["blichfeldt"] = rep.blichfeldt.get_str();
      j["hermite"] = herm;
      j["best_known"] = best;
      j["thmbound_log2"] = log2;
      rows.push_back(std::move(j));
    } else {
      std::cout << d << "\t" << rep.minkowski << "\t" << rep.blichfeldt << "\t"
                << herm << "\t" << best << "\t" << log2 << "\n";
    }
  }
  if (opts.format == "json") std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_enumerate(unsigned d, bool long_running, bool minor_pruning,
                  const CommonOpts& opts) {
  EnumerateOptions eopts;
  eopts.long_running = long_running;
  eopts.minor_pruning = minor_pruning;
  eopts.node_budget = opts.node_budget;
  try {
    std::vector<PerfectLatticeRecord> recs = enumerate_perfect(d, eopts);
    nlohmann::json arr = nlohmann::json::array();
    for (const PerfectLatticeRecord& r : recs) {
      std::cerr << "found: dim " << r.dimension << " det " << r.determinant
                << " pairs " << r.kissing_pairs << " label "
                << (r.label.empty() ? "?" : r.label) << "\n";
      arr.push_back(to_json(r));
    }
    std::cout << arr.dump(2) << "\n";
  } catch (const resource_limit_error& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitOk;
}

int cmd_geometry(const std::string& what, unsigned dim, const CommonOpts& opts) {
  nlohmann::json j;
  if (what == "roots-a") {
    Int idx = root_lattice_extremes(RootType::A, dim);
    j["max_index"] = idx.get_str();
  } else if (what == "roots-d") {
    Int idx = dim % 2 == 0 ? root_lattice_extremes(RootType::D, dim)
                           : root_index_maximum(RootType::D, dim);
    j["max_index"] = idx.get_str();
    if (dim % 2 == 1) j["note"] = "odd-dimension value reported, not certified";
  } else if (what == "hollow-upper") {
    j["hollow_upper"] = hollow_upper(dim).get_str();
  } else if (what == "polytope-upper") {
    PolytopeCountBound b = polytope_count_upper(dim);
    if (b.exact) j["exact"] = b.exact->get_str();
    j["log2_lo"] = decimal_string(b.log2_value.lo, 6);
    j["log2_hi"] = decimal_string(b.log2_value.hi, 6);
  } else {
    std::cerr << "unknown geometry check: " << what << "\n";
    return kExitInvalid;
  }
  if (opts.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << "\t"
                << (it->is_string() ? it->get<std::string>() : it->dump())
                << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for perfect lattices of minimum 4"};
  app.require_subcommand(1);
  CommonOpts opts;
  app.add_option("--format", opts.format, "output format (tsv|json)")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", opts.seed, "seed for randomised subcommands");
  app.add_option("--threads", opts.threads, "thread budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", opts.node_budget,
                 "node budget for backtracking searches");

  // family
  auto* fam = app.add_subcommand("family", "construct L_d(h_1,...) and report invariants");
  unsigned fam_d = 9;
  std::string fam_holes, fam_minset_out;
  std::uint64_t fam_scramble_seed = 0;
  bool fam_scramble = false;
  fam->add_option("--d", fam_d, "dimension")->required();
  fam->add_option("--holes", fam_holes, "comma-separated hole values");
  fam->add_option("--emit-minset-gram", fam_minset_out,
                  "write the minimal-vector gram matrix to this file");
  fam->add_flag("--scramble", fam_scramble,
                "scramble the emitted gram (relabel + sign flips)");
  fam->add_option("--scramble-seed", fam_scramble_seed, "scramble seed");

  auto* t9 = app.add_subcommand("table9", "the sixteen dimension-9/10 family rows");

  auto* pc = app.add_subcommand("perfect-check", "perfection test for a gram file");
  std::string pc_file;
  pc->add_option("--gram", pc_file, "gram matrix file ('-' for stdin)")->required();

  auto* rec = app.add_subcommand("recover", "hole recovery from a minimal-vector gram file");
  std::string rec_file;
  rec->add_option("--gram", rec_file, "minimal-vector gram matrix file")->required();

  auto* cnt = app.add_subcommand("count", "alpha recursion, sigma_d(N), family counts");
  std::string cnt_alpha, cnt_sigma_n;
  unsigned cnt_sigma_d = 2, cnt_family_d = 0;
  bool cnt_poly = false;
  cnt->add_option("--alpha", cnt_alpha, "n or lo..hi range");
  cnt->add_flag("--polynomial", cnt_poly, "include hole-polynomial coefficients");
  cnt->add_option("--sigma-d", cnt_sigma_d, "dimension for sigma");
  cnt->add_option("--sigma-n", cnt_sigma_n, "index for sigma");
  cnt->add_option("--family", cnt_family_d, "dimension for the family count");

  auto* bnd = app.add_subcommand("bounds", "upper-bound tables");
  unsigned bnd_dmax = 10;
  bnd->add_option("--dmax", bnd_dmax, "largest dimension");

  auto* en = app.add_subcommand("enumerate", "enumerate perfect lattices up to similarity");
  unsigned en_d = 2;
  bool en_long = false, en_minor = false;
  en->add_option("--d", en_d, "dimension (2..4)")->required();
  en->add_flag("--long", en_long, "allow the long-running d=4 search");
  en->add_flag("--minor-pruning", en_minor, "enable the minor-bound pruning");

  auto* geo = app.add_subcommand("geometry", "hollow/small-height/polytope checks");
  std::string geo_what;
  unsigned geo_dim = 4;
  geo->add_option("--check", geo_what,
                  "one of roots-a, roots-d, hollow-upper, polytope-upper")
      ->required();
  geo->add_option("--dim", geo_dim, "dimension");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fam->parsed())
      return cmd_family(fam_d, fam_holes, opts, fam_minset_out,
                        fam_scramble_seed ? fam_scramble_seed : opts.seed,
                        fam_scramble);
    if (t9->parsed()) return cmd_table9(opts);
    if (pc->parsed()) return cmd_perfect_check(pc_file, opts);
    if (rec->parsed()) return cmd_recover(rec_file, opts);
    if (cnt->parsed())
      return cmd_count(cnt_alpha, cnt_sigma_d, cnt_sigma_n, cnt_family_d,
                       cnt_poly, opts);
    if (bnd->parsed()) return cmd_bounds(bnd_dmax, opts);
    if (en->parsed()) return cmd_enumerate(en_d, en_long, en_minor, opts);
    if (geo->parsed()) return cmd_geometry(geo_what, geo_dim, opts);
  } catch (const domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const not_in_family_error& e) {
    std::cerr << "not-in-family: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const resource_limit_error& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitInvalid;
}
