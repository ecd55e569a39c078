#include "perflat/json_io.hpp"

#include <istream>
#include <ostream>

namespace perflat {

nlohmann::json to_json(const IMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const LdLattice& lat) {
  nlohmann::json j;
  j["d"] = lat.d;
  j["holes"] = lat.holes.holes;
  j["support"] = lat.support;
  nlohmann::json w = nlohmann::json::array();
  for (const Int& v : lat.weight) w.push_back(v.get_str());
  j["weight"] = std::move(w);
  j["basis"] = to_json(lat.basis);
  j["gram"] = to_json(lat.gram);
  return j;
}

nlohmann::json to_json(const PerfectLatticeRecord& rec) {
  nlohmann::json j;
  j["dimension"] = rec.dimension;
  j["gram"] = to_json(rec.gram);
  j["determinant"] = rec.determinant.get_str();
  j["kissing_pairs"] = rec.kissing_pairs;
  j["d2_rank"] = rec.d2_rank;
  j["overlattice_index"] = rec.overlattice_index.get_str();
  j["label"] = rec.label;
  return j;
}

nlohmann::json to_json(const RecoveryReport& rep) {
  nlohmann::json j;
  j["candidates_scanned"] = rep.candidates_scanned;
  j["admissible_index"] = rep.admissible_index;
  j["class_sizes"] = {rep.class_size_a, rep.class_size_b};
  j["error_edges"] = rep.error_edges;
  j["path_labels"] = rep.path_labels;
  j["d"] = rep.result.d;
  j["holes"] = rep.result.holes.holes;
  return j;
}

void write_gram_file(std::ostream& os, const IMat& gram) {
  os << gram.rows() << '\n';
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (j) os << ' ';
      os << gram(i, j);
    }
    os << '\n';
  }
}

IMat read_gram_file(std::istream& is) {
  std::size_t n = 0;
  if (!(is >> n) || n == 0) throw domain_error("gram file: bad dimension line");
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(is >> tok)) throw domain_error("gram file: truncated");
      m(i, j) = Int(tok);
    }
  return m;
}

}  // namespace perflat
