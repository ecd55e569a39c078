// Python bindings for the main operations: family construction, perfection,
// counting, bounds, hole recovery and perfect-lattice enumeration.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "perflat/bounds.hpp"
#include "perflat/counting.hpp"
#include "perflat/enumerate.hpp"
#include "perflat/family.hpp"
#include "perflat/geometry.hpp"
#include "perflat/isometry.hpp"
#include "perflat/linalg.hpp"
#include "perflat/minvec.hpp"
#include "perflat/perfection.hpp"
#include "perflat/reconstruct.hpp"

namespace py = pybind11;
using namespace perflat;

namespace {

py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int to_int(const py::int_& v) {
  return Int(py::str(v).cast<std::string>());
}

py::object to_py(const Rat& v) {
  py::object fractions = py::module_::import("fractions");
  return fractions.attr("Fraction")(v.get_num().get_str(),
                                    v.get_den().get_str());
}

py::list mat_to_py(const IMat& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

IMat mat_from_py(const py::sequence& rows) {
  std::size_t r = py::len(rows);
  if (r == 0) throw domain_error("empty matrix");
  std::size_t c = py::len(rows[0]);
  IMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    if (py::len(row) != c) throw domain_error("ragged matrix");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = to_int(row[j].cast<py::int_>());
  }
  return m;
}

std::vector<IntVec> vecs_from_py(const py::sequence& rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) {
    py::sequence row = r.cast<py::sequence>();
    IntVec v;
    for (const auto& x : row) v.push_back(to_int(x.cast<py::int_>()));
    out.push_back(std::move(v));
  }
  return out;
}

py::dict lattice_to_py(const LdLattice& lat) {
  py::dict d;
  d["d"] = lat.d;
  d["holes"] = lat.holes.holes;
  d["support"] = lat.support;
  d["basis"] = mat_to_py(lat.basis);
  d["gram"] = mat_to_py(lat.gram);
  return d;
}

}  // namespace

PYBIND11_MODULE(_perflat, m) {
  m.doc() = "exact arithmetic for perfect lattices of minimum 4";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<not_in_family_error>(m, "NotInFamilyError",
                                              PyExc_RuntimeError);
  py::register_exception<resource_limit_error>(m, "ResourceLimitError",
                                               PyExc_RuntimeError);

  m.def("construct_ld", [](unsigned d, const std::vector<long>& holes) {
    return lattice_to_py(construct_ld(d, HoleSequence(holes)));
  });
  m.def("ld_determinant", [](unsigned d, const std::vector<long>& holes) {
    return to_py(ld_determinant(d, HoleSequence(holes)));
  });
  m.def("ld_minimal_vectors", [](unsigned d, const std::vector<long>& holes) {
    LdLattice lat = construct_ld(d, HoleSequence(holes));
    MinimalVectorSet mins = ld_minimal_vectors(lat);
    py::dict out;
    out["minimum"] = to_py(mins.minimum);
    py::list reps;
    for (const IntVec& v : mins.reps) {
      py::list row;
      for (const Int& x : v) row.append(to_py(x));
      reps.append(row);
    }
    out["representatives"] = reps;
    out["d2_rank"] = symmetric_rank(mins.reps);
    return out;
  });
  m.def("essential_partner", [](unsigned d, const std::vector<long>& holes) {
    return essential_partner(d, HoleSequence(holes)).holes;
  });
  m.def("family_members", [](unsigned d) {
    py::list out;
    for (const HoleSequence& h : family_members(d)) out.append(h.holes);
    return out;
  });

  m.def("minimal_vectors", [](const py::sequence& gram) {
    MinimalVectorSet mins = minimal_vectors_general(mat_from_py(gram));
    py::dict out;
    out["minimum"] = to_py(mins.minimum);
    out["pairs"] = mins.pairs();
    return out;
  });
  m.def("rank_rational",
        [](const py::sequence& m) { return rank_rational(mat_from_py(m)); });
  m.def("symmetric_rank",
        [](const py::sequence& vecs) { return symmetric_rank(vecs_from_py(vecs)); });
  m.def("is_perfect",
        [](const py::sequence& gram) { return is_perfect(mat_from_py(gram)); });
  m.def("isometry_equivalent", [](const py::sequence& g1,
                                  const py::sequence& g2) -> py::object {
    auto w = isometry_equivalent(mat_from_py(g1), mat_from_py(g2));
    if (!w) return py::none();
    return mat_to_py(*w);
  });

  m.def("alpha", [](unsigned n) { return to_py(alpha(n)); });
  m.def("alpha_polynomial", [](unsigned n) {
    py::list out;
    for (const Int& c : alpha_polynomial(n).coeffs) out.append(to_py(c));
    return out;
  });
  m.def("sigma", [](unsigned d, const py::int_& n) {
    return to_py(sigma(d, to_int(n)));
  });
  m.def("family_count", [](unsigned d) { return to_py(family_count(d)); });

  m.def("id_upper_bounds", [](unsigned d) {
    BoundReport rep = id_upper_bounds(d);
    py::dict out;
    out["d"] = rep.d;
    out["minkowski"] = to_py(rep.minkowski);
    out["blichfeldt"] = to_py(rep.blichfeldt);
    out["hermite"] = rep.hermite ? py::object(to_py(*rep.hermite)) : py::none();
    out["best_known"] =
        rep.best_known ? py::object(to_py(*rep.best_known)) : py::none();
    return out;
  });
  m.def("perfect_count_upper", [](unsigned d, const py::int_& id_value) {
    PerfectCountBound b = perfect_count_upper(d, to_int(id_value));
    py::dict out;
    out["base"] = to_py(b.base);
    out["improved"] = to_py(b.improved);
    out["log2_lo"] = to_py(b.log2_base.lo);
    out["log2_hi"] = to_py(b.log2_base.hi);
    return out;
  });

  m.def("recover_holes", [](const py::sequence& minset_gram) {
    MinsetGram g = MinsetGram::from_matrix(mat_from_py(minset_gram));
    RecoveredStructure rec = recover_holes(g);
    py::dict out;
    out["d"] = rec.d;
    out["holes"] = rec.holes.holes;
    return out;
  });
  m.def("minset_gram",
        [](unsigned d, const std::vector<long>& holes, py::object seed) {
          LdLattice lat = construct_ld(d, HoleSequence(holes));
          MinsetGram g = MinsetGram::from_reps(ld_minimal_vectors(lat).reps);
          if (!seed.is_none()) g = g.scrambled(seed.cast<std::uint64_t>());
          return mat_to_py(g.to_matrix());
        },
        py::arg("d"), py::arg("holes"), py::arg("scramble_seed") = py::none());

  m.def("enumerate_perfect", [](unsigned d, bool long_running) {
    EnumerateOptions opts;
    opts.long_running = long_running;
    py::list out;
    for (const PerfectLatticeRecord& r : enumerate_perfect(d, opts)) {
      py::dict rec;
      rec["dimension"] = r.dimension;
      rec["gram"] = mat_to_py(r.gram);
      rec["determinant"] = to_py(r.determinant);
      rec["kissing_pairs"] = r.kissing_pairs;
      rec["d2_rank"] = r.d2_rank;
      rec["overlattice_index"] = to_py(r.overlattice_index);
      rec["label"] = r.label;
      out.append(rec);
    }
    return out;
  }, py::arg("d"), py::arg("long_running") = false);

  m.def("root_lattice_extremes", [](const std::string& type, unsigned dim) {
    RootType t = type == "A" ? RootType::A : RootType::D;
    return to_py(root_lattice_extremes(t, dim));
  });
  m.def("hollow_index", [](const py::sequence& gens) {
    auto [hollow, index] = hollow_index(mat_from_py(gens));
    return py::make_tuple(hollow, to_py(index));
  });
  m.def("small_height_basis", [](const py::sequence& vecs) {
    SmallHeightBasis shb = small_height_basis(mat_from_py(vecs));
    py::dict out;
    out["basis"] = mat_to_py(shb.basis);
    out["alpha"] = mat_to_py(shb.alpha);
    out["index"] = to_py(shb.index);
    return out;
  });
}
