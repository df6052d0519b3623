// Python bindings over the exact core: poset construction, counting,
// distributions, inequality checks, tableau counts, and the sequence
// helpers. Counts come back as Python ints, probabilities as Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linext/atlas.hpp"
#include "linext/counting.hpp"
#include "linext/inequalities.hpp"
#include "linext/json_io.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/search.hpp"
#include "linext/sequences.hpp"
#include "linext/stats.hpp"
#include "linext/tableaux.hpp"
#include "linext/version.hpp"

namespace py = pybind11;
using namespace linext;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

py::object to_fraction(const Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.num()), to_py(r.den()));
}

Mask to_mask(const std::vector<int>& elems) { return list_to_mask(elems); }

py::dict verdict_dict(const ineq::Verdict& v) {
  py::dict out;
  out["check_id"] = v.check_id;
  out["status"] = ineq::to_string(v.status);
  out["lhs"] = to_fraction(v.lhs);
  out["rhs"] = to_fraction(v.rhs);
  out["relation"] = v.relation;
  out["witness"] = py::module_::import("json").attr("loads")(v.witness.dump());
  return out;
}

ineq::CheckParams params_from_kwargs(const py::kwargs& kwargs) {
  ineq::CheckParams ps;
  for (auto item : kwargs) {
    std::string key = py::cast<std::string>(item.first);
    if (key == "A" || key == "B" || key == "C") {
      Mask m = to_mask(py::cast<std::vector<int>>(item.second));
      if (key == "A") ps.A = m;
      if (key == "B") ps.B = m;
      if (key == "C") ps.C = m;
      continue;
    }
    int v = py::cast<int>(item.second);
    if (key == "x") ps.x = v;
    else if (key == "y") ps.y = v;
    else if (key == "z") ps.z = v;
    else if (key == "a") ps.a = v;
    else if (key == "u") ps.u = v;
    else if (key == "v") ps.v = v;
    else if (key == "w") ps.w = v;
    else if (key == "k") ps.k = v;
    else if (key == "l") ps.l = v;
    else throw std::invalid_argument("unknown parameter: " + key);
  }
  return ps;
}

}  // namespace

PYBIND11_MODULE(linext, m) {
  m.doc() = "exact linear-extension statistics and correlation-inequality checks";
  m.attr("__version__") = kVersion;

  py::class_<Poset>(m, "Poset")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& relations) {
             return Poset::from_relations(n, relations);
           }),
           py::arg("n"), py::arg("relations") = std::vector<std::pair<int, int>>{})
      .def_static("chain", &Poset::chain)
      .def_static("antichain", &Poset::antichain)
      .def_static("zigzag", &Poset::zigzag)
      .def_static("from_permutation", &Poset::from_permutation)
      .def_static("parallel_sum", &Poset::parallel_sum)
      .def_static("linear_sum", &Poset::linear_sum)
      .def("dual", &Poset::dual)
      .def("deleted",
           [](const Poset& p, const std::vector<int>& elems) {
             return p.deleted(to_mask(elems));
           })
      .def("__len__", &Poset::size)
      .def("less", &Poset::less)
      .def("minimals", [](const Poset& p) { return mask_to_list(p.minimals()); })
      .def("maximals", [](const Poset& p) { return mask_to_list(p.maximals()); })
      .def("up_closure",
           [](const Poset& p, const std::vector<int>& elems) {
             return mask_to_list(p.up_closure(to_mask(elems)));
           })
      .def("cover_pairs", &Poset::cover_pairs)
      .def("canonical_form",
           [](const Poset& p) { return py::bytes(p.canonical_form()); })
      .def("to_json", [](const Poset& p) { return io::poset_to_json(p).dump(); })
      .def("__eq__", [](const Poset& p, const Poset& q) { return p == q; })
      .def("__repr__", [](const Poset& p) {
        return "Poset(" + io::poset_to_json(p).dump() + ")";
      });

  m.def("count", [](const Poset& p) { return to_py(counting::count(p)); });
  m.def("count_with_value", [](const Poset& p, int anchor, int k) {
    return to_py(counting::count_with_value(p, anchor, k));
  });
  m.def("value_counts", [](const Poset& p, int anchor) {
    py::list out;
    for (const auto& c : counting::value_counts(p, anchor)) out.append(to_py(c));
    return out;
  });
  m.def("fmin_counts", [](const Poset& p, const std::vector<int>& subset) {
    py::list out;
    for (const auto& c : counting::fmin_counts(p, to_mask(subset))) out.append(to_py(c));
    return out;
  });
  m.def("cross_product_count", [](const Poset& p, int x, int y, int z, int k, int l) {
    return to_py(counting::cross_product_count(p, x, y, z, k, l));
  });
  m.def("extensions", [](const Poset& p) {
    py::list out;
    counting::enumerate(p, [&](const std::vector<int>& f) { out.append(f); });
    return out;
  });

  m.def("value_distribution", [](const Poset& p, int x) {
    py::list out;
    for (const auto& q : stats::value_distribution(p, x)) out.append(to_fraction(q));
    return out;
  });
  m.def("mean_value", [](const Poset& p, int x) {
    return to_fraction(stats::expectation(p, stats::Expr::value(x)));
  });
  m.def("covariance", [](const Poset& p, int x, int y) {
    return to_fraction(stats::covariance(p, x, y));
  });
  m.def("prob_less", [](const Poset& p, int x, int y) {
    return to_fraction(stats::prob_less(p, x, y));
  });

  m.def("check", [](const std::string& id, const Poset& p, const py::kwargs& kwargs) {
    return verdict_dict(ineq::check(id, p, params_from_kwargs(kwargs)));
  });
  m.def("checks", []() {
    py::list out;
    for (const auto& info : ineq::registry()) {
      py::dict row;
      row["id"] = info.id;
      row["conjecture"] = info.conjecture;
      row["hidden"] = info.hidden;
      row["statement"] = info.statement;
      out.append(row);
    }
    return out;
  });
  m.def("sweep", [](const Poset& p, const std::vector<std::string>& ids) {
    auto result = ineq::sweep(p, ids);
    py::dict out;
    py::dict counts;
    for (const auto& [id, c] : result.counts) {
      counts[py::str(id)] =
          py::make_tuple(c.holds, c.equality, c.fails, c.vacuous);
    }
    out["counts"] = counts;
    py::list bad;
    for (const auto& v : result.exceptions) bad.append(verdict_dict(v));
    out["non_holds"] = bad;
    out["proved_failure"] = result.proved_failure;
    return out;
  }, py::arg("poset"), py::arg("checks") = std::vector<std::string>{});

  m.def("atlas_matrix", [](const Poset& p, int anchor, int k) {
    auto am = atlas::build_atlas(p, anchor, k);
    auto rep = atlas::check_hyp(am.m);
    py::list rows;
    for (int i = 0; i < am.d; ++i) {
      py::list row;
      for (int j = 0; j < am.d; ++j) row.append(to_py(am.m.at(i, j)));
      rows.append(row);
    }
    py::list coeffs;
    for (const auto& c : rep.char_poly) coeffs.append(to_py(c));
    py::dict out;
    out["matrix"] = rows;
    out["char_poly"] = coeffs;
    out["positive_eigenvalues"] = rep.positive_eigenvalues;
    out["hyperbolic"] = rep.is_hyperbolic;
    return out;
  });

  m.def("syt_count", [](const std::string& shape) {
    return to_py(tableaux::syt_count(tableaux::SkewShape::parse(shape)));
  });
  m.def("corner_distribution", [](const std::string& shape) {
    py::dict out;
    for (const auto& [cell, prob] :
         tableaux::corner_distribution(tableaux::Partition::parse(shape))) {
      out[py::make_tuple(cell.row, cell.col)] = to_fraction(prob);
    }
    return out;
  });
  m.def("hook_walk", [](const std::string& shape, std::uint64_t seed, int samples) {
    SplitMix64 rng(seed);
    auto lambda = tableaux::Partition::parse(shape);
    py::dict out;
    std::map<tableaux::Cell, long> hits;
    for (int i = 0; i < samples; ++i) ++hits[tableaux::hook_walk_sample(lambda, rng)];
    for (const auto& [cell, c] : hits) out[py::make_tuple(cell.row, cell.col)] = c;
    return out;
  }, py::arg("shape"), py::arg("seed") = 1, py::arg("samples") = 1);

  m.def("euler_numbers", [](int upto) {
    py::list out;
    for (const auto& v : sequences::euler_numbers(upto)) out.append(to_py(v));
    return out;
  });
  m.def("entringer", [](int n, int k) { return to_py(sequences::entringer(n, k)); });

  m.def("exhaustive_posets", [](int n) { return search::exhaustive_posets(n); });
}
