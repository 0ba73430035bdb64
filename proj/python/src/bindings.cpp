#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "confcoh/bockstein.hpp"
#include "confcoh/clss.hpp"
#include "confcoh/configcoh.hpp"
#include "confcoh/f2algebra.hpp"
#include "confcoh/render.hpp"
#include "confcoh/stiefel.hpp"
#include "confcoh/verify.hpp"

namespace py = pybind11;
using namespace confcoh;

namespace {

SpaceId space_of(const std::string& kind, int m) { return {parse_space(kind), m}; }

GroupId group_of(const std::string& g) {
  if (g == "D8") return GroupId::D8;
  if (g == "Z2xZ2") return GroupId::Z2xZ2;
  throw Error(ErrorKind::InvalidArgument, "unknown group " + g);
}

py::object py_int(const mpz_class& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

IntMatrix matrix_of(const std::vector<std::vector<py::int_>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix a(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = mpz_class(py::str(rows[r][c]).cast<std::string>());
  }
  return a;
}

std::vector<AbGroup2> table_of(const GradedGroups& g) {
  std::vector<AbGroup2> out;
  for (int i = 0; i <= g.support_bound(); ++i) out.push_back(g.at(i));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Cohomology of configuration spaces of two points in real projective space";

  py::register_exception<Error>(mod, "ConfcohError", PyExc_ValueError);

  py::class_<AbGroup2>(mod, "AbGroup2")
      .def(py::init([](int free, std::vector<int> exps) { return AbGroup2(free, std::move(exps)); }), py::arg("free") = 0,
           py::arg("torsion_exponents") = std::vector<int>{})
      .def_static("elementary", &AbGroup2::elementary)
      .def_static("braces", &AbGroup2::braces)
      .def_property_readonly("free_rank", &AbGroup2::free_rank)
      .def_property_readonly("torsion_exponents", &AbGroup2::torsion_exponents)
      .def_property_readonly("torsion_rank", &AbGroup2::torsion_rank)
      .def("torsion", &AbGroup2::torsion)
      .def("is_zero", &AbGroup2::is_zero)
      .def("to_json", [](const AbGroup2& g) { return to_json(g).dump(); })
      .def("__eq__", [](const AbGroup2& a, const AbGroup2& b) { return a == b; })
      .def("__str__", &AbGroup2::to_string)
      .def("__repr__", [](const AbGroup2& g) { return "AbGroup2(" + g.to_string() + ")"; });

  mod.def("smith_normal_form", [](const std::vector<std::vector<py::int_>>& rows) {
    SmithForm s = smith_normal_form(matrix_of(rows));
    py::list diag;
    for (const auto& d : s.diagonal) diag.append(py_int(d));
    return py::make_tuple(diag, s.rank);
  });
  mod.def("group_from_presentation",
          [](const std::vector<std::vector<py::int_>>& rows) { return group_from_presentation(matrix_of(rows)); });

  mod.def("cohomology", [](const std::string& space, int m, int i) { return cohomology(space_of(space, m), i); });
  mod.def("cohomology_table", [](const std::string& space, int m) { return table_of(cohomology_table(space_of(space, m))); });
  mod.def("homology_table", [](const std::string& space, int m) { return table_of(homology(space_of(space, m))); });
  mod.def("twisted_cohomology",
          [](const std::string& space, int m, int j) { return twisted_cohomology(space_of(space, m), j); });
  mod.def("mod2_dimension", [](const std::string& space, int m, int i) { return mod2_dimension(space_of(space, m), i); });
  mod.def("orientable", [](const std::string& space, int m) { return space_orientable(space_of(space, m)); });

  auto ring = [](const std::string& space, int m) {
    return parse_space(space) == SpaceKind::UnorderedB ? unordered_config_ring(m) : ordered_config_ring(m);
  };
  mod.def("ring_dimension", [ring](const std::string& space, int m, int d) { return quotient_dimension(ring(space, m), d); });
  mod.def("sq1_homology_rank",
          [ring](const std::string& space, int m, int d) { return sq1_homology_rank(ring(space, m), d); });
  mod.def("split_sq1_homology", [](int m, int d) {
    SplitRanks s = split_sq1_homology(m, d);
    return py::make_tuple(s.rank_R, s.rank_xR);
  });

  mod.def("rank_recursion", [](const std::string& space, int m) { return rank_recursion(space_of(space, m)).r; });
  mod.def("p_star", [](const std::string& group, int m, int i) {
    PStarProfile p = p_star_profile(group_of(group), m, i);
    return py::make_tuple(behavior_name(p.behavior), p.kernel_rank);
  });

  mod.def("clss_abutment", [](const std::string& group, int m) {
    ClssRun run = m % 2 == 0 ? run_even(group_of(group), m) : run_odd(group_of(group), m);
    return py::make_tuple(table_of(run.abutment), run.report.passed());
  });
  mod.def("m3_scenario_json", [](const std::string& option) {
    if (option != "a" && option != "b") throw Error(ErrorKind::InvalidArgument, "option is a or b");
    ScenarioRun run = m3_scenario(option[0]);
    nlohmann::json doc{{"scenario", run.name}, {"passed", run.report.passed()}, {"pages", nlohmann::json::array()}};
    for (const auto& p : run.pages) doc["pages"].push_back(p.to_json());
    return doc.dump();
  });

  mod.def("stiefel_cohomology", &stiefel_cohomology);
  mod.def("oriented_grassmannian_group", &oriented_grassmannian_group);

  mod.def("table1", [](const std::string& format) { return render_table1(parse_format(format)); },
          py::arg("format") = "table");
  mod.def("table1_cell", &table1_cell);
  mod.def("verify_json", [](const std::string& suite, int lo, int hi) {
    VerificationReport rep;
    {
      py::gil_scoped_release release;
      rep = run_suite(parse_suite(suite), MRange{lo, hi});
    }
    return rep.to_json().dump();
  });
}
