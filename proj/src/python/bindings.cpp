// Python bindings. Exact values cross the boundary as "num/den" strings;
// the confdesign package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "confdesign/classify/classify.hpp"
#include "confdesign/lattice/lattice.hpp"
#include "confdesign/qforms/qseries.hpp"
#include "confdesign/rootsys/rootsys.hpp"
#include "confdesign/trace/trace.hpp"
#include "confdesign/virasoro/tensor.hpp"
#include "confdesign/virasoro/verma.hpp"

namespace py = pybind11;
using namespace confdesign;

namespace {

std::vector<std::string> strs(const std::vector<Rat>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

TensorModule module_for(bool half) {
  const RatFunc c = RatFunc::var(Var::c);
  return half ? TensorModule::half_case(c) : TensorModule::vacuum_pair(c, RatFunc::var(Var::e));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact conformal design computations";

  m.def("kac_det", [](int n) {
    const auto f = kac_det_vacuum(n);
    std::vector<std::pair<std::string, int>> factors;
    for (const auto& u : f.factors) factors.emplace_back(u.factor.to_string("c"), u.multiplicity);
    return py::make_tuple(to_string(f.content), factors);
  }, py::arg("degree"));

  m.def("hw_vectors", [](int n, bool half) {
    std::vector<std::string> out;
    for (const auto& v : hw_solve(module_for(half), n)) out.push_back(v.to_string());
    return out;
  }, py::arg("degree"), py::arg("half") = false);

  m.def("trace_json", [](int degree, int index, const std::string& target, bool half) {
    const auto vs = hw_solve(module_for(half), degree);
    if (index < 0 || static_cast<std::size_t>(index) >= vs.size()) throw py::index_error("no such vector");
    Charges ch;
    if (half) ch.e = RatFunc(frac(1, 2));
    if (target == "module") return trace_lowest(vs[index], RatFunc::var(Var::h), ch).to_json().dump();
    if (target == "V2") return trace_V2(vs[index], ch).to_json().dump();
    throw py::value_error("target must be 'module' or 'V2'");
  }, py::arg("degree"), py::arg("index") = 0, py::arg("target") = "module", py::arg("half") = false);

  m.def("d6_formula", [] { return d6_formula().to_string(); });
  m.def("d8_formula", [] { return d8_formula().to_string(); });
  m.def("evaluate_d6", [](const std::string& c) { return to_string(evaluate_at(d6_formula(), parse_rat(c))); });
  m.def("evaluate_d8", [](const std::string& c) { return to_string(evaluate_at(d8_formula(), parse_rat(c))); });

  m.def("diophant", [](unsigned threads) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : diophant_scan(threads)) out.emplace_back(to_string(r.c), r.d.get_str());
    return out;
  }, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("table1", [](unsigned threads) {
    std::vector<py::tuple> out;
    const auto rows = table1(threads);
    for (const auto& r : rows) {
      py::object h = py::none();
      if (r.h) h = py::make_tuple(to_string(r.h->first), to_string(r.h->second));
      out.push_back(py::make_tuple(to_string(r.c), r.d.get_str(), h));
    }
    return out;
  }, py::arg("threads") = 1);

  m.def("vacuum_character", [](const std::string& c, std::size_t n) {
    const auto s = vacuum_character(parse_rat(c), n);
    return py::make_tuple(s.lead48, strs(s.coeffs));
  }, py::arg("c"), py::arg("n") = 10);

  m.def("extremal_character", [](int c, std::size_t n) {
    const auto x = extremal_character(c, n);
    py::dict d;
    d["c"] = x.c;
    d["k"] = x.k;
    d["lead48"] = x.series.lead48;
    d["coeffs"] = strs(x.series.coeffs);
    d["A1"] = to_string(x.A1);
    d["A2"] = to_string(x.A2);
    return d;
  }, py::arg("c"), py::arg("n") = 8);

  m.def("design_strength", [](int c) {
    const auto d = extremal_design_strength(c);
    return py::make_tuple(d.t, d.extra);
  }, py::arg("c"));

  m.def("root_sum", [](const std::string& type, int rank, int l) {
    return to_string(root_sum_R(l, build_roots(type, rank)));
  }, py::arg("type"), py::arg("rank"), py::arg("l"));

  m.def("lattice_design", [](const std::vector<std::vector<std::string>>& gram, const std::string& norm, int t_max,
                             unsigned threads) {
    QMatrix g(gram.size(), gram.size());
    for (std::size_t i = 0; i < gram.size(); ++i) {
      if (gram[i].size() != gram.size()) throw py::value_error("Gram matrix must be square");
      for (std::size_t j = 0; j < gram.size(); ++j) g(i, j) = parse_rat(gram[i][j]);
    }
    const Shell s = shell_enum(make_lattice("python", g), parse_rat(norm), threads);
    const auto r = design_report(s, t_max);
    py::dict d;
    d["size"] = s.vectors.size();
    d["t"] = r.t;
    d["failed_degree"] = r.failed_degree;
    d["witness_pole"] = r.witness_pole;
    d["witness_sum"] = to_string(r.witness_sum);
    return d;
  }, py::arg("gram"), py::arg("norm"), py::arg("t_max") = 11, py::arg("threads") = 1);

  m.def("a1_identity", [](int n) { return a1_identity_check(n).ok; }, py::arg("n") = 10);
}
