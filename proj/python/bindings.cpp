// Python surface. Values cross the boundary as JSON text in the same formats
// the command line uses, so exact fractions stay exact.

#include "ptg/catalog.hpp"
#include "ptg/cli.hpp"
#include "ptg/error.hpp"
#include "ptg/io.hpp"
#include "ptg/recognize.hpp"
#include "ptg/transforms.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ptg;
using io::Json;

namespace {

Structure structure(const std::string& text) { return io::structure_from_json(io::parse_json(text)); }
Representation rep(const std::string& text) { return io::rep_from_json(io::parse_json(text)); }
std::string dump(const Json& j) { return j.dump(); }

SearchLimits limits(GraphClass cls, std::optional<int> max_n, std::optional<long> max_branches, std::optional<long> budget_ms) {
  SearchLimits lim = default_limits(cls);
  if (max_n) lim.max_n = *max_n;
  if (max_branches) lim.max_branches = *max_branches;
  if (budget_ms) lim.budget_ms = *budget_ms;
  return lim;
}

Labeling labels(const std::vector<std::string>& values) {
  Labeling f;
  for (const auto& v : values) f.values.push_back(parse_rat(v));
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact interval representations, graph class recognition and certificates";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("classify", [](const std::string& s, const std::string& cls, std::optional<int> max_n, std::optional<long> max_branches,
                       std::optional<long> budget_ms) {
    GraphClass c = parse_graph_class(cls);
    Certificate cert;
    {
      py::gil_scoped_release release;
      cert = classify(structure(s), c, limits(c, max_n, max_branches, budget_ms));
    }
    return dump(io::to_json(cert));
  }, py::arg("structure"), py::arg("cls"), py::arg("max_n") = py::none(), py::arg("max_branches") = py::none(),
        py::arg("budget_ms") = py::none());

  m.def("recheck", [](const std::string& s, const std::string& cert) {
    auto r = recheck_certificate(structure(s), io::certificate_from_json(io::parse_json(cert)));
    return py::make_tuple(r.ok, r.message);
  });

  m.def("realize", [](const std::string& r) { return dump(io::to_json(realize(rep(r)))); });
  m.def("verify", [](const std::string& r, const std::string& s) {
    auto v = verify(rep(r), structure(s));
    return py::make_tuple(v.ok, v.missing, v.extra);
  });

  m.def("cmptg_to_umtg", [](const std::string& r) { return dump(io::to_json(cmptg_to_umtg(rep(r)))); });
  m.def("umtg_to_cmptg", [](const std::string& r) { return dump(io::to_json(umtg_to_cmptg(rep(r)))); });
  m.def("pcmptg_to_ucmptg", [](const std::string& r) { return dump(io::to_json(pcmptg_to_ucmptg(rep(r)))); });
  m.def("pcmptg_to_50mtg", [](const std::string& r) { return dump(io::to_json(pcmptg_to_50mtg(rep(r)))); });
  m.def("proper_to_ucmptg", [](const std::string& s) {
    auto st = structure(s);
    if (!std::holds_alternative<Graph>(st)) throw InvalidInput("expected a graph");
    return dump(io::to_json(proper_to_ucmptg(std::get<Graph>(st))));
  });
  m.def("optimized_to_cicd", [](const std::string& s, const std::vector<std::string>& f) {
    auto st = structure(s);
    if (!std::holds_alternative<Digraph>(st)) throw InvalidInput("expected a digraph");
    return dump(io::to_json(optimized_to_cicd(std::get<Digraph>(st), labels(f))));
  });
  m.def("cicd_to_labeling", [](const std::string& r) { return dump(io::to_json(cicd_to_labeling(rep(r)))); });

  m.def("check_condition", [](const std::string& s, const std::string& kind, const std::vector<int>& ordering) {
    Structure st = structure(s);
    Ordering o{ordering};
    o.validate(structure_size(st));
    return dump(io::to_json(check_condition(st, o, parse_condition_kind(kind))));
  });
  m.def("find_ordering", [](const std::string& s, const std::string& kind) {
    return dump(io::to_json(find_ordering(structure(s), parse_condition_kind(kind))));
  });
  m.def("check_optimized", [](const std::string& s, const std::vector<std::string>& f) {
    auto r = check_optimized(structure(s), labels(f));
    return py::make_tuple(r.holds, r.violation);
  });
  m.def("augmented_matrix", [](const std::string& s, std::optional<std::vector<int>> ordering) {
    Structure st = structure(s);
    const int n = structure_size(st);
    Ordering o = ordering ? Ordering{*ordering} : Ordering::identity(n);
    o.validate(n);
    BinaryMatrix a = std::visit([&](const auto& x) { return augmented_adjacency(x, o); }, st);
    return a.to_rows();
  }, py::arg("structure"), py::arg("ordering") = py::none());

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def("catalog", [](const std::string& name, std::optional<int> n, std::optional<std::string> alpha) {
    CatalogParams p;
    p.n = n;
    if (alpha) p.alpha = parse_rat(*alpha);
    return dump(io::to_json(instance(name, p)));
  }, py::arg("name"), py::arg("n") = py::none(), py::arg("alpha") = py::none());

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
