#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "c4lab/cli.hpp"

namespace py = pybind11;

namespace {

using namespace c4lab;

PipelineConfig pipeline_config(const std::string& epsilon, const std::string& gamma) {
  PipelineConfig pc;
  pc.epsilon = Rational::parse(epsilon);
  if (!gamma.empty()) pc.gamma_override = Rational::parse(gamma);
  return pc;
}

RunConfig config_from_dict(const py::dict& d) {
  RunConfig cfg;
  auto str = [&](const char* k, std::string& out) {
    if (d.contains(k)) out = py::cast<std::string>(d[k]);
  };
  auto opt_str = [&](const char* k, std::optional<std::string>& out) {
    if (d.contains(k)) out = py::cast<std::string>(d[k]);
  };
  auto opt_int = [&](const char* k, std::optional<int>& out) {
    if (d.contains(k)) out = py::cast<int>(d[k]);
  };
  str("op", cfg.op);
  str("input", cfg.input);
  str("out", cfg.out);
  str("format", cfg.format);
  str("family", cfg.family);
  str("model", cfg.model);
  opt_str("epsilon", cfg.epsilon);
  opt_str("alpha", cfg.alpha);
  opt_str("gamma", cfg.gamma);
  opt_str("delta", cfg.delta);
  opt_str("p", cfg.p);
  opt_str("const_c", cfg.const_c);
  opt_str("const_d", cfg.const_d);
  opt_str("x", cfg.x);
  opt_str("y", cfg.y);
  opt_str("blocks", cfg.blocks);
  if (d.contains("seed")) cfg.seed = py::cast<long long>(d["seed"]);
  if (d.contains("strong")) cfg.strong = py::cast<bool>(d["strong"]);
  opt_int("exact_cap", cfg.exact_cap);
  opt_int("r", cfg.r);
  opt_int("k", cfg.k);
  opt_int("f", cfg.f);
  opt_int("edits", cfg.edits);
  opt_int("trials", cfg.trials);
  opt_int("n", cfg.n);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "induced-C4 structure toolkit core";

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const std::string& text) { return Rational::parse(text); }))
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &Rational::to_double)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; });

  py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>())
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("toggle_edge", &Graph::toggle_edge)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("serialize_graph", &serialize_graph, py::arg("g"));
  m.def("count_induced_c4", &count_induced_c4, py::arg("g"));
  m.def(
      "find_induced_c4",
      [](const Graph& g) -> std::optional<std::vector<int>> {
        auto w = find_induced_c4(g);
        if (!w) return std::nullopt;
        return std::vector<int>(w->begin(), w->end());
      },
      py::arg("g"));
  m.def(
      "count_induced_cl", [](const Graph& g, int l) { return count_induced_cl(g, l); },
      py::arg("g"), py::arg("l"));
  m.def(
      "is_chordal", [](const Graph& g) { return find_induced_cycle_geq4(g).chordal; },
      py::arg("g"));
  m.def(
      "max_clique_size", [](const Graph& g) { return max_clique(g).size; }, py::arg("g"));
  m.def(
      "blowup_edges", [](int k, int f) { return blowup_edge_count(BlowupSpec{k, f}); },
      py::arg("k"), py::arg("f"));
  m.def(
      "build_blowup", [](int k, int f) { return blowup_cycle(BlowupSpec{k, f}).graph; },
      py::arg("k"), py::arg("f"));
  m.def(
      "gen_graph",
      [](const std::string& model, int n, const std::string& p, int k, int f,
         std::uint64_t seed) {
        Rng rng(seed);
        return generate_graph(model, n, Rational::parse(p), k, f, rng);
      },
      py::arg("model"), py::arg("n") = 0, py::arg("p") = "1/2", py::arg("k") = 0,
      py::arg("f") = 0, py::arg("seed") = 0);
  m.def(
      "edit_distance_bounds",
      [](const Graph& g, const std::string& target) {
        TargetProperty prop =
            target == "chordal" ? TargetProperty::Chordal : TargetProperty::C4Free;
        FarnessCertificate c = farness_certificate(g, prop);
        py::object exact = c.exact ? py::object(py::int_(*c.exact)) : py::object(py::none());
        return py::make_tuple(c.lower, exact, c.upper);
      },
      py::arg("g"), py::arg("target") = "induced-c4-free");
  m.def(
      "c4_pipeline_json",
      [](const Graph& g, const std::string& epsilon, const std::string& gamma,
         std::uint64_t seed) {
        Rng rng(seed);
        return json_of(c4_pipeline(g, pipeline_config(epsilon, gamma), rng)).dump(2);
      },
      py::arg("g"), py::arg("epsilon"), py::arg("gamma") = "", py::arg("seed") = 0);
  m.def(
      "chordal_pipeline_json",
      [](const Graph& g, const std::string& epsilon, const std::string& gamma,
         std::uint64_t seed) {
        Rng rng(seed);
        return json_of(chordal_pipeline(g, pipeline_config(epsilon, gamma), rng)).dump(2);
      },
      py::arg("g"), py::arg("epsilon"), py::arg("gamma") = "", py::arg("seed") = 0);
  m.def(
      "run_cli_json",
      [](const py::dict& d) {
        RunOutput out = run(config_from_dict(d));
        return py::make_tuple(out.report.dump(2), out.exit_code);
      },
      py::arg("config"), "run one subcommand; returns (report_json, exit_code)");
}
