#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfcert/certificate.hpp"
#include "surfcert/embedding.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/harness.hpp"
#include "surfcert/oracle.hpp"
#include "surfcert/prover.hpp"
#include "surfcert/verifier.hpp"

namespace py = pybind11;
using namespace surfcert;

namespace {

Graph graph_from_edges(const std::vector<std::uint64_t>& vertices,
                       const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  std::vector<VertexId> vs;
  for (auto v : vertices) vs.push_back(VertexId(v));
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back(Edge::of(VertexId(a), VertexId(b)));
  return Graph::from_edges(vs, es);
}

std::vector<std::uint64_t> raw_ids(const std::vector<VertexId>& ids) {
  std::vector<std::uint64_t> out;
  for (VertexId v : ids) out.push_back(v.value);
  return out;
}

py::dict run_report(const RunReport& r) {
  py::dict verdicts;
  for (const auto& [v, verdict] : r.verdicts) {
    if (verdict.accepted) {
      verdicts[py::int_(v.value)] = py::none();
    } else {
      verdicts[py::int_(v.value)] = py::make_tuple(to_string(*verdict.rule), verdict.detail);
    }
  }
  py::dict out;
  out["accepted"] = r.all_accepted;
  out["rejections"] = verdicts;
  return out;
}

py::dict oracle_result(const OracleResult& r) {
  py::dict out;
  out["min_eg"] = r.min_eg;
  out["systems_searched"] = r.systems_searched;
  out["witness"] = r.witness;
  return out;
}

}  // namespace

PYBIND11_MODULE(_surfcert, m) {
  m.doc() = "Local certificates for the Euler genus of a graph";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ProverError>(m, "ProverError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("vertices"), py::arg("edges"))
      .def_static("parse", &parse_graph, py::arg("text"))
      .def("format", &format_graph)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("vertices", [](const Graph& g) { return raw_ids(g.vertices()); })
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.lo.value, e.hi.value);
                               return out;
                             })
      .def("neighbors", [](const Graph& g, std::uint64_t v) { return raw_ids(g.neighbors(VertexId(v))); })
      .def("is_tree", &Graph::is_tree)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  py::class_<EmbeddingScheme>(m, "EmbeddingScheme")
      .def_static("parse", &parse_embedding, py::arg("text"))
      .def_static("ascending", &ascending_scheme, py::arg("graph"))
      .def("format", &format_embedding)
      .def_property_readonly("orientable_mode", [](const EmbeddingScheme& s) { return s.orientable_mode; });

  py::class_<CertificateAssignment>(m, "Certificates")
      .def_static("parse", &parse_bundle, py::arg("text"))
      .def("format", &format_bundle)
      .def_property_readonly("packed", &CertificateAssignment::packed)
      .def_property_readonly("target_eg", [](const CertificateAssignment& a) { return a.target_eg; })
      .def_property_readonly("mode", [](const CertificateAssignment& a) { return to_string(a.mode); })
      .def(py::self == py::self);

  m.def("heawood_bound", &heawood_bound, py::arg("euler_genus"));
  m.def("degeneracy", [](const Graph& g) { return degeneracy_order(g).k; });

  m.def(
      "face_counts",
      [](const Graph& g, const EmbeddingScheme& s) {
        auto d = diagnose(g, s);
        py::dict out;
        out["phi"] = d.phi_face_count;
        out["doubled"] = d.doubled_face_count;
        out["euler_genus"] = d.euler_genus_doubled;
        out["phi_genus"] = d.euler_genus_phi;
        out["orientable"] = d.orientable;
        return out;
      },
      py::arg("graph"), py::arg("scheme"));

  m.def(
      "min_genus",
      [](const Graph& g, bool orientable, std::uint64_t budget) {
        OracleBudget b;
        if (budget) b.max_rotation_systems = budget;
        return oracle_result(orientable ? min_genus_orientable(g, b) : min_genus_nonorientable(g, b));
      },
      py::arg("graph"), py::arg("orientable") = true, py::arg("budget") = 0);

  m.def("is_embeddable",
        [](const Graph& g, std::int64_t target, bool orientable) {
          return is_embeddable(g, target, orientable);
        },
        py::arg("graph"), py::arg("target_eg"), py::arg("orientable") = true);

  m.def(
      "prove",
      [](const Graph& g, const EmbeddingScheme& s, std::int64_t target, bool packed) {
        CertificateAssignment a = prove(g, s, target);
        return packed ? pack(g, a) : a;
      },
      py::arg("graph"), py::arg("scheme"), py::arg("target_eg"), py::arg("packed") = false);
  m.def("prove_tree", &prove_tree, py::arg("graph"), py::arg("target_eg") = 0);
  m.def("pack", &pack, py::arg("graph"), py::arg("certificates"));
  m.def("unpack", &unpack, py::arg("certificates"));

  m.def(
      "verify",
      [](const Graph& g, const CertificateAssignment& a, std::optional<std::int64_t> target,
         std::optional<bool> orientable) {
        VerifierParams p;
        p.target_eg = target.value_or(a.target_eg);
        p.orientable = orientable.value_or(a.mode != CertMode::nonorientable);
        p.packed = a.packed();
        return run_report(run_verification(g, a, p));
      },
      py::arg("graph"), py::arg("certificates"), py::arg("target_eg") = py::none(),
      py::arg("orientable") = py::none());

  m.def(
      "relabel",
      [](const Graph& g, const CertificateAssignment& a, std::uint64_t seed) {
        return relabel_ids(g, a, seed);
      },
      py::arg("graph"), py::arg("certificates"), py::arg("seed"));

  m.def("rules", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : enumerate_rules()) out.emplace_back(to_string(r.tag), r.description);
    return out;
  });

  m.def(
      "fuzz",
      [](const Graph& g, std::int64_t target, bool orientable, std::size_t trials,
         std::size_t mutate_trials, std::uint64_t seed) {
        const VerifierParams p{target, orientable, false};
        FuzzReport r = fuzz_soundness(g, p, default_battery(orientable, seed, mutate_trials), trials);
        py::dict per;
        for (const auto& s : r.strategies) per[to_string(s.kind)] = py::make_tuple(s.trials, s.violations);
        py::dict out;
        out["passed"] = r.passed();
        out["violations"] = r.violations;
        out["strategies"] = per;
        out["report"] = format_fuzz_report(r, g, p);
        return out;
      },
      py::arg("graph"), py::arg("target_eg"), py::arg("orientable") = true,
      py::arg("trials") = 1000, py::arg("mutate_trials") = 100, py::arg("seed") = 0);

  m.def(
      "meter",
      [](std::size_t max_n) {
        auto rows = meter_cycle_family(max_n);
        std::vector<std::pair<std::size_t, std::uint64_t>> out;
        for (const auto& r : rows) out.emplace_back(r.n, r.max_bits);
        return py::make_tuple(out, log_growth_ok(rows));
      },
      py::arg("max_n") = 1024);

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
  m.def(
      "fixture",
      [](const std::string& name) {
        const Fixture& f = fixture(name);
        py::dict out;
        out["graph"] = f.graph;
        out["scheme"] = f.scheme;
        out["phi_faces"] = f.phi_faces;
        out["doubled_faces"] = f.doubled_faces;
        out["euler_genus"] = f.euler_genus;
        out["phi_genus"] = f.phi_genus;
        out["tree_mode"] = f.tree_mode;
        return out;
      },
      py::arg("name"));
}
