#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "surfcert/embedding.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/harness.hpp"
#include "surfcert/oracle.hpp"
#include "surfcert/prover.hpp"

using namespace surfcert;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!passed) detail << "; ";
    passed = false;
    detail << what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct RandomInstance {
  Graph g;
  EmbeddingScheme s;
};

RandomInstance random_instance(std::mt19937_64& rng, bool all_positive) {
  std::uniform_int_distribution<std::size_t> pick_n(2, 8);
  const std::size_t n = pick_n(rng);
  std::vector<VertexId> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(VertexId(i));

  std::set<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.insert(Edge::of(vs[i], vs[parent(rng)]));
  }
  std::bernoulli_distribution extra(0.35);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (extra(rng)) edges.insert(Edge::of(vs[i], vs[j]));
    }
  }
  Graph g = Graph::from_edges(vs, {edges.begin(), edges.end()});

  EmbeddingScheme s;
  for (VertexId v : g.vertices()) {
    auto rot = g.neighbors(v);
    std::shuffle(rot.begin(), rot.end(), rng);
    s.rotation[v] = rot;
  }
  if (!all_positive) {
    s.orientable_mode = false;
    std::bernoulli_distribution negative(0.5);
    for (const Edge& e : g.edges()) {
      if (negative(rng)) s.negative_edges.insert(e);
    }
  }
  return {std::move(g), std::move(s)};
}

Outcome oracle_exactness() {
  Outcome o;
  auto start = Clock::now();
  auto k5 = min_genus_orientable(complete_graph(5));
  const double k5_time = seconds_since(start);
  o.expect(k5.min_eg == 2, "K5 orientable min eg " + std::to_string(k5.min_eg));
  o.expect(k5.systems_searched == 7776, "K5 searched " + std::to_string(k5.systems_searched));
  o.expect(k5_time < 1.0, "K5 took " + std::to_string(k5_time) + " s");

  auto k33 = min_genus_orientable(complete_bipartite_graph(3, 3));
  o.expect(k33.min_eg == 2, "K3,3 orientable min eg " + std::to_string(k33.min_eg));
  o.expect(k33.systems_searched == 64, "K3,3 searched " + std::to_string(k33.systems_searched));

  auto k5n = min_genus_nonorientable(complete_graph(5));
  o.expect(k5n.min_eg == 1, "K5 non-orientable min eg " + std::to_string(k5n.min_eg));

  Graph c3 = cycle_graph(3);
  auto c3n = min_genus_nonorientable(c3);
  const auto F = trace_faces_doubled(c3, c3n.witness).face_count;
  o.expect(c3n.min_eg == 1, "C3 non-orientable min eg " + std::to_string(c3n.min_eg));
  o.expect(F == 1, "C3 witness F " + std::to_string(F));
  if (o.passed) o.detail << "K5 " << k5.systems_searched << " systems in " << k5_time << " s";
  return o;
}

struct RandomSchemeStats {
  std::size_t instances = 0;
  std::size_t all_positive = 0;
  std::size_t euler_failures = 0;
  std::size_t parity_failures = 0;
  std::size_t phi_mismatches = 0;
  double seconds = 0;
};

RandomSchemeStats random_schemes(std::uint64_t seed) {
  RandomSchemeStats st;
  std::mt19937_64 rng(seed);
  auto start = Clock::now();
  for (std::size_t i = 0; i < 1000; ++i) {
    const bool positive = i % 2 == 0;
    RandomInstance inst = random_instance(rng, positive);
    const Graph& g = inst.g;
    const auto F = static_cast<std::int64_t>(trace_faces_doubled(g, inst.s).face_count);
    const auto n = static_cast<std::int64_t>(g.order()), m = static_cast<std::int64_t>(g.size());
    const std::int64_t eg = euler_genus_unchecked(g, static_cast<std::size_t>(F));
    ++st.instances;
    if (n - m + F != 2 - eg || eg < 0) ++st.euler_failures;
    if (positive) {
      ++st.all_positive;
      if (eg % 2 != 0) ++st.parity_failures;
      if (trace_faces_phi(g, inst.s).face_count != static_cast<std::size_t>(F)) ++st.phi_mismatches;
    }
  }
  st.seconds = seconds_since(start);
  return st;
}

Outcome euler_invariant(const RandomSchemeStats& st) {
  Outcome o;
  o.expect(st.euler_failures == 0, std::to_string(st.euler_failures) + " Euler failures");
  o.expect(st.parity_failures == 0, std::to_string(st.parity_failures) + " odd all-positive genera");
  o.expect(st.seconds < 10.0, "took " + std::to_string(st.seconds) + " s");
  if (o.passed) o.detail << st.instances << " schemes in " << st.seconds << " s";
  return o;
}

Outcome phi_agreement(const RandomSchemeStats& st) {
  Outcome o;
  o.expect(st.phi_mismatches == 0, std::to_string(st.phi_mismatches) + " mismatches");
  if (o.passed) o.detail << st.all_positive << " all-positive schemes agree";
  return o;
}

Outcome pinned_discrepancy() {
  Outcome o;
  Graph c3 = cycle_graph(3);
  EmbeddingScheme s = ascending_scheme(c3);
  s.orientable_mode = false;
  s.negative_edges.insert(Edge::of(VertexId(1), VertexId(3)));
  const auto phi = trace_faces_phi(c3, s).face_count;
  const auto doubled = trace_faces_doubled(c3, s).face_count;
  o.expect(phi == 2, "phi count " + std::to_string(phi));
  o.expect(doubled == 1, "doubled count " + std::to_string(doubled));
  if (o.passed) o.detail << "phi 2, doubled 1";
  return o;
}

Outcome completeness(std::uint64_t seed) {
  Outcome o;
  o.expect(fixture("K7-torus").phi_faces == 14, "K7 torus F is not 14");
  auto start = Clock::now();
  SuiteReport r = completeness_suite(seed, 50);
  const double t = seconds_since(start);
  for (const auto& c : r.cases) o.expect(c.passed, c.name + ": " + c.detail);
  o.expect(t < 30.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail << r.cases.size() << " fixtures x 50 relabelings in " << t << " s";
  return o;
}

Outcome soundness(std::uint64_t seed, const std::filesystem::path& artifacts) {
  Outcome o;
  struct Instance {
    std::string name;
    Graph g;
    VerifierParams p;
  };
  const std::vector<Instance> instances = {
      {"K5-orientable-g0", complete_graph(5), {0, true, false}},
      {"K3,3-orientable-g0", complete_bipartite_graph(3, 3), {0, true, false}},
      {"C3-nonorientable-g0", cycle_graph(3), {0, false, false}},
  };
  auto start = Clock::now();
  std::size_t total = 0, violations = 0;
  for (const Instance& inst : instances) {
    try {
      FuzzReport r = fuzz_soundness(inst.g, inst.p, default_battery(inst.p.orientable, seed, 1000),
                                    10000, {artifacts, inst.name});
      for (const auto& s : r.strategies) total += s.trials;
      violations += r.violations;
      if (!r.passed()) {
        std::ostringstream os;
        os << inst.name << " " << r.violations << " violations (";
        bool first = true;
        for (const auto& s : r.strategies) {
          if (!s.violations) continue;
          os << (first ? "" : " ") << to_string(s.kind) << '=' << s.violations;
          first = false;
        }
        os << ")";
        o.expect(false, os.str());
      }
    } catch (const std::exception& e) {
      o.expect(false, inst.name + " could not run: " + e.what());
    }
  }
  const double t = seconds_since(start);
  o.expect(t < 120.0, "took " + std::to_string(t) + " s");
  if (violations) o.detail << "; artifacts in " << artifacts.string();
  if (o.passed) o.detail << total << " trials, all rejected, in " << t << " s";
  return o;
}

Outcome size_growth() {
  Outcome o;
  auto start = Clock::now();
  auto rows = meter_cycle_family(1024);
  const double t = seconds_since(start);
  o.expect(rows.size() == 8, "expected 8 cycle sizes");
  o.expect(log_growth_ok(rows), "growth above the per-doubling allowance");
  o.expect(t < 30.0, "took " + std::to_string(t) + " s");
  if (o.passed && !rows.empty()) {
    o.detail << "max bits " << rows.front().max_bits << " at n=" << rows.front().n << " to "
             << rows.back().max_bits << " at n=" << rows.back().n;
  }
  return o;
}

Outcome packing_bound() {
  Outcome o;
  o.expect(heawood_bound(0) == 5, "heawood_bound(0) is not 5");
  for (std::uint64_t g = 0; g <= 100; ++g) {
    const double k = (5.0 + std::sqrt(1.0 + 24.0 * static_cast<double>(g))) / 2.0;
    const auto expected = std::max<std::uint64_t>(5, static_cast<std::uint64_t>(std::ceil(k - 1e-9)));
    o.expect(heawood_bound(g) == expected, "heawood_bound(" + std::to_string(g) + ")");
  }
  std::size_t checked = 0;
  for (const Fixture& f : fixtures()) {
    if (f.tree_mode) continue;
    const auto bound = heawood_bound(static_cast<std::uint64_t>(f.phi_genus));
    CertificateAssignment p = pack(f.graph, prove(f.graph, f.scheme, f.phi_genus));
    for (const auto& [v, store] : *p.packing) {
      o.expect(store.size() <= bound, f.name + " stores " + std::to_string(store.size()));
    }
    ++checked;
  }
  if (o.passed) o.detail << checked << " fixtures within the bound";
  return o;
}

Outcome id_equivariance(std::uint64_t seed) {
  Outcome o;
  std::size_t checked = 0;
  for (const Fixture& f : fixtures()) {
    VerifierParams p;
    CertificateAssignment a;
    if (f.tree_mode) {
      p = {0, true, false};
      a = prove_tree(f.graph);
    } else {
      p = {f.phi_genus, f.scheme.orientable_mode, false};
      a = prove(f.graph, f.scheme, f.phi_genus);
    }
    const RunReport before = run_verification(f.graph, a, p);
    for (std::uint64_t r = 0; r < 10; ++r) {
      const std::uint64_t s = seed * 1000003 + r;
      auto map = relabeling(f.graph, s);
      auto [g2, a2] = relabel_ids(f.graph, a, s);
      const RunReport after = run_verification(g2, a2, p);
      for (const auto& [v, verdict] : before.verdicts) {
        const Verdict& w = after.verdicts.at(map.at(v));
        o.expect(verdict.accepted == w.accepted && verdict.rule == w.rule,
                 f.name + " verdict changed at " + std::to_string(v.value));
      }
      const RunReport alone = run_verification(g2, a, p);
      o.expect(!alone.all_accepted, f.name + " accepted after relabeling the graph alone");
    }
    ++checked;
  }
  if (o.passed) o.detail << checked << " fixtures x 10 relabelings";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::uint64_t seed = 0;
  std::string artifacts = "artifacts";
  app.add_option("--seed", seed);
  app.add_option("--artifacts", artifacts);
  CLI11_PARSE(app, argc, argv);

  const RandomSchemeStats stats = random_schemes(seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle exactness", [] { return oracle_exactness(); }},
      {"Euler-formula invariant", [&] { return euler_invariant(stats); }},
      {"phi/doubled agreement on all-positive schemes", [&] { return phi_agreement(stats); }},
      {"pinned discrepancy on the negative-edge triangle", [] { return pinned_discrepancy(); }},
      {"completeness", [&] { return completeness(seed); }},
      {"soundness battery", [&] { return soundness(seed, artifacts); }},
      {"certificate-size growth", [] { return size_growth(); }},
      {"degeneracy packing bound", [] { return packing_bound(); }},
      {"id-equivariance", [&] { return id_equivariance(seed); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ' ' << (o.passed ? "PASS" : "FAIL") << ' '
              << criteria[i].first << ": " << o.detail.str() << std::endl;
    failed += o.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
