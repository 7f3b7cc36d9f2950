#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/harness.hpp"
#include "surfcert/oracle.hpp"
#include "surfcert/prover.hpp"

using namespace surfcert;
using testutil::V;

TEST_CASE("relabelings are seeded injections into [1, n^3]") {
  Graph k5 = complete_graph(5);
  auto m1 = relabeling(k5, 7);
  CHECK(m1 == relabeling(k5, 7));
  CHECK(m1 != relabeling(k5, 8));
  std::set<VertexId> image;
  for (const auto& [from, to] : m1) {
    image.insert(to);
    CHECK(to.value >= 1);
    CHECK(to.value <= 125);
  }
  CHECK(image.size() == 5);
}

TEST_CASE("the identity relabeling changes nothing") {
  const Fixture& f = fixture("K5-torus");
  CertificateAssignment a = prove(f.graph, f.scheme, 2);
  std::map<VertexId, VertexId> id;
  for (VertexId v : f.graph.vertices()) id[v] = v;
  CHECK(relabel_graph(f.graph, id) == f.graph);
  CHECK(relabel_assignment(a, id) == a);
}

TEST_CASE("relabeling graph and certificates together keeps verdicts") {
  for (const Fixture& f : fixtures()) {
    if (f.tree_mode) continue;
    CAPTURE(f.name);
    const VerifierParams p{f.phi_genus, f.scheme.orientable_mode, false};
    CertificateAssignment a = prove(f.graph, f.scheme, f.phi_genus);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto [g2, a2] = relabel_ids(f.graph, a, seed);
      CHECK(run_verification(g2, a2, p).all_accepted);
      Graph alone = relabel_graph(f.graph, relabeling(f.graph, seed));
      CHECK_FALSE(run_verification(alone, a, p).all_accepted);
    }
  }
}

TEST_CASE("size metering grows logarithmically on cycles") {
  auto rows = meter_cycle_family(256);
  REQUIRE(rows.size() == 6);
  CHECK(rows.front().n == 8);
  CHECK(rows.back().n == 256);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].max_bits > rows[i - 1].max_bits);
  CHECK(log_growth_ok(rows));

  std::vector<MeterRow> linear;
  for (std::size_t n = 8; n <= 256; n *= 2) linear.push_back({n, n, 4});
  CHECK_FALSE(log_growth_ok(linear));
}

TEST_CASE("fuzzing checks its precondition") {
  CHECK_THROWS_AS(fuzz_soundness(complete_graph(4), {0, true, false},
                                 default_battery(true, 1), 10),
                  PreconditionError);
}

TEST_CASE("fuzzing is deterministic and rejects everything on K3,3 in the plane") {
  Graph k33 = complete_bipartite_graph(3, 3);
  const VerifierParams p{0, true, false};
  auto battery = default_battery(true, 3, 50);
  FuzzReport r1 = fuzz_soundness(k33, p, battery, 200);
  FuzzReport r2 = fuzz_soundness(k33, p, battery, 200);
  CHECK(r1.passed());
  CHECK(r1.violations == 0);
  CHECK(r1.rule_tally == r2.rule_tally);
  std::size_t trials = 0;
  for (const auto& s : r1.strategies) trials += s.trials;
  CHECK(trials > 250);
  CHECK(format_fuzz_report(r1, k33, p).find("RESULT pass") != std::string::npos);
}

TEST_CASE("strategy names round-trip") {
  for (auto kind : {StrategyKind::random_bits, StrategyKind::honest_mutate,
                    StrategyKind::wrong_instance_graft, StrategyKind::stale_honest,
                    StrategyKind::fake_F, StrategyKind::fake_n, StrategyKind::fake_root,
                    StrategyKind::sign_strip, StrategyKind::eta_forgery, StrategyKind::fake_er,
                    StrategyKind::phi_collision}) {
    CHECK(parse_strategy(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_strategy("teleport"), std::invalid_argument);
  CHECK(default_battery(true, 0).size() < default_battery(false, 0).size());
}
