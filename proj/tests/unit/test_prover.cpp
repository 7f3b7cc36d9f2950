#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/harness.hpp"
#include "surfcert/prover.hpp"

using namespace surfcert;
using testutil::V;

namespace {

ProverErrorKind prover_error(auto&& run) {
  try {
    run();
  } catch (const ProverError& e) {
    return e.kind();
  }
  FAIL("expected a ProverError");
  return ProverErrorKind::self_check_failed;
}

}  // namespace

TEST_CASE("rotation indices start at the least neighbour") {
  Graph k4 = complete_graph(4);
  EmbeddingScheme s = ascending_scheme(k4);
  s.rotation[V(1)] = {V(3), V(2), V(4)};
  auto certs = assign_rotation_indices(k4, s);
  CHECK(certs.at(Edge::of(V(1), V(2))).iu == 0);
  CHECK(certs.at(Edge::of(V(1), V(4))).iu == 1);
  CHECK(certs.at(Edge::of(V(1), V(3))).iu == 2);
  CHECK(certs.at(Edge::of(V(1), V(2))).u == V(1));
  CHECK(certs.at(Edge::of(V(1), V(2))).iv == 0);
}

TEST_CASE("subtree counters on a path") {
  CertificateAssignment a = prove_tree(path_graph(3));
  CHECK(a.mode == CertMode::tree);
  CHECK(a.vertex_certs.at(V(1)).nu == 3);
  CHECK(a.vertex_certs.at(V(2)).nu == 2);
  CHECK(a.vertex_certs.at(V(3)).nu == 1);
  CHECK(a.vertex_certs.at(V(1)).mu2 == 4);
  CHECK(a.vertex_certs.at(V(2)).mu2 == 3);
  CHECK(a.vertex_certs.at(V(3)).mu2 == 1);
  for (const auto& [v, c] : a.vertex_certs) {
    CHECK(c.total_n == 3);
    CHECK(c.total_2m == 4);
    CHECK(c.root == V(1));
  }
}

TEST_CASE("eta is the parity of negative tree edges to the root") {
  Graph p3 = path_graph(3);
  EmbeddingScheme s = ascending_scheme(p3);
  s.orientable_mode = false;
  s.negative_edges.insert(Edge::of(V(1), V(2)));
  FaceStructure fs = trace_faces_phi(p3, s);
  auto certs = build_tree_counters(p3, bfs_tree(p3, V(1)), &fs, &s);
  CHECK(*certs.at(V(1)).eta == 0);
  CHECK(*certs.at(V(2)).eta == 1);
  CHECK(*certs.at(V(3)).eta == 1);
}

TEST_CASE("face-root counters sum to F") {
  for (const Fixture& f : fixtures()) {
    if (f.tree_mode) continue;
    CAPTURE(f.name);
    CertificateAssignment a = prove(f.graph, f.scheme, f.phi_genus);
    const auto& root = a.vertex_certs.begin()->second.root;
    CHECK(*a.vertex_certs.at(root).phi == f.phi_faces);
    CHECK(*a.vertex_certs.at(root).total_F == f.phi_faces);
    if (!f.scheme.orientable_mode) CHECK(a.vertex_certs.at(root).er.has_value());
  }
}

TEST_CASE("the prover refuses what it cannot certify") {
  const Fixture& k5 = fixture("K5-torus");
  CHECK(prover_error([&] { prove(k5.graph, k5.scheme, 0); }) ==
        ProverErrorKind::genus_exceeds_target);
  CHECK_NOTHROW(prove(k5.graph, k5.scheme, 2));

  CHECK(prover_error([] { prove_tree(cycle_graph(4)); }) == ProverErrorKind::not_a_tree);

  Graph c4 = cycle_graph(4);
  EmbeddingScheme s = ascending_scheme(c4);
  s.orientable_mode = false;
  CHECK(prover_error([&] { prove(c4, s, 1); }) ==
        ProverErrorKind::orientable_scheme_in_nonorientable_mode);

  Graph single = testutil::graph({5}, {});
  CHECK(prover_error([&] { prove(single, ascending_scheme(single), 0); }) ==
        ProverErrorKind::no_edges);
  CHECK_NOTHROW(prove_tree(single));

  // The projective K5 is certified only at its phi genus.
  const Fixture& proj = fixture("K5-projective");
  CHECK(prover_error([&] { prove(proj.graph, proj.scheme, 1); }) ==
        ProverErrorKind::genus_exceeds_target);
}

TEST_CASE("degeneracy packing") {
  auto max_store = [](const CertificateAssignment& a) {
    std::size_t best = 0;
    for (const auto& [v, store] : *a.packing) best = std::max(best, store.size());
    return best;
  };
  auto total = [](const CertificateAssignment& a) {
    std::size_t sum = 0;
    for (const auto& [v, store] : *a.packing) sum += store.size();
    return sum;
  };

  const Fixture& c8 = fixture("C8");
  CertificateAssignment pc = pack(c8.graph, prove(c8.graph, c8.scheme, 0));
  CHECK(max_store(pc) <= 2);
  CHECK(total(pc) == 8);
  CHECK(pc.edge_certs.empty());
  CHECK(pc.packing->size() == 8);

  const Fixture& k5 = fixture("K5-torus");
  CertificateAssignment pk = pack(k5.graph, prove(k5.graph, k5.scheme, 2));
  CHECK(max_store(pk) == 4);
  CHECK(total(pk) == 10);

  for (const Fixture& f : fixtures()) {
    if (f.tree_mode) continue;
    CertificateAssignment a = prove(f.graph, f.scheme, f.phi_genus);
    CertificateAssignment p = pack(f.graph, a);
    CHECK(max_store(p) <= heawood_bound(static_cast<std::uint64_t>(f.phi_genus)));
    CHECK(unpack(p) == a);
    CHECK(pack(f.graph, p) == p);
  }
}
