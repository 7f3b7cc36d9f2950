#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"

using namespace surfcert;
using testutil::V;

TEST_CASE("phi successor follows or precedes by sign") {
  Graph k4 = complete_graph(4);
  EmbeddingScheme s = ascending_scheme(k4);
  CHECK(phi_successor(s, {V(1), V(2)}) == HalfEdge{V(2), V(3)});
  CHECK(phi_successor(s, {V(4), V(2)}) == HalfEdge{V(2), V(1)});

  s.orientable_mode = false;
  s.negative_edges.insert(Edge::of(V(1), V(2)));
  CHECK(phi_successor(s, {V(1), V(2)}) == HalfEdge{V(2), V(4)});
  CHECK(phi_successor(s, {V(2), V(1)}) == HalfEdge{V(1), V(4)});
}

TEST_CASE("faces of the planar square") {
  Graph c4 = cycle_graph(4);
  FaceStructure fs = trace_faces_phi(c4, ascending_scheme(c4));
  CHECK(fs.face_count == 2);
  CHECK(fs.phi_bijective);
  CHECK(fs.is_root({V(1), V(2)}));
  CHECK(fs.f_index.at({V(1), V(2)}) == 0);
  CHECK(fs.f_index.at({V(3), V(4)}) == 2);
  CHECK(fs.is_root({V(1), V(4)}));
  CHECK(fs.f_index.at({V(3), V(2)}) == 2);
  CHECK(euler_genus(c4, fs.face_count) == 0);
}

TEST_CASE("negative-edge triangle: phi and doubled counts differ") {
  Graph c3 = cycle_graph(3);
  EmbeddingScheme s = ascending_scheme(c3);
  s.orientable_mode = false;
  s.negative_edges.insert(Edge::of(V(1), V(3)));
  CHECK(trace_faces_phi(c3, s).face_count == 2);
  CHECK(trace_faces_doubled(c3, s).face_count == 1);
  CHECK_FALSE(is_orientable_scheme(c3, s));

  auto d = diagnose(c3, s);
  CHECK(d.euler_genus_phi == 0);
  CHECK(d.euler_genus_doubled == 1);
}

TEST_CASE("fixtures carry the expected face counts") {
  struct Row {
    const char* name;
    std::size_t phi, doubled;
    std::int64_t eg, phi_eg;
  };
  const Row rows[] = {
      {"C4", 2, 2, 0, 0},           {"C6", 2, 2, 0, 0},           {"K4-planar", 4, 4, 0, 0},
      {"K5-torus", 5, 5, 2, 2},     {"K3,3-torus", 3, 3, 2, 2},   {"K7-torus", 14, 14, 2, 2},
      {"K5-projective", 3, 6, 1, 4}, {"K6-projective", 6, 10, 1, 5}, {"C3-twisted", 2, 1, 1, 0},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    const Fixture& f = fixture(r.name);
    CHECK(f.phi_faces == r.phi);
    CHECK(f.doubled_faces == r.doubled);
    CHECK(f.euler_genus == r.eg);
    CHECK(f.phi_genus == r.phi_eg);
  }
  CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
}

TEST_CASE("switching preserves the doubled face count") {
  for (const Fixture& f : fixtures()) {
    if (f.tree_mode) continue;
    EmbeddingScheme s = f.scheme;
    s.orientable_mode = false;
    const auto before = trace_faces_doubled(f.graph, s).face_count;
    for (VertexId v : f.graph.vertices()) {
      CHECK(trace_faces_doubled(f.graph, switch_at(f.graph, s, v)).face_count == before);
    }
  }
}

TEST_CASE("scheme validation") {
  Graph c4 = cycle_graph(4);
  EmbeddingScheme s = ascending_scheme(c4);
  CHECK_NOTHROW(validate_scheme(c4, s));

  EmbeddingScheme bad = s;
  bad.rotation[V(1)] = {V(2), V(3)};
  CHECK_THROWS_AS(validate_scheme(c4, bad), SchemeError);

  bad = s;
  bad.negative_edges.insert(Edge::of(V(1), V(2)));
  CHECK_THROWS_AS(validate_scheme(c4, bad), SchemeError);

  bad.orientable_mode = false;
  CHECK_NOTHROW(validate_scheme(c4, bad));
  bad.negative_edges.insert(Edge::of(V(1), V(3)));
  CHECK_THROWS_AS(validate_scheme(c4, bad), SchemeError);
}

TEST_CASE("embedding text format round-trips") {
  for (const Fixture& f : fixtures()) {
    CHECK(parse_embedding(format_embedding(f.scheme)) == f.scheme);
  }
  CHECK_THROWS_AS(parse_embedding("embedding sideways\n"), FormatError);
}

TEST_CASE("odd-negative cycles exist exactly for non-orientable schemes") {
  const Fixture& c3 = fixture("C3-twisted");
  auto cyc = find_odd_negative_cycle(c3.graph, c3.scheme);
  REQUIRE(cyc);
  CHECK(c3.scheme.sign(cyc->root, cyc->partner) == -1);
  CHECK_FALSE(cyc->tree.contains_edge(cyc->special_edge));
  CHECK(cyc->cycle_path.front() == cyc->root);
  CHECK(cyc->cycle_path.back() == cyc->partner);

  const Fixture& k4 = fixture("K4-planar");
  CHECK_FALSE(find_odd_negative_cycle(k4.graph, k4.scheme));

  // Negating every edge of an even cycle stays orientable.
  Graph c4 = cycle_graph(4);
  EmbeddingScheme s = ascending_scheme(c4);
  s.orientable_mode = false;
  for (const Edge& e : c4.edges()) s.negative_edges.insert(e);
  CHECK(is_orientable_scheme(c4, s));
  CHECK_FALSE(find_odd_negative_cycle(c4, s));
}
