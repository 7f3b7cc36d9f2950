#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"

using namespace surfcert;
using testutil::V;

TEST_CASE("graph construction validates the model") {
  CHECK_NOTHROW(testutil::graph({1, 2, 3}, {{1, 2}, {2, 3}}));

  auto kind_of = [](auto&& build) {
    try {
      build();
    } catch (const GraphError& e) {
      return e.kind();
    }
    FAIL("expected a GraphError");
    return GraphErrorKind::malformed_line;
  };
  CHECK(kind_of([] { testutil::graph({1, 2}, {{1, 1}}); }) == GraphErrorKind::loop);
  CHECK(kind_of([] { testutil::graph({1, 2}, {{1, 2}, {2, 1}}); }) == GraphErrorKind::duplicate_edge);
  CHECK(kind_of([] { testutil::graph({1, 2, 3}, {{1, 2}}); }) == GraphErrorKind::disconnected);
  CHECK(kind_of([] { testutil::graph({1, 1}, {}); }) == GraphErrorKind::duplicate_id);
  CHECK(kind_of([] { testutil::graph({1, 2}, {{1, 5}}); }) == GraphErrorKind::unknown_vertex);
}

TEST_CASE("ids are arbitrary positive integers") {
  Graph g = testutil::graph({1000, 7, 42}, {{7, 1000}, {1000, 42}});
  CHECK(g.vertices() == testutil::ids({7, 42, 1000}));
  CHECK(g.neighbors(V(1000)) == testutil::ids({7, 42}));
  CHECK(g.max_id() == V(1000));
  CHECK(g.is_tree());
}

TEST_CASE("graph text format round-trips and reports bad input") {
  Graph g = complete_bipartite_graph(2, 3);
  CHECK(parse_graph(format_graph(g)) == g);

  CHECK_THROWS_AS(parse_graph("graph 2 1\nv 1\nv 2\ne 1 2\ne 1 2\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("graph 3 1\nv 1\nv 2\ne 1 2\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("grph 2 1\n"), GraphError);
  CHECK_NOTHROW(parse_graph("# comment\ngraph 2 1\nv 1\nv 2\ne 1 2\n"));
}

TEST_CASE("degeneracy order") {
  CHECK(degeneracy_order(cycle_graph(8)).k == 2);
  CHECK(degeneracy_order(complete_graph(5)).k == 4);
  CHECK(degeneracy_order(star_graph(6)).k == 1);

  // Every vertex has at most k earlier neighbours.
  for (const Fixture& f : fixtures()) {
    auto d = degeneracy_order(f.graph);
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < d.order.size(); ++i) pos[d.order[i]] = i;
    for (VertexId v : f.graph.vertices()) {
      std::size_t earlier = 0;
      for (VertexId w : f.graph.neighbors(v)) earlier += pos[w] < pos[v] ? 1 : 0;
      CHECK(earlier <= d.k);
    }
  }
}

TEST_CASE("heawood bound") {
  CHECK(heawood_bound(0) == 5);
  CHECK(heawood_bound(1) == 5);
  CHECK(heawood_bound(2) == 6);
  // (5 + sqrt(73)) / 2 = 6.77, so the first integer at or above it.
  CHECK(heawood_bound(3) == 7);
  CHECK(heawood_bound(5) == 8);
  std::uint64_t previous = 0;
  for (std::uint64_t g = 0; g < 200; ++g) {
    auto k = heawood_bound(g);
    CHECK(k >= previous);
    CHECK((k - 2) * (k - 3) >= 6 * g);
    if (k > 5) CHECK((k - 3) * (k - 4) < 6 * g);
    previous = k;
  }
}

TEST_CASE("bfs trees and rerooting") {
  Graph p3 = path_graph(3);
  RootedTree t = bfs_tree(p3, V(1));
  CHECK(t.parent_of(V(2)) == V(1));
  CHECK(t.parent_of(V(3)) == V(2));
  CHECK(t.depth.at(V(3)) == 2);

  RootedTree r = reroot(t, p3, V(3));
  CHECK(r.parent_of(V(2)) == V(3));
  CHECK(r.parent_of(V(1)) == V(2));
  CHECK(reroot(t, p3, V(1)) == t);

  Graph k5 = complete_graph(5);
  RootedTree s = bfs_tree(k5, V(1));
  for (std::uint64_t v = 2; v <= 5; ++v) CHECK(s.depth.at(V(v)) == 1);

  CHECK(bfs_tree(cycle_graph(4), V(1)).depth.at(V(3)) == 2);

  Graph star = star_graph(4);
  RootedTree at_leaf = reroot(bfs_tree(star, V(1)), star, V(3));
  CHECK(at_leaf.parent_of(V(1)) == V(3));

  for (const Fixture& f : fixtures()) {
    for (VertexId root : f.graph.vertices()) {
      RootedTree tree = bfs_tree(f.graph, root);
      CHECK_NOTHROW(check_rooted_tree(f.graph, tree));
      CHECK(tree.parent.size() == f.graph.order() - 1);
      RootedTree moved = reroot(tree, f.graph, f.graph.vertices().back());
      for (const auto& [v, p] : tree.parent) CHECK(moved.contains_edge(Edge::of(v, p)));
    }
  }
}
