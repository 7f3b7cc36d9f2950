#include "surfcert/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "surfcert/errors.hpp"
#include "surfcert/oracle.hpp"

namespace surfcert {

namespace {

VertexId id(std::uint64_t v) { return VertexId(v); }

std::vector<VertexId> ids(std::size_t n) {
  std::vector<VertexId> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(id(i));
  return out;
}

Fixture make_fixture(std::string name, Graph g, EmbeddingScheme s, bool tree_mode = false) {
  validate_scheme(g, s);
  Fixture f{std::move(name), std::move(g), std::move(s)};
  f.phi_faces = trace_faces_phi(f.graph, f.scheme).face_count;
  f.doubled_faces = trace_faces_doubled(f.graph, f.scheme).face_count;
  f.euler_genus = euler_genus(f.graph, f.doubled_faces);
  f.phi_genus = euler_genus_unchecked(f.graph, f.phi_faces);
  f.tree_mode = tree_mode;
  return f;
}

EmbeddingScheme planar_k4() {
  Graph g = complete_graph(4);
  // Anchor the least neighbour; each vertex has two cyclic orders.
  for (unsigned mask = 0; mask < 16; ++mask) {
    EmbeddingScheme s = ascending_scheme(g);
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1u << i)) {
        auto& rot = s.rotation[id(i + 1)];
        std::swap(rot[1], rot[2]);
      }
    }
    if (trace_faces_phi(g, s).face_count == 4) return s;
  }
  throw InconsistencyError("no planar rotation system for K4");
}

EmbeddingScheme projective_k5() {
  Graph g = complete_graph(5);
  EmbeddingScheme s = min_genus_nonorientable(g).witness;
  auto friendly = best_phi_switching(g, s);
  if (!friendly) throw InconsistencyError("no certifiable switching of the K5 projective witness");
  return *friendly;
}

EmbeddingScheme projective_k6() {
  // Hemi-icosahedron: ten triangles, each edge of K6 on exactly two of them.
  const std::vector<std::vector<std::uint64_t>> raw = {
      {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
      {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4},
  };
  std::vector<std::vector<VertexId>> faces;
  for (const auto& f : raw) {
    std::vector<VertexId> walk;
    for (auto v : f) walk.push_back(id(v));
    faces.push_back(std::move(walk));
  }
  Graph g = complete_graph(6);
  auto friendly = best_phi_switching(g, scheme_from_faces(g, faces));
  if (!friendly) throw InconsistencyError("no certifiable switching of the K6 projective scheme");
  return *friendly;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  for (std::size_t n : {4, 6, 8}) {
    Graph g = cycle_graph(n);
    EmbeddingScheme s = ascending_scheme(g);
    out.push_back(make_fixture("C" + std::to_string(n), std::move(g), std::move(s)));
  }
  out.push_back(make_fixture("K4-planar", complete_graph(4), planar_k4()));
  {
    Graph g = complete_graph(5);
    EmbeddingScheme s = min_genus_orientable(g).witness;
    out.push_back(make_fixture("K5-torus", std::move(g), std::move(s)));
  }
  {
    Graph g = complete_bipartite_graph(3, 3);
    EmbeddingScheme s = min_genus_orientable(g).witness;
    out.push_back(make_fixture("K3,3-torus", std::move(g), std::move(s)));
  }
  out.push_back(make_fixture("K7-torus", complete_graph(7), k7_torus_scheme()));
  out.push_back(make_fixture("K5-projective", complete_graph(5), projective_k5()));
  out.push_back(make_fixture("K6-projective", complete_graph(6), projective_k6()));
  {
    Graph g = cycle_graph(3);
    EmbeddingScheme s = ascending_scheme(g);
    s.orientable_mode = false;
    s.negative_edges.insert(Edge::of(id(1), id(3)));
    out.push_back(make_fixture("C3-twisted", std::move(g), std::move(s)));
  }
  for (auto [name, g] : {std::pair{"P3-tree", path_graph(3)}, std::pair{"P4-tree", path_graph(4)},
                         std::pair{"K1,4-tree", star_graph(4)},
                         std::pair{"K1,5-tree", star_graph(5)}}) {
    EmbeddingScheme s = ascending_scheme(g);
    out.push_back(make_fixture(name, g, std::move(s), true));
  }
  return out;
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back(Edge::of(id(i), id(i + 1)));
  return Graph::from_edges(ids(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.push_back(Edge::of(id(i), id(i % n + 1)));
  return Graph::from_edges(ids(n), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) edges.push_back(Edge::of(id(a), id(b)));
  }
  return Graph::from_edges(ids(n), edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = a + 1; j <= a + b; ++j) edges.push_back(Edge::of(id(i), id(j)));
  }
  return Graph::from_edges(ids(a + b), edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 2; i <= leaves + 1; ++i) edges.push_back(Edge::of(id(1), id(i)));
  return Graph::from_edges(ids(leaves + 1), edges);
}

EmbeddingScheme k7_torus_scheme() {
  Graph g = complete_graph(7);
  std::vector<std::uint64_t> offsets = {1, 2, 3, 4, 5, 6};
  do {
    EmbeddingScheme s;
    for (std::uint64_t i = 0; i < 7; ++i) {
      auto& rot = s.rotation[id(i + 1)];
      for (auto off : offsets) rot.push_back(id((i + off) % 7 + 1));
    }
    if (trace_faces_doubled(g, s).face_count == 14) return s;
  } while (std::next_permutation(offsets.begin(), offsets.end()));
  throw InconsistencyError("no cyclic K7 rotation pattern with 14 faces");
}

EmbeddingScheme scheme_from_faces(const Graph& g, const std::vector<std::vector<VertexId>>& faces) {
  // Vertex links: at v, each corner (a, v, b) joins a and b.
  std::map<VertexId, std::map<VertexId, std::vector<VertexId>>> link;
  std::map<Edge, int> uses;
  for (const auto& f : faces) {
    const std::size_t len = f.size();
    for (std::size_t i = 0; i < len; ++i) {
      VertexId a = f[(i + len - 1) % len], v = f[i], b = f[(i + 1) % len];
      if (!g.adjacent(v, b)) throw std::invalid_argument("face walk uses a non-edge");
      link[v][a].push_back(b);
      link[v][b].push_back(a);
      ++uses[Edge::of(v, b)];
    }
  }
  for (const Edge& e : g.edges()) {
    if (uses[e] != 2) throw std::invalid_argument("every edge must lie on exactly two face sides");
  }

  EmbeddingScheme s;
  s.orientable_mode = false;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) < 3) throw std::invalid_argument("scheme_from_faces needs minimum degree 3");
    const auto& lv = link.at(v);
    VertexId first = lv.begin()->first;
    std::vector<VertexId> rot{first};
    VertexId prev = first;
    VertexId cur = *std::min_element(lv.at(first).begin(), lv.at(first).end());
    while (cur != first) {
      rot.push_back(cur);
      const auto& next = lv.at(cur);
      VertexId step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
      if (rot.size() > g.degree(v)) throw std::invalid_argument("vertex link is not a cycle");
    }
    if (rot.size() != g.degree(v)) throw std::invalid_argument("vertex link is not a single cycle");
    s.rotation[v] = std::move(rot);
  }

  // +1 when the walk turns from `a` to `b` in the rotation direction at v.
  auto turn = [&](VertexId a, VertexId v, VertexId b) {
    const auto& rot = s.rotation.at(v);
    const std::size_t d = rot.size();
    std::size_t k = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), a) - rot.begin());
    if (rot[(k + 1) % d] == b) return 1;
    if (rot[(k + d - 1) % d] == b) return -1;
    throw std::invalid_argument("face corner is not consecutive in the rotation");
  };
  std::map<Edge, int> sign;
  for (const auto& f : faces) {
    const std::size_t len = f.size();
    for (std::size_t i = 0; i < len; ++i) {
      VertexId t = f[(i + len - 1) % len], u = f[i], v = f[(i + 1) % len], w = f[(i + 2) % len];
      int lambda = turn(t, u, v) * turn(u, v, w);
      auto [it, fresh] = sign.emplace(Edge::of(u, v), lambda);
      if (!fresh && it->second != lambda) {
        throw std::invalid_argument("face list gives an edge two different signs");
      }
    }
  }
  for (const auto& [e, lambda] : sign) {
    if (lambda < 0) s.negative_edges.insert(e);
  }
  return s;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> catalogue = build_fixtures();
  return catalogue;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("no fixture named " + std::string(name));
}

}  // namespace surfcert
