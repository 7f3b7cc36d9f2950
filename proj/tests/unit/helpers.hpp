#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "surfcert/embedding.hpp"
#include "surfcert/graph.hpp"

namespace testutil {

inline surfcert::VertexId V(std::uint64_t v) { return surfcert::VertexId(v); }

inline surfcert::Graph graph(std::initializer_list<std::uint64_t> vertices,
                             std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> edges) {
  std::vector<surfcert::VertexId> vs;
  for (auto v : vertices) vs.push_back(V(v));
  std::vector<surfcert::Edge> es;
  for (auto [a, b] : edges) es.push_back(surfcert::Edge::of(V(a), V(b)));
  return surfcert::Graph::from_edges(vs, es);
}

inline std::vector<surfcert::VertexId> ids(std::initializer_list<std::uint64_t> list) {
  std::vector<surfcert::VertexId> out;
  for (auto v : list) out.push_back(V(v));
  return out;
}

}  // namespace testutil
