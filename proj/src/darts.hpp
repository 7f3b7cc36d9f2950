#pragma once

// Dense half-edge ("dart") tables shared by the face tracers and the oracle.
// Dart d = (tail, position of head in the ascending adjacency of tail), so the
// dart order coincides with the lexicographic order of (at, toward) ids.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "surfcert/embedding.hpp"
#include "surfcert/graph.hpp"

namespace surfcert::detail {

struct DartTable {
  std::vector<std::size_t> offset;  // per vertex index, size n + 1
  std::vector<std::size_t> tail;
  std::vector<std::size_t> head;
  std::vector<std::size_t> twin;
  std::vector<std::size_t> edge;  // index into g.edges()

  explicit DartTable(const Graph& g) {
    const std::size_t n = g.order();
    offset.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + g.neighbors_at(i).size();
    const std::size_t darts = offset[n];
    tail.resize(darts);
    head.resize(darts);
    twin.resize(darts);
    edge.resize(darts);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& nbrs = g.neighbors_at(i);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        std::size_t d = offset[i] + k;
        tail[d] = i;
        head[d] = g.index_of(nbrs[k]);
      }
    }
    const auto& edges = g.edges();
    for (std::size_t d = 0; d < darts; ++d) {
      twin[d] = find(g, head[d], tail[d]);
      VertexId a = g.vertices()[tail[d]];
      VertexId b = g.vertices()[head[d]];
      edge[d] = static_cast<std::size_t>(
          std::lower_bound(edges.begin(), edges.end(), Edge::of(a, b)) - edges.begin());
    }
  }

  std::size_t size() const { return tail.size(); }
  std::size_t degree(std::size_t v) const { return offset[v + 1] - offset[v]; }

  std::size_t find(const Graph& g, std::size_t from, std::size_t to) const {
    const auto& nbrs = g.neighbors_at(from);
    VertexId target = g.vertices()[to];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), target);
    return offset[from] + static_cast<std::size_t>(it - nbrs.begin());
  }

  HalfEdge half_edge(const Graph& g, std::size_t d) const {
    return {g.vertices()[tail[d]], g.vertices()[head[d]]};
  }
};

/// Rotation successor/predecessor of each dart around its tail, plus edge signs.
struct DartRotation {
  std::vector<std::size_t> next;
  std::vector<std::size_t> prev;
  std::vector<std::int8_t> sign;  // per dart, sign of its edge

  DartRotation(const Graph& g, const DartTable& t, const EmbeddingScheme& s)
      : next(t.size()), prev(t.size()), sign(t.size(), 1) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto& rot = s.rotation.at(g.vertices()[i]);
      set_vertex(g, t, i, rot);
    }
    for (std::size_t d = 0; d < t.size(); ++d) {
      sign[d] = static_cast<std::int8_t>(s.sign(g.vertices()[t.tail[d]], g.vertices()[t.head[d]]));
    }
  }

  template <typename Seq>
  void set_vertex(const Graph& g, const DartTable& t, std::size_t v, const Seq& rot) {
    const std::size_t deg = rot.size();
    for (std::size_t k = 0; k < deg; ++k) {
      std::size_t a = t.find(g, v, g.index_of(rot[k]));
      std::size_t b = t.find(g, v, g.index_of(rot[(k + 1) % deg]));
      next[a] = b;
      prev[b] = a;
    }
  }

  std::size_t phi(const DartTable& t, std::size_t d) const {
    std::size_t back = t.twin[d];
    return sign[d] > 0 ? next[back] : prev[back];
  }
};

/// Number of orbits of the direction-carrying walk on (dart, direction) states.
/// `stamp` is scratch space of size 2 * darts, reused across calls by the oracle.
inline std::size_t count_doubled_orbits(const DartTable& t, const DartRotation& r,
                                        std::vector<std::uint32_t>& stamp, std::uint32_t& epoch,
                                        std::vector<std::size_t>* lengths = nullptr) {
  const std::size_t states = 2 * t.size();
  if (stamp.size() != states) {
    stamp.assign(states, 0);
    epoch = 0;
  }
  ++epoch;
  if (epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < states; ++start) {
    if (stamp[start] == epoch) continue;
    ++orbits;
    std::size_t len = 0;
    std::size_t state = start;
    while (stamp[state] != epoch) {
      stamp[state] = epoch;
      ++len;
      std::size_t d = state >> 1;
      int dir = (state & 1) ? -1 : 1;
      int nd = dir * r.sign[d];
      std::size_t back = t.twin[d];
      std::size_t nxt = nd > 0 ? r.next[back] : r.prev[back];
      state = (nxt << 1) | (nd < 0 ? 1u : 0u);
    }
    if (lengths) lengths->push_back(len);
  }
  return orbits;
}

}  // namespace surfcert::detail
