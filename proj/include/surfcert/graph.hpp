#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace surfcert {

/// Identifier of a vertex, as seen by the vertex itself and its neighbours.
/// Arbitrary positive integers; nothing assumes ids are 1..n.
struct VertexId {
  std::uint64_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint64_t v) : value(v) {}

  constexpr auto operator<=>(const VertexId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

/// Unordered edge, stored with `lo < hi`.
struct Edge {
  VertexId lo;
  VertexId hi;

  static constexpr Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool has(VertexId v) const { return lo == v || hi == v; }
  constexpr VertexId other(VertexId v) const { return v == lo ? hi : lo; }

  constexpr auto operator<=>(const Edge&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.lo << '-' << e.hi;
}

}  // namespace surfcert

template <>
struct std::hash<surfcert::VertexId> {
  std::size_t operator()(surfcert::VertexId v) const noexcept {
    return std::hash<std::uint64_t>{}(v.value);
  }
};

namespace surfcert {

/// Simple, connected, undirected graph. Immutable once built; every
/// construction path goes through `from_edges`, which enforces the model.
class Graph {
 public:
  /// Throws GraphError (duplicate_id, loop, duplicate_edge, unknown_vertex,
  /// disconnected) when the input violates the model.
  static Graph from_edges(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Ascending.
  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  /// Ascending by (lo, hi).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Ascending. Throws std::out_of_range for an unknown vertex.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[index_of(v)]; }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::size_t max_degree() const noexcept;
  VertexId max_id() const noexcept { return ids_.back(); }

  bool contains(VertexId v) const { return index_.count(v) != 0; }
  bool adjacent(VertexId a, VertexId b) const;
  bool is_tree() const noexcept { return edges_.size() + 1 == ids_.size(); }

  /// Dense position of `v` in `vertices()`.
  std::size_t index_of(VertexId v) const;
  const std::vector<VertexId>& neighbors_at(std::size_t index) const { return adj_[index]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

/// Reads the line-based graph format (`graph n m`, `v id`, `e a b`, `#` comments).
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

struct DegeneracyOrder {
  std::vector<VertexId> order;
  std::size_t k = 0;
};

/// Iterated minimum-degree removal. `order` is the reverse removal sequence,
/// so every vertex has at most `k` neighbours before it. Ties are broken by
/// original degree, then by id.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Smallest integer k >= 5 with k >= (5 + sqrt(1 + 24 g)) / 2, computed in
/// integers: (k - 2)(k - 3) >= 6 g.
std::uint64_t heawood_bound(std::uint64_t euler_genus);

struct RootedTree {
  VertexId root;
  std::map<VertexId, VertexId> parent;
  std::map<VertexId, std::size_t> depth;

  std::optional<VertexId> parent_of(VertexId v) const;
  std::map<VertexId, std::vector<VertexId>> children() const;
  bool contains_edge(const Edge& e) const;
  /// Vertices sorted by decreasing depth (ties by id), i.e. leaves first.
  std::vector<VertexId> bottom_up() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Breadth-first spanning tree, visiting neighbours in ascending id order.
RootedTree bfs_tree(const Graph& g, VertexId root);

/// Same undirected tree, rooted at `new_root`.
RootedTree reroot(const RootedTree& t, const Graph& g, VertexId new_root);

/// Throws std::invalid_argument describing the first violated tree invariant.
void check_rooted_tree(const Graph& g, const RootedTree& t);

}  // namespace surfcert
