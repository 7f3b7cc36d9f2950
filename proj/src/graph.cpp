#include "surfcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "surfcert/errors.hpp"
#include "text_util.hpp"

namespace surfcert {

const char* to_string(GraphErrorKind kind) noexcept {
  switch (kind) {
    case GraphErrorKind::malformed_line: return "malformed line";
    case GraphErrorKind::duplicate_edge: return "duplicate edge";
    case GraphErrorKind::loop: return "loop";
    case GraphErrorKind::disconnected: return "disconnected graph";
    case GraphErrorKind::duplicate_id: return "duplicate identifier";
    case GraphErrorKind::unknown_vertex: return "unknown vertex";
    case GraphErrorKind::count_mismatch: return "count mismatch";
  }
  return "?";
}

Graph Graph::from_edges(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) {
    throw GraphError(GraphErrorKind::count_mismatch, "graph has no vertices");
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].value == 0) {
      throw GraphError(GraphErrorKind::malformed_line, "vertex identifiers must be positive");
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw GraphError(GraphErrorKind::duplicate_id,
                       "duplicate identifier " + std::to_string(vertices[i].value));
    }
  }

  Graph g;
  g.ids_ = std::move(vertices);
  g.index_.reserve(g.ids_.size());
  for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_.emplace(g.ids_[i], i);
  g.adj_.resize(g.ids_.size());

  std::set<Edge> seen;
  for (const Edge& raw : edges) {
    if (raw.lo == raw.hi) {
      throw GraphError(GraphErrorKind::loop, "loop at " + std::to_string(raw.lo.value));
    }
    Edge e = Edge::of(raw.lo, raw.hi);
    if (!g.contains(e.lo) || !g.contains(e.hi)) {
      throw GraphError(GraphErrorKind::unknown_vertex,
                       "edge " + std::to_string(e.lo.value) + "-" + std::to_string(e.hi.value) +
                           " names an unknown vertex");
    }
    if (!seen.insert(e).second) {
      throw GraphError(GraphErrorKind::duplicate_edge, "duplicate edge " +
                                                           std::to_string(e.lo.value) + "-" +
                                                           std::to_string(e.hi.value));
    }
    g.adj_[g.index_.at(e.lo)].push_back(e.hi);
    g.adj_[g.index_.at(e.hi)].push_back(e.lo);
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  // connectivity
  std::vector<bool> reached(g.ids_.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (VertexId w : g.adj_[i]) {
      std::size_t j = g.index_.at(w);
      if (!reached[j]) {
        reached[j] = true;
        ++count;
        queue.push_back(j);
      }
    }
  }
  if (count != g.ids_.size()) {
    throw GraphError(GraphErrorKind::disconnected,
                     "graph is disconnected (" + std::to_string(count) + " of " +
                         std::to_string(g.ids_.size()) + " vertices reachable)");
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nbrs : adj_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  auto it = index_.find(a);
  if (it == index_.end()) return false;
  const auto& nbrs = adj_[it->second];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v.value));
  }
  return it->second;
}

Graph parse_graph(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::size_t declared_n = 0;
  std::size_t declared_m = 0;
  bool have_header = false;

  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++lineno;
    auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    auto bad = [&](const std::string& why) {
      return GraphError(GraphErrorKind::malformed_line, "line " + std::to_string(lineno) + ": " + why,
                        lineno);
    };
    auto number = [&](std::string_view tok) {
      auto v = detail::parse_u64(tok);
      if (!v) throw bad("expected a non-negative integer, got '" + std::string(tok) + "'");
      return *v;
    };

    if (!have_header) {
      if (tokens[0] != "graph" || tokens.size() != 3) throw bad("expected 'graph <n> <m>'");
      declared_n = number(tokens[1]);
      declared_m = number(tokens[2]);
      have_header = true;
    } else if (tokens[0] == "v") {
      if (tokens.size() != 2) throw bad("expected 'v <id>'");
      vertices.emplace_back(number(tokens[1]));
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) throw bad("expected 'e <id1> <id2>'");
      edges.push_back(Edge{VertexId(number(tokens[1])), VertexId(number(tokens[2]))});
    } else {
      throw bad("unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) {
    throw GraphError(GraphErrorKind::malformed_line, "missing 'graph <n> <m>' header");
  }
  if (vertices.size() != declared_n || edges.size() != declared_m) {
    throw GraphError(GraphErrorKind::count_mismatch,
                     "header declares " + std::to_string(declared_n) + " vertices and " +
                         std::to_string(declared_m) + " edges, found " +
                         std::to_string(vertices.size()) + " and " + std::to_string(edges.size()));
  }
  return Graph::from_edges(std::move(vertices), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.order() << ' ' << g.size() << '\n';
  for (VertexId v : g.vertices()) os << "v " << v << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.lo << ' ' << e.hi << '\n';
  return os.str();
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> current(n);
  std::vector<std::size_t> original(n);
  using Key = std::tuple<std::size_t, std::size_t, VertexId>;
  std::set<Key> queue;
  for (std::size_t i = 0; i < n; ++i) {
    current[i] = original[i] = g.neighbors_at(i).size();
    queue.emplace(current[i], original[i], g.vertices()[i]);
  }

  DegeneracyOrder result;
  std::vector<bool> removed(n, false);
  std::vector<VertexId> removal;
  removal.reserve(n);
  while (!queue.empty()) {
    auto [deg, orig, v] = *queue.begin();
    queue.erase(queue.begin());
    result.k = std::max(result.k, deg);
    std::size_t vi = g.index_of(v);
    removed[vi] = true;
    removal.push_back(v);
    for (VertexId w : g.neighbors_at(vi)) {
      std::size_t wi = g.index_of(w);
      if (removed[wi]) continue;
      queue.erase(Key{current[wi], original[wi], w});
      --current[wi];
      queue.emplace(current[wi], original[wi], w);
    }
  }
  result.order.assign(removal.rbegin(), removal.rend());
  return result;
}

std::uint64_t heawood_bound(std::uint64_t euler_genus) {
  // (k-2)(k-3) grows quadratically, so the search is O(sqrt(g)).
  std::uint64_t k = 5;
  while ((k - 2) * (k - 3) < 6 * euler_genus) ++k;
  return k;
}

std::optional<VertexId> RootedTree::parent_of(VertexId v) const {
  auto it = parent.find(v);
  if (it == parent.end()) return std::nullopt;
  return it->second;
}

std::map<VertexId, std::vector<VertexId>> RootedTree::children() const {
  std::map<VertexId, std::vector<VertexId>> out;
  for (const auto& [v, _] : depth) out[v];
  for (const auto& [child, p] : parent) out[p].push_back(child);
  return out;
}

bool RootedTree::contains_edge(const Edge& e) const {
  auto p = parent_of(e.lo);
  if (p && *p == e.hi) return true;
  p = parent_of(e.hi);
  return p && *p == e.lo;
}

std::vector<VertexId> RootedTree::bottom_up() const {
  std::vector<VertexId> out;
  out.reserve(depth.size());
  for (const auto& [v, _] : depth) out.push_back(v);
  std::stable_sort(out.begin(), out.end(),
                   [&](VertexId a, VertexId b) { return depth.at(a) > depth.at(b); });
  return out;
}

RootedTree bfs_tree(const Graph& g, VertexId root) {
  if (!g.contains(root)) {
    throw std::invalid_argument("bfs root " + std::to_string(root.value) + " is not a vertex");
  }
  RootedTree t;
  t.root = root;
  t.depth[root] = 0;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (t.depth.count(w)) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      queue.push_back(w);
    }
  }
  return t;
}

RootedTree reroot(const RootedTree& t, const Graph& g, VertexId new_root) {
  if (!g.contains(new_root) || !t.depth.count(new_root)) {
    throw std::invalid_argument("new root " + std::to_string(new_root.value) +
                                " is not a tree vertex");
  }
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [child, p] : t.parent) {
    adj[child].push_back(p);
    adj[p].push_back(child);
  }
  for (auto& [_, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());

  RootedTree out;
  out.root = new_root;
  out.depth[new_root] = 0;
  std::deque<VertexId> queue{new_root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (out.depth.count(w)) continue;
      out.depth[w] = out.depth[v] + 1;
      out.parent[w] = v;
      queue.push_back(w);
    }
  }
  return out;
}

void check_rooted_tree(const Graph& g, const RootedTree& t) {
  auto fail = [](const std::string& why) { throw std::invalid_argument("rooted tree: " + why); };
  if (t.depth.size() != g.order()) fail("depth map does not cover every vertex");
  if (t.parent.size() + 1 != g.order()) fail("expected n-1 parent pointers");
  if (t.parent.count(t.root)) fail("root has a parent");
  if (t.depth.count(t.root) == 0 || t.depth.at(t.root) != 0) fail("root depth is not 0");
  for (VertexId v : g.vertices()) {
    if (!t.depth.count(v)) fail("vertex " + std::to_string(v.value) + " has no depth");
    if (v == t.root) continue;
    auto p = t.parent_of(v);
    if (!p) fail("vertex " + std::to_string(v.value) + " has no parent");
    if (!g.adjacent(v, *p)) fail("parent edge is not a graph edge");
    if (t.depth.at(v) != t.depth.at(*p) + 1) fail("depth is not parent depth + 1");
  }
}

}  // namespace surfcert
