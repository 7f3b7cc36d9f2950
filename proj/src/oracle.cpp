#include "surfcert/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "darts.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"

namespace surfcert {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > saturated / a) return saturated;
  return a * b;
}

// All cyclic orders of the neighbours of each vertex, first neighbour fixed.
std::vector<std::vector<std::vector<VertexId>>> rotation_choices(const Graph& g) {
  std::vector<std::vector<std::vector<VertexId>>> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& nbrs = g.neighbors_at(i);
    if (nbrs.size() <= 1) {
      out[i].push_back(nbrs);
      continue;
    }
    std::vector<VertexId> rest(nbrs.begin() + 1, nbrs.end());
    do {
      std::vector<VertexId> rot{nbrs.front()};
      rot.insert(rot.end(), rest.begin(), rest.end());
      out[i].push_back(std::move(rot));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

struct Search {
  const Graph& g;
  detail::DartTable darts;
  std::vector<std::vector<std::vector<VertexId>>> choices;
  std::vector<std::size_t> pick;
  detail::DartRotation rot;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  explicit Search(const Graph& graph)
      : g(graph),
        darts(graph),
        choices(rotation_choices(graph)),
        pick(graph.order(), 0),
        rot(graph, darts, initial_scheme()) {}

  EmbeddingScheme initial_scheme() const {
    EmbeddingScheme s;
    for (std::size_t i = 0; i < g.order(); ++i) s.rotation[g.vertices()[i]] = choices[i][0];
    return s;
  }

  // Advances the odometer; false once every system has been visited.
  bool advance() {
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) {
        rot.set_vertex(g, darts, i, choices[i][pick[i]]);
        return true;
      }
      pick[i] = 0;
      rot.set_vertex(g, darts, i, choices[i][0]);
    }
    return false;
  }

  std::size_t faces() { return detail::count_doubled_orbits(darts, rot, stamp, epoch) / 2; }

  EmbeddingScheme current(bool orientable) const {
    EmbeddingScheme s;
    s.orientable_mode = orientable;
    for (std::size_t i = 0; i < g.order(); ++i) s.rotation[g.vertices()[i]] = choices[i][pick[i]];
    for (std::size_t d = 0; d < darts.size(); ++d) {
      if (rot.sign[d] < 0) {
        s.negative_edges.insert(Edge::of(g.vertices()[darts.tail[d]], g.vertices()[darts.head[d]]));
      }
    }
    return s;
  }
};

void require_rotation_budget(const Graph& g, const OracleBudget& budget) {
  std::uint64_t need = rotation_system_count(g);
  if (need > budget.max_rotation_systems) {
    throw BudgetExceeded("enumeration needs " + std::to_string(need) +
                             " rotation systems, budget is " +
                             std::to_string(budget.max_rotation_systems),
                         need);
  }
}

OracleResult search_orientable(const Graph& g, std::optional<std::int64_t> stop_at) {
  Search search(g);
  OracleResult best;
  best.min_eg = std::numeric_limits<std::int64_t>::max();
  do {
    ++best.systems_searched;
    std::int64_t eg = euler_genus(g, g.size() == 0 ? 1 : search.faces());
    if (eg < best.min_eg) {
      best.min_eg = eg;
      best.witness = search.current(true);
      if (stop_at && eg <= *stop_at) break;
    }
  } while (search.advance());
  return best;
}

OracleResult search_nonorientable(const Graph& g, std::optional<std::int64_t> stop_at) {
  Search search(g);
  RootedTree tree = bfs_tree(g, g.vertices().front());
  std::vector<std::size_t> cotree;  // one dart per non-tree edge
  for (std::size_t d = 0; d < search.darts.size(); ++d) {
    if (search.darts.tail[d] > search.darts.head[d]) continue;
    HalfEdge h = search.darts.half_edge(g, d);
    if (!tree.contains_edge(Edge::of(h.at, h.toward))) cotree.push_back(d);
  }
  const std::uint64_t classes = std::uint64_t{1} << cotree.size();

  OracleResult best;
  best.min_eg = std::numeric_limits<std::int64_t>::max();
  do {
    for (std::uint64_t mask = 1; mask < classes; ++mask) {
      for (std::size_t k = 0; k < cotree.size(); ++k) {
        std::int8_t sign = (mask >> k) & 1 ? -1 : 1;
        std::size_t d = cotree[k];
        search.rot.sign[d] = sign;
        search.rot.sign[search.darts.twin[d]] = sign;
      }
      ++best.systems_searched;
      std::int64_t eg = euler_genus(g, search.faces());
      if (eg < best.min_eg) {
        best.min_eg = eg;
        best.witness = search.current(false);
        if (stop_at && eg <= *stop_at) return best;
      }
    }
  } while (search.advance());
  return best;
}

void require_nonorientable_budget(const Graph& g, const OracleBudget& budget) {
  if (g.is_tree()) {
    throw std::invalid_argument("a tree has no non-orientable cellular embedding");
  }
  require_rotation_budget(g, budget);
  std::uint64_t classes = sign_class_count(g);
  if (classes > budget.max_sign_classes) {
    throw BudgetExceeded("enumeration needs " + std::to_string(classes) +
                             " sign classes, budget is " + std::to_string(budget.max_sign_classes),
                         classes);
  }
}

}  // namespace

std::uint64_t rotation_system_count(const Graph& g) {
  std::uint64_t total = 1;
  for (VertexId v : g.vertices()) {
    for (std::uint64_t k = 2; k < g.degree(v); ++k) total = mul_sat(total, k);
  }
  return total;
}

std::uint64_t sign_class_count(const Graph& g) {
  std::size_t cyclomatic = g.size() + 1 - g.order();
  return cyclomatic >= 64 ? saturated : std::uint64_t{1} << cyclomatic;
}

OracleResult min_genus_orientable(const Graph& g, const OracleBudget& budget) {
  require_rotation_budget(g, budget);
  return search_orientable(g, std::nullopt);
}

OracleResult min_genus_nonorientable(const Graph& g, const OracleBudget& budget) {
  require_nonorientable_budget(g, budget);
  return search_nonorientable(g, std::nullopt);
}

std::int64_t euler_lower_bound(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());
  if (m < 2) return 0;
  return std::max<std::int64_t>(0, 2 + m - n - (2 * m) / 3);
}

bool is_embeddable(const Graph& g, std::int64_t target_eg, bool orientable,
                   const OracleBudget& budget) {
  if (target_eg < 0) return false;
  if (g.is_tree()) return true;

  std::int64_t lower = euler_lower_bound(g);
  if (orientable && lower % 2 != 0) ++lower;
  if (!orientable) lower = std::max<std::int64_t>(lower, 1);
  if (lower > target_eg) return false;

  for (const Fixture& f : fixtures()) {
    if (f.graph == g && f.scheme.orientable_mode == orientable && f.euler_genus <= target_eg) {
      return true;
    }
  }

  if (orientable) {
    require_rotation_budget(g, budget);
    return search_orientable(g, target_eg).min_eg <= target_eg;
  }
  require_nonorientable_budget(g, budget);
  return search_nonorientable(g, target_eg).min_eg <= target_eg;
}

}  // namespace surfcert
