#include "surfcert/embedding.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

#include "darts.hpp"
#include "surfcert/errors.hpp"
#include "text_util.hpp"

namespace surfcert {

namespace {

std::string id_str(VertexId v) { return std::to_string(v.value); }

// Parity of negative edges on the tree path from the root; tree = BFS from the least id.
struct Potentials {
  RootedTree tree;
  std::map<VertexId, int> parity;
};

Potentials sign_potentials(const Graph& g, const EmbeddingScheme& s) {
  Potentials p{bfs_tree(g, g.vertices().front()), {}};
  std::vector<VertexId> order = p.tree.bottom_up();
  std::reverse(order.begin(), order.end());
  for (VertexId v : order) {
    auto parent = p.tree.parent_of(v);
    p.parity[v] = parent ? p.parity[*parent] ^ (s.sign(v, *parent) < 0 ? 1 : 0) : 0;
  }
  return p;
}

bool edge_is_twisted(const EmbeddingScheme& s, const Potentials& p, const Edge& e) {
  int expected = p.parity.at(e.lo) ^ p.parity.at(e.hi);
  int actual = s.sign(e.lo, e.hi) < 0 ? 1 : 0;
  return expected != actual;
}

std::vector<VertexId> tree_path(const RootedTree& t, VertexId a, VertexId b) {
  // a ... lca ... b
  std::vector<VertexId> up_a{a};
  std::vector<VertexId> up_b{b};
  while (t.depth.at(up_a.back()) > t.depth.at(up_b.back())) up_a.push_back(*t.parent_of(up_a.back()));
  while (t.depth.at(up_b.back()) > t.depth.at(up_a.back())) up_b.push_back(*t.parent_of(up_b.back()));
  while (up_a.back() != up_b.back()) {
    up_a.push_back(*t.parent_of(up_a.back()));
    up_b.push_back(*t.parent_of(up_b.back()));
  }
  up_b.pop_back();
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

}  // namespace

void validate_scheme(const Graph& g, const EmbeddingScheme& s) {
  for (VertexId v : g.vertices()) {
    auto it = s.rotation.find(v);
    if (it == s.rotation.end()) {
      throw SchemeError(SchemeErrorKind::missing_rotation, "no rotation for vertex " + id_str(v));
    }
    std::vector<VertexId> sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) {
      throw SchemeError(SchemeErrorKind::rotation_mismatch,
                        "rotation at " + id_str(v) + " is not a cyclic order of its neighbours");
    }
  }
  if (s.rotation.size() != g.order()) {
    throw SchemeError(SchemeErrorKind::rotation_mismatch, "rotation given for a non-vertex");
  }
  for (const Edge& e : s.negative_edges) {
    if (!g.adjacent(e.lo, e.hi)) {
      throw SchemeError(SchemeErrorKind::sign_on_non_edge,
                        "sign on non-edge " + id_str(e.lo) + "-" + id_str(e.hi));
    }
  }
  if (s.orientable_mode && !s.negative_edges.empty()) {
    throw SchemeError(SchemeErrorKind::negative_in_orientable_mode,
                      "negative edge in an orientable-mode scheme");
  }
}

HalfEdge phi_successor(const EmbeddingScheme& s, const HalfEdge& h) {
  auto it = s.rotation.find(h.toward);
  if (it == s.rotation.end()) {
    throw SchemeError(SchemeErrorKind::unknown_half_edge, "unknown vertex " + id_str(h.toward));
  }
  const auto& rot = it->second;
  auto pos = std::find(rot.begin(), rot.end(), h.at);
  if (pos == rot.end()) {
    throw SchemeError(SchemeErrorKind::unknown_half_edge,
                      "no half-edge " + id_str(h.at) + "->" + id_str(h.toward));
  }
  const std::size_t deg = rot.size();
  const std::size_t k = static_cast<std::size_t>(pos - rot.begin());
  const std::size_t next = s.sign(h.at, h.toward) > 0 ? (k + 1) % deg : (k + deg - 1) % deg;
  return {h.toward, rot[next]};
}

FaceStructure trace_faces_phi(const Graph& g, const EmbeddingScheme& s) {
  const detail::DartTable t(g);
  const detail::DartRotation r(g, t, s);
  const std::size_t darts = t.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::vector<std::size_t> succ(darts);
  for (std::size_t d = 0; d < darts; ++d) succ[d] = r.phi(t, d);

  // Cycles of the functional graph, discovered in dart (= lexicographic) order.
  std::vector<std::size_t> face(darts, none);
  std::vector<std::uint8_t> state(darts, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < darts; ++start) {
    if (state[start]) continue;
    std::vector<std::size_t> walk;
    std::size_t d = start;
    while (state[d] == 0) {
      state[d] = 1;
      walk.push_back(d);
      d = succ[d];
    }
    if (state[d] == 1) {
      auto from = std::find(walk.begin(), walk.end(), d);
      std::vector<std::size_t> cycle(from, walk.end());
      for (std::size_t c : cycle) face[c] = cycles.size();
      cycles.push_back(std::move(cycle));
    }
    for (std::size_t w : walk) state[w] = 2;
  }

  FaceStructure fs;
  fs.face_count = cycles.size();

  // Tail heights: longest chain of off-cycle predecessors ending at a dart.
  std::vector<std::size_t> indegree(darts, 0);
  for (std::size_t d = 0; d < darts; ++d) {
    if (face[d] == none) ++indegree[succ[d]];
  }
  std::vector<std::size_t> height(darts, 0);
  std::vector<std::size_t> junction_need(darts, 0);  // for cycle darts: 1 + max tail height
  std::deque<std::size_t> queue;
  for (std::size_t d = 0; d < darts; ++d) {
    if (face[d] == none && indegree[d] == 0) queue.push_back(d);
  }
  std::vector<std::size_t> tails;
  while (!queue.empty()) {
    std::size_t d = queue.front();
    queue.pop_front();
    tails.push_back(d);
    std::size_t nx = succ[d];
    if (face[nx] == none) {
      height[nx] = std::max(height[nx], height[d] + 1);
      if (--indegree[nx] == 0) queue.push_back(nx);
    } else {
      junction_need[nx] = std::max(junction_need[nx], height[d] + 1);
    }
  }
  fs.phi_bijective = tails.empty();

  std::vector<std::size_t> findex(darts, 0);
  std::vector<bool> is_root(darts, false);
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    const auto& cycle = cycles[f];
    const std::size_t len = cycle.size();
    std::vector<std::size_t> candidates(len);
    for (std::size_t i = 0; i < len; ++i) candidates[i] = i;
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) { return cycle[a] < cycle[b]; });
    std::vector<std::size_t> junctions;
    for (std::size_t i = 0; i < len; ++i) {
      if (junction_need[cycle[i]] > 0) junctions.push_back(i);
    }
    std::optional<std::size_t> root_pos;
    for (std::size_t r0 : candidates) {
      bool ok = std::all_of(junctions.begin(), junctions.end(), [&](std::size_t i) {
        return i == r0 || (i + len - r0) % len >= junction_need[cycle[i]];
      });
      if (ok) {
        root_pos = r0;
        break;
      }
    }
    if (!root_pos) {
      fs.indices_feasible = false;
      root_pos = candidates.front();
    }
    for (std::size_t i = 0; i < len; ++i) findex[cycle[i]] = (i + len - *root_pos) % len;
    is_root[cycle[*root_pos]] = true;
    fs.root_of.push_back(t.half_edge(g, cycle[*root_pos]));
    fs.degree.push_back(len);
  }

  // Tails, from the cycles outward (reverse of the leaf-first order above).
  for (auto it = tails.rbegin(); it != tails.rend(); ++it) {
    std::size_t d = *it;
    std::size_t nx = succ[d];
    face[d] = face[nx];
    if (is_root[nx]) {
      findex[d] = height[d];
    } else {
      findex[d] = findex[nx] > 0 ? findex[nx] - 1 : 0;
    }
  }

  for (std::size_t d = 0; d < darts; ++d) {
    HalfEdge h = t.half_edge(g, d);
    fs.face_of.emplace(h, face[d]);
    fs.f_index.emplace(h, findex[d]);
  }
  return fs;
}

DoubledFaces trace_faces_doubled(const Graph& g, const EmbeddingScheme& s) {
  DoubledFaces out;
  if (g.size() == 0) {
    out.face_count = 1;
    return out;
  }
  const detail::DartTable t(g);
  const detail::DartRotation r(g, t, s);
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::size_t orbits = detail::count_doubled_orbits(t, r, stamp, epoch, &out.orbit_lengths);
  if (orbits % 2 != 0) {
    throw InconsistencyError("doubled face tracing produced an odd number of orbits (" +
                             std::to_string(orbits) + ")");
  }
  out.face_count = orbits / 2;
  return out;
}

std::int64_t euler_genus_unchecked(const Graph& g, std::size_t face_count) noexcept {
  return 2 + static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) -
         static_cast<std::int64_t>(face_count);
}

std::int64_t euler_genus(const Graph& g, std::size_t face_count) {
  std::int64_t eg = euler_genus_unchecked(g, face_count);
  if (eg < 0) {
    throw InconsistencyError("negative Euler genus " + std::to_string(eg) + " for " +
                             std::to_string(face_count) + " faces");
  }
  return eg;
}

bool is_orientable_scheme(const Graph& g, const EmbeddingScheme& s) {
  Potentials p = sign_potentials(g, s);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return edge_is_twisted(s, p, e); });
}

std::optional<OddNegativeCycle> find_odd_negative_cycle(const Graph& g, const EmbeddingScheme& s) {
  Potentials p = sign_potentials(g, s);
  auto twisted = std::find_if(g.edges().begin(), g.edges().end(),
                              [&](const Edge& e) { return edge_is_twisted(s, p, e); });
  if (twisted == g.edges().end()) return std::nullopt;

  // Fundamental cycle of the twisted edge, as a closed vertex sequence.
  std::vector<VertexId> cycle = tree_path(p.tree, twisted->lo, twisted->hi);
  const std::size_t len = cycle.size();

  std::optional<Edge> special;
  std::size_t special_pos = 0;  // edge (cycle[pos], cycle[pos + 1 mod len])
  for (std::size_t i = 0; i < len; ++i) {
    Edge e = Edge::of(cycle[i], cycle[(i + 1) % len]);
    if (s.sign(e.lo, e.hi) < 0 && (!special || e < *special)) {
      special = e;
      special_pos = i;
    }
  }
  if (!special) {
    throw InconsistencyError("odd-negative fundamental cycle without a negative edge");
  }

  // Walk the cycle from the root away from the special edge.
  OddNegativeCycle out;
  out.special_edge = *special;
  out.root = special->lo;
  out.partner = special->hi;
  const bool root_first = cycle[special_pos] == out.root;
  // root_first: special edge goes root -> cycle[pos+1], so walk backwards.
  std::size_t at = root_first ? special_pos : (special_pos + 1) % len;
  for (std::size_t step = 0; step < len; ++step) {
    out.cycle_path.push_back(cycle[at]);
    at = root_first ? (at + len - 1) % len : (at + 1) % len;
  }

  RootedTree& tree = out.tree;
  tree.root = out.root;
  std::deque<VertexId> queue;
  for (std::size_t i = 0; i < out.cycle_path.size(); ++i) {
    VertexId v = out.cycle_path[i];
    tree.depth[v] = i;
    if (i > 0) tree.parent[v] = out.cycle_path[i - 1];
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (tree.depth.count(w)) continue;
      tree.depth[w] = tree.depth[v] + 1;
      tree.parent[w] = v;
      queue.push_back(w);
    }
  }
  return out;
}

SchemeDiagnostics diagnose(const Graph& g, const EmbeddingScheme& s) {
  SchemeDiagnostics d;
  FaceStructure fs = trace_faces_phi(g, s);
  DoubledFaces df = trace_faces_doubled(g, s);
  d.phi_face_count = static_cast<std::int64_t>(fs.face_count);
  d.doubled_face_count = static_cast<std::int64_t>(df.face_count);
  d.phi_bijective = fs.phi_bijective;
  d.euler_genus_phi = euler_genus_unchecked(g, fs.face_count);
  d.euler_genus_doubled = euler_genus_unchecked(g, df.face_count);
  d.orientable = is_orientable_scheme(g, s);
  return d;
}

EmbeddingScheme switch_at(const Graph& g, const EmbeddingScheme& s, VertexId v) {
  EmbeddingScheme out = s;
  auto& rot = out.rotation.at(v);
  std::reverse(rot.begin(), rot.end());
  for (VertexId w : g.neighbors(v)) {
    Edge e = Edge::of(v, w);
    if (!out.negative_edges.erase(e)) out.negative_edges.insert(e);
  }
  return out;
}

std::optional<EmbeddingScheme> best_phi_switching(const Graph& g, const EmbeddingScheme& s) {
  const std::size_t n = g.order();
  if (n > 16) throw std::invalid_argument("best_phi_switching: too many vertices");
  std::optional<EmbeddingScheme> best;
  std::size_t best_faces = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    EmbeddingScheme cand = s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) cand = switch_at(g, cand, g.vertices()[i]);
    }
    FaceStructure fs = trace_faces_phi(g, cand);
    if (!fs.indices_feasible) continue;
    if (!best || fs.face_count > best_faces) {
      best = std::move(cand);
      best_faces = fs.face_count;
    }
  }
  return best;
}

EmbeddingScheme ascending_scheme(const Graph& g) {
  EmbeddingScheme s;
  for (VertexId v : g.vertices()) s.rotation[v] = g.neighbors(v);
  return s;
}

EmbeddingScheme parse_embedding(std::string_view text) {
  EmbeddingScheme s;
  bool have_header = false;
  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++lineno;
    auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    auto number = [&](std::string_view tok) {
      auto v = detail::parse_u64(tok);
      if (!v || *v == 0) throw FormatError("expected a positive identifier, got '" + std::string(tok) + "'", lineno);
      return VertexId(*v);
    };
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "embedding" ||
          (tokens[1] != "orientable" && tokens[1] != "nonorientable")) {
        throw FormatError("expected 'embedding orientable|nonorientable'", lineno);
      }
      s.orientable_mode = tokens[1] == "orientable";
      have_header = true;
    } else if (tokens[0] == "rot") {
      if (tokens.size() < 2 || tokens[1].back() != ':') {
        throw FormatError("expected 'rot <id>: <ids...>'", lineno);
      }
      VertexId v = number(tokens[1].substr(0, tokens[1].size() - 1));
      if (s.rotation.count(v)) throw FormatError("second rotation for vertex " + id_str(v), lineno);
      auto& rot = s.rotation[v];
      for (std::size_t i = 2; i < tokens.size(); ++i) rot.push_back(number(tokens[i]));
    } else if (tokens[0] == "neg") {
      if (tokens.size() != 3) throw FormatError("expected 'neg <id1> <id2>'", lineno);
      if (s.orientable_mode) throw FormatError("'neg' lines require a nonorientable embedding", lineno);
      s.negative_edges.insert(Edge::of(number(tokens[1]), number(tokens[2])));
    } else {
      throw FormatError("unknown record '" + std::string(tokens[0]) + "'", lineno);
    }
  }
  if (!have_header) throw FormatError("missing 'embedding' header", lineno);
  return s;
}

std::string format_embedding(const EmbeddingScheme& s) {
  std::ostringstream os;
  os << "embedding " << (s.orientable_mode ? "orientable" : "nonorientable") << '\n';
  for (const auto& [v, rot] : s.rotation) {
    os << "rot " << v << ':';
    for (VertexId w : rot) os << ' ' << w;
    os << '\n';
  }
  for (const Edge& e : s.negative_edges) os << "neg " << e.lo << ' ' << e.hi << '\n';
  return os.str();
}

}  // namespace surfcert
