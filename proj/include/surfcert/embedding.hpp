#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "surfcert/graph.hpp"

namespace surfcert {

/// The incidence (at, edge {at, toward}). Graphs are simple, so the ordered
/// pair of endpoint ids identifies the half-edge.
struct HalfEdge {
  VertexId at;
  VertexId toward;

  constexpr HalfEdge reversed() const { return {toward, at}; }
  constexpr auto operator<=>(const HalfEdge&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const HalfEdge& h) {
  return os << '(' << h.at << "->" << h.toward << ')';
}

/// Rotation system plus edge signs. Edges not listed in `negative_edges`
/// carry sign +1.
struct EmbeddingScheme {
  std::map<VertexId, std::vector<VertexId>> rotation;
  std::set<Edge> negative_edges;
  bool orientable_mode = true;

  int sign(VertexId a, VertexId b) const {
    return negative_edges.count(Edge::of(a, b)) ? -1 : 1;
  }

  friend bool operator==(const EmbeddingScheme&, const EmbeddingScheme&) = default;
};

/// Face structure of the successor map phi(v->u) = (u -> sigma_u^{lambda}(v)).
///
/// When phi is not injective, its functional graph has trees hanging off the
/// cycles. Faces are the cycles; a tail half-edge belongs to the face whose
/// cycle it eventually reaches, and receives f-indices counting down towards
/// the junction. The root of each face is the lexicographically least cycle
/// half-edge for which that countdown stays non-negative; `indices_feasible`
/// is false when no such root exists for some face.
struct FaceStructure {
  std::map<HalfEdge, std::size_t> face_of;
  std::vector<HalfEdge> root_of;
  std::map<HalfEdge, std::size_t> f_index;
  /// Cycle length of each face.
  std::vector<std::size_t> degree;
  std::size_t face_count = 0;
  bool phi_bijective = true;
  bool indices_feasible = true;

  bool is_root(const HalfEdge& h) const {
    auto it = face_of.find(h);
    return it != face_of.end() && root_of[it->second] == h;
  }
};

struct DoubledFaces {
  std::size_t face_count = 0;
  std::vector<std::size_t> orbit_lengths;
};

struct SchemeDiagnostics {
  std::int64_t phi_face_count = 0;
  std::int64_t doubled_face_count = 0;
  bool phi_bijective = true;
  std::int64_t euler_genus_phi = 0;
  std::int64_t euler_genus_doubled = 0;
  bool orientable = true;
};

/// Throws SchemeError unless every rotation is a cyclic order of exactly the
/// neighbours of its vertex and every negative edge is a graph edge (none
/// allowed in orientable mode).
void validate_scheme(const Graph& g, const EmbeddingScheme& s);

/// phi((v->u)) = (u->w), w following (sign +1) or preceding (sign -1) v in
/// rotation(u).
HalfEdge phi_successor(const EmbeddingScheme& s, const HalfEdge& h);

FaceStructure trace_faces_phi(const Graph& g, const EmbeddingScheme& s);

/// Classical facial-walk tracing that carries the current local orientation
/// along the walk. Every facial walk is traced once in each direction, so
/// face_count = orbits / 2. Throws InconsistencyError on an odd orbit count.
DoubledFaces trace_faces_doubled(const Graph& g, const EmbeddingScheme& s);

/// 2 + |E| - |V| - face_count. Throws InconsistencyError when negative.
std::int64_t euler_genus(const Graph& g, std::size_t face_count);
std::int64_t euler_genus_unchecked(const Graph& g, std::size_t face_count) noexcept;

/// True iff no cycle carries an odd number of negative edges.
bool is_orientable_scheme(const Graph& g, const EmbeddingScheme& s);

struct OddNegativeCycle {
  VertexId root;
  /// Other endpoint of the special edge.
  VertexId partner;
  /// Negative edge of the cycle, incident to the root and outside the tree.
  Edge special_edge;
  /// Rooted at `root`; contains the cycle minus the special edge as a path.
  RootedTree tree;
  /// root, ..., partner along the tree.
  std::vector<VertexId> cycle_path;
};

/// A non-orientable scheme always has one: pick any odd-negative cycle C,
/// take a negative edge of C as the special edge and grow the tree around
/// the path C minus that edge. Absent iff the scheme is orientable.
std::optional<OddNegativeCycle> find_odd_negative_cycle(const Graph& g, const EmbeddingScheme& s);

SchemeDiagnostics diagnose(const Graph& g, const EmbeddingScheme& s);

/// Local switch at `v`: reverse rotation(v) and negate the signs of the edges at v.
EmbeddingScheme switch_at(const Graph& g, const EmbeddingScheme& s, VertexId v);

/// Among all switchings of `s` (2^n of them, n <= 16), the one whose phi
/// structure admits a root placement and has the largest phi face count.
/// Ties go to the first in subset order. Returns nullopt if none is feasible.
std::optional<EmbeddingScheme> best_phi_switching(const Graph& g, const EmbeddingScheme& s);

/// Rotation at every vertex = ascending neighbours, all signs +1.
EmbeddingScheme ascending_scheme(const Graph& g);

/// Embedding file format: `embedding orientable|nonorientable`,
/// `rot <id>: <ids...>`, `neg <a> <b>`.
EmbeddingScheme parse_embedding(std::string_view text);
std::string format_embedding(const EmbeddingScheme& s);

}  // namespace surfcert
