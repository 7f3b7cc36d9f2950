#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "surfcert/embedding.hpp"
#include "surfcert/graph.hpp"

namespace surfcert {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Centre 1, leaves 2..leaves+1.
Graph star_graph(std::size_t leaves);

/// A known graph with a known embedding scheme. `euler_genus` is the genus of
/// the surface the scheme describes (doubled tracer); `phi_genus` is what the
/// certificates can prove, i.e. the genus computed from phi cycles.
struct Fixture {
  std::string name;
  Graph graph;
  EmbeddingScheme scheme;
  std::size_t phi_faces = 0;
  std::size_t doubled_faces = 0;
  std::int64_t euler_genus = 0;
  std::int64_t phi_genus = 0;
  /// Certified with the tree scheme rather than a cellular one.
  bool tree_mode = false;
};

/// Built once, on first use. Includes cycles, planar K4, K5 / K3,3 / K7 on
/// the torus, K5 and K6 on the projective plane, the twisted triangle and a
/// few trees.
const std::vector<Fixture>& fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(std::string_view name);

/// Rotation at vertex i (ids 1..7) is (i + offsets[k]) mod 7; the first
/// offset pattern whose scheme has 14 faces.
EmbeddingScheme k7_torus_scheme();

/// Embedding scheme realising a list of closed face walks in which every edge
/// appears exactly twice and every vertex link is a single cycle. Requires
/// minimum degree 3.
EmbeddingScheme scheme_from_faces(const Graph& g, const std::vector<std::vector<VertexId>>& faces);

}  // namespace surfcert
