#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfcert/embedding.hpp"
#include "surfcert/graph.hpp"

namespace surfcert {

enum class CertMode { orientable, nonorientable, tree };

const char* to_string(CertMode mode) noexcept;
/// Throws std::invalid_argument for anything but the three names.
CertMode parse_cert_mode(std::string_view text);

/// Everything a vertex is told about the spanning tree and the global counts.
/// Counters are unsigned and unchecked: forged certificates are representable.
struct VertexCertificate {
  VertexId own_id;
  CertMode mode = CertMode::orientable;
  VertexId root;
  std::uint64_t depth = 0;
  std::optional<VertexId> parent;
  std::uint64_t total_n = 0;
  std::uint64_t nu = 0;
  std::uint64_t total_2m = 0;
  /// Twice the subtree's half-degree sum, i.e. the subtree's degree sum.
  std::uint64_t mu2 = 0;
  std::optional<std::uint64_t> total_F;
  std::optional<std::uint64_t> phi;
  std::optional<std::uint8_t> eta;
  /// Root only, non-orientable mode: far endpoint of the special edge.
  std::optional<VertexId> er;

  friend bool operator==(const VertexCertificate&, const VertexCertificate&) = default;
};

/// Certificate of edge uv. (ru, fu) describe the face containing the
/// half-edge at u towards v; (rv, fv) the one at v towards u.
struct EdgeCertificate {
  VertexId u;
  VertexId v;
  std::uint64_t iu = 0;
  std::uint64_t iv = 0;
  HalfEdge ru;
  std::uint64_t fu = 0;
  HalfEdge rv;
  std::uint64_t fv = 0;
  std::optional<int> sign;

  Edge edge() const { return Edge::of(u, v); }
  bool mentions(VertexId a, VertexId b) const {
    return (u == a && v == b) || (u == b && v == a);
  }

  friend bool operator==(const EdgeCertificate&, const EdgeCertificate&) = default;
};

struct CertificateAssignment {
  CertMode mode = CertMode::orientable;
  std::int64_t target_eg = 0;
  std::map<VertexId, VertexCertificate> vertex_certs;
  /// Logical form. Empty once packed.
  std::map<Edge, EdgeCertificate> edge_certs;
  /// Packed form: the edge certificates each vertex stores.
  std::optional<std::map<VertexId, std::vector<EdgeCertificate>>> packing;

  bool packed() const noexcept { return packing.has_value(); }

  friend bool operator==(const CertificateAssignment&, const CertificateAssignment&) = default;
};

/// Text bundle:
///   certs <mode> <target_eg> <n> <m>
///   vc <id> root=<id> depth=<k> parent=<id|-> n= nu= m2= mu2= F=<k|-> phi=<k|-> eta=<0|1|-> er=<id|->
///   ec <u> <v> iu= iv= ru=<a>,<b> fu= rv=<a>,<b> fv= [sign=+|-]
///   store <id>: <a>-<b> ...        (packed bundles only)
/// The per-vertex mode is taken from the header.
std::string format_bundle(const CertificateAssignment& a);
/// Throws FormatError.
CertificateAssignment parse_bundle(std::string_view text);

}  // namespace surfcert
