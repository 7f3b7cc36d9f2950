#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfcert/certificate.hpp"

namespace surfcert {

/// Rejection rules, in the order the verifier tries them. The packing rules
/// run first because the other rules need the unpacked edge certificates.
enum class RuleTag {
  pack_missing,
  pack_conflict,
  pack_overflow,
  r1_rotation,
  r2_face,
  r3_tree,
  r4_counters,
  r5_euler,
  r6_signs,
  r7_tree_mode,
  r8_mode,
};

/// "R1".."R8", "PACK_MISSING", "PACK_CONFLICT", "PACK_OVERFLOW".
const char* to_string(RuleTag tag) noexcept;

struct RuleInfo {
  RuleTag tag;
  const char* name;
  const char* description;
};

const std::vector<RuleInfo>& enumerate_rules();

struct Verdict {
  bool accepted = true;
  std::optional<RuleTag> rule;
  std::string detail;

  static Verdict accept() { return {}; }
  static Verdict reject(RuleTag tag, std::string why) { return {false, tag, std::move(why)}; }
};

/// Public parameters: the class being certified, not certificate content.
struct VerifierParams {
  std::int64_t target_eg = 0;
  bool orientable = true;
  bool packed = false;
};

struct NeighborView {
  VertexId id;
  std::optional<VertexCertificate> cert;
};

/// What one vertex sees in one round. Certificates are optional so that an
/// assignment with holes still produces a view (and a rejection).
struct LocalView {
  VertexId own_id;
  std::optional<VertexCertificate> own_cert;
  /// Ascending by id.
  std::vector<NeighborView> neighbors;
  /// Logical mode: certificate of the edge to each neighbour, when present.
  std::map<VertexId, EdgeCertificate> incident_edge_certs;
  /// Packed mode: own store and the neighbours' stores.
  std::vector<EdgeCertificate> own_store;
  std::map<VertexId, std::vector<EdgeCertificate>> neighbor_stores;
};

struct UnpackResult {
  LocalView view;
  std::optional<Verdict> rejection;
};

/// Rebuilds `incident_edge_certs` from the stores: every incident edge needs
/// a copy in the own store or in that neighbour's store, and all copies must
/// agree. The own store may hold at most heawood_bound(target_eg) entries.
UnpackResult unpack_local(const VerifierParams& params, const LocalView& view);

/// Accepts iff every rule passes; otherwise reports the first failing rule.
Verdict verify(const VerifierParams& params, const LocalView& view);

}  // namespace surfcert
