#include "surfcert/prover.hpp"

#include <algorithm>
#include <sstream>

#include "surfcert/errors.hpp"
#include "surfcert/harness.hpp"

namespace surfcert {

const char* to_string(ProverErrorKind kind) noexcept {
  switch (kind) {
    case ProverErrorKind::genus_exceeds_target: return "genus_exceeds_target";
    case ProverErrorKind::orientable_scheme_in_nonorientable_mode:
      return "orientable_scheme_in_nonorientable_mode";
    case ProverErrorKind::not_a_tree: return "not_a_tree";
    case ProverErrorKind::no_edges: return "no_edges";
    case ProverErrorKind::infeasible_face_indices: return "infeasible_face_indices";
    case ProverErrorKind::self_check_failed: return "self_check_failed";
  }
  return "?";
}

namespace {

void self_check(const Graph& g, const CertificateAssignment& a, const VerifierParams& params) {
  RunReport report = run_verification(g, a, params);
  if (report.all_accepted) return;
  for (const auto& [v, verdict] : report.verdicts) {
    if (verdict.accepted) continue;
    std::ostringstream os;
    os << "self-check failed: vertex " << v << " rejects at " << to_string(*verdict.rule) << " ("
       << verdict.detail << ")";
    throw ProverError(ProverErrorKind::self_check_failed, os.str());
  }
}

}  // namespace

std::map<Edge, EdgeCertificate> assign_rotation_indices(const Graph& g, const EmbeddingScheme& s) {
  std::map<VertexId, std::map<VertexId, std::uint64_t>> index;
  for (VertexId v : g.vertices()) {
    const auto& rot = s.rotation.at(v);
    if (rot.empty()) continue;
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(rot.begin(), rot.end()) - rot.begin());
    for (std::size_t k = 0; k < rot.size(); ++k) index[v][rot[(start + k) % rot.size()]] = k;
  }
  std::map<Edge, EdgeCertificate> certs;
  for (const Edge& e : g.edges()) {
    EdgeCertificate c;
    c.u = e.lo;
    c.v = e.hi;
    c.iu = index.at(e.lo).at(e.hi);
    c.iv = index.at(e.hi).at(e.lo);
    certs.emplace(e, c);
  }
  return certs;
}

void assign_face_certificates(const Graph& g, const FaceStructure& fs,
                              std::map<Edge, EdgeCertificate>& certs) {
  if (!fs.indices_feasible) {
    throw ProverError(ProverErrorKind::infeasible_face_indices,
                      "no root placement keeps the f-indices of the phi tails non-negative");
  }
  for (const Edge& e : g.edges()) {
    EdgeCertificate& c = certs.at(e);
    const HalfEdge at_u{c.u, c.v}, at_v{c.v, c.u};
    c.ru = fs.root_of.at(fs.face_of.at(at_u));
    c.fu = fs.f_index.at(at_u);
    c.rv = fs.root_of.at(fs.face_of.at(at_v));
    c.fv = fs.f_index.at(at_v);
  }
}

std::map<VertexId, VertexCertificate> build_tree_counters(const Graph& g, const RootedTree& t,
                                                          const FaceStructure* fs,
                                                          const EmbeddingScheme* s) {
  CertMode mode = CertMode::tree;
  if (fs) mode = s && !s->orientable_mode ? CertMode::nonorientable : CertMode::orientable;

  std::map<VertexId, VertexCertificate> out;
  for (VertexId v : g.vertices()) {
    VertexCertificate c;
    c.own_id = v;
    c.mode = mode;
    c.root = t.root;
    c.depth = t.depth.at(v);
    c.parent = t.parent_of(v);
    c.nu = 1;
    c.mu2 = g.degree(v);
    if (fs) {
      std::uint64_t roots = 0;
      for (VertexId w : g.neighbors(v)) roots += fs->is_root({v, w}) ? 1 : 0;
      c.phi = roots;
    }
    out.emplace(v, c);
  }

  const auto order = t.bottom_up();
  for (VertexId v : order) {
    auto p = t.parent_of(v);
    if (!p) continue;
    auto& pc = out.at(*p);
    const auto& vc = out.at(v);
    pc.nu += vc.nu;
    pc.mu2 += vc.mu2;
    if (fs) *pc.phi += *vc.phi;
  }

  const auto& rc = out.at(t.root);
  const std::uint64_t n = rc.nu, m2 = rc.mu2;
  const std::optional<std::uint64_t> F = rc.phi;
  for (auto& [v, c] : out) {
    c.total_n = n;
    c.total_2m = m2;
    c.total_F = F;
  }

  if (mode == CertMode::nonorientable) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto p = t.parent_of(*it);
      auto& c = out.at(*it);
      if (!p) {
        c.eta = 0;
      } else {
        c.eta = static_cast<std::uint8_t>(*out.at(*p).eta ^ (s->sign(*it, *p) < 0 ? 1 : 0));
      }
    }
  }
  return out;
}

namespace {

struct Construction {
  CertificateAssignment a;
  std::int64_t eg = 0;
};

Construction construct(const Graph& g, const EmbeddingScheme& s, std::int64_t target_eg) {
  validate_scheme(g, s);
  if (g.size() == 0) {
    throw ProverError(ProverErrorKind::no_edges,
                      "a graph without edges has no cellular certificates; use tree mode");
  }

  std::optional<OddNegativeCycle> twisted;
  if (!s.orientable_mode) {
    twisted = find_odd_negative_cycle(g, s);
    if (!twisted) {
      throw ProverError(ProverErrorKind::orientable_scheme_in_nonorientable_mode,
                        "the scheme has no odd-negative cycle, so it describes an orientable surface");
    }
  }

  FaceStructure fs = trace_faces_phi(g, s);
  Construction out;
  out.eg = euler_genus_unchecked(g, fs.face_count);
  CertificateAssignment& a = out.a;
  a.mode = s.orientable_mode ? CertMode::orientable : CertMode::nonorientable;
  a.target_eg = target_eg;
  a.edge_certs = assign_rotation_indices(g, s);
  assign_face_certificates(g, fs, a.edge_certs);
  if (!s.orientable_mode) {
    for (auto& [e, c] : a.edge_certs) c.sign = s.sign(e.lo, e.hi);
  }

  const RootedTree tree = twisted ? twisted->tree : bfs_tree(g, g.vertices().front());
  a.vertex_certs = build_tree_counters(g, tree, &fs, &s);
  if (twisted) a.vertex_certs.at(twisted->root).er = twisted->partner;
  return out;
}

}  // namespace

CertificateAssignment build_certificates(const Graph& g, const EmbeddingScheme& s,
                                         std::int64_t target_eg) {
  return construct(g, s, target_eg).a;
}

CertificateAssignment prove(const Graph& g, const EmbeddingScheme& s, std::int64_t target_eg) {
  Construction c = construct(g, s, target_eg);
  if (c.eg > target_eg) {
    throw ProverError(ProverErrorKind::genus_exceeds_target,
                      "the scheme's faces give Euler genus " + std::to_string(c.eg) +
                          ", above the target " + std::to_string(target_eg));
  }
  self_check(g, c.a, {target_eg, s.orientable_mode, false});
  return std::move(c.a);
}

CertificateAssignment prove_tree(const Graph& g, std::int64_t target_eg) {
  if (!g.is_tree()) {
    throw ProverError(ProverErrorKind::not_a_tree,
                      "tree mode needs m = n - 1, got n = " + std::to_string(g.order()) +
                          ", m = " + std::to_string(g.size()));
  }
  CertificateAssignment a;
  a.mode = CertMode::tree;
  a.target_eg = target_eg;
  a.vertex_certs = build_tree_counters(g, bfs_tree(g, g.vertices().front()), nullptr, nullptr);
  self_check(g, a, {target_eg, true, false});
  return a;
}

CertificateAssignment pack(const Graph& g, const CertificateAssignment& a) {
  if (a.packed()) return a;
  const auto order = degeneracy_order(g).order;
  std::map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  CertificateAssignment out = a;
  out.edge_certs.clear();
  std::map<VertexId, std::vector<EdgeCertificate>> stores;
  for (VertexId v : g.vertices()) stores[v];
  for (const auto& [e, c] : a.edge_certs) {
    VertexId later = position.at(e.lo) > position.at(e.hi) ? e.lo : e.hi;
    stores[later].push_back(c);
  }
  out.packing = std::move(stores);
  return out;
}

CertificateAssignment unpack(const CertificateAssignment& a) {
  if (!a.packed()) return a;
  CertificateAssignment out = a;
  out.packing.reset();
  for (const auto& [v, store] : *a.packing) {
    for (const auto& c : store) out.edge_certs.emplace(c.edge(), c);
  }
  return out;
}

}  // namespace surfcert
