#include "surfcert/verifier.hpp"

#include <set>
#include <sstream>

namespace surfcert {

const char* to_string(RuleTag tag) noexcept {
  switch (tag) {
    case RuleTag::pack_missing: return "PACK_MISSING";
    case RuleTag::pack_conflict: return "PACK_CONFLICT";
    case RuleTag::pack_overflow: return "PACK_OVERFLOW";
    case RuleTag::r1_rotation: return "R1";
    case RuleTag::r2_face: return "R2";
    case RuleTag::r3_tree: return "R3";
    case RuleTag::r4_counters: return "R4";
    case RuleTag::r5_euler: return "R5";
    case RuleTag::r6_signs: return "R6";
    case RuleTag::r7_tree_mode: return "R7";
    case RuleTag::r8_mode: return "R8";
  }
  return "?";
}

const std::vector<RuleInfo>& enumerate_rules() {
  static const std::vector<RuleInfo> rules = {
      {RuleTag::pack_missing, "PACK_MISSING",
       "an incident edge has no certificate in the own store nor in the neighbour's store"},
      {RuleTag::pack_conflict, "PACK_CONFLICT", "two stored copies of an edge certificate differ"},
      {RuleTag::pack_overflow, "PACK_OVERFLOW",
       "the own store holds more edge certificates than the Heawood degeneracy bound"},
      {RuleTag::r1_rotation, "R1",
       "certificate ids match the actual ids and the v-indices form a permutation of 0..d(v)-1"},
      {RuleTag::r2_face, "R2",
       "consecutive half-edges of a face agree on the face root and f-indices count up from it"},
      {RuleTag::r3_tree, "R3", "common root id, parent is a neighbour, depth = parent depth + 1"},
      {RuleTag::r4_counters, "R4",
       "n, 2m and F agree with all neighbours and nu, mu2, phi are correct subtree sums"},
      {RuleTag::r5_euler, "R5", "Euler inequality 2 + m - n - F <= g"},
      {RuleTag::r6_signs, "R6",
       "edge signs present, eta is the parity of negative tree edges to the root, and the root's "
       "special edge closes an odd-negative cycle"},
      {RuleTag::r7_tree_mode, "R7", "tree mode: nu sums hold and every edge is a tree edge"},
      {RuleTag::r8_mode, "R8", "all vertices use one mode, allowed for the target surface, with "
                               "exactly the fields that mode uses"},
  };
  return rules;
}

namespace {

using Wide = unsigned __int128;

std::string str(VertexId v) { return std::to_string(v.value); }

std::string str(const HalfEdge& h) { return "(" + str(h.at) + "->" + str(h.toward) + ")"; }

// Fields of the edge certificate as seen from endpoint `a`.
struct Side {
  std::uint64_t index;
  HalfEdge root;
  std::uint64_t f;
};

Side side_of(const EdgeCertificate& c, VertexId a) {
  return a == c.u ? Side{c.iu, c.ru, c.fu} : Side{c.iv, c.rv, c.fv};
}

class Checker {
 public:
  Checker(const VerifierParams& params, const LocalView& view)
      : p_(params), view_(view), own_(*view.own_cert), d_(view.neighbors.size()) {}

  Verdict run() {
    const bool tree = own_.mode == CertMode::tree;
    if (auto v = check_ids(!tree)) return *v;
    if (!tree) {
      if (auto v = check_faces()) return *v;
    }
    if (auto v = check_tree()) return *v;
    if (tree) {
      if (auto v = check_tree_mode()) return *v;
    } else {
      if (auto v = check_counters()) return *v;
      if (auto v = check_euler()) return *v;
      if (own_.mode == CertMode::nonorientable) {
        if (auto v = check_signs()) return *v;
      }
    }
    if (auto v = check_mode()) return *v;
    return Verdict::accept();
  }

 private:
  using Maybe = std::optional<Verdict>;

  static Maybe fail(RuleTag tag, const std::string& why) { return Verdict::reject(tag, why); }

  const VertexCertificate& cert_of(const NeighborView& nb) const { return *nb.cert; }
  const EdgeCertificate& edge_to(VertexId u) const { return view_.incident_edge_certs.at(u); }

  int sign_to(VertexId u) const {
    if (own_.mode != CertMode::nonorientable) return 1;
    const auto& s = edge_to(u).sign;
    return s && *s < 0 ? -1 : 1;
  }

  Maybe check_ids(bool cellular) {
    if (own_.own_id != view_.own_id) {
      return fail(RuleTag::r1_rotation, "own certificate names vertex " + str(own_.own_id));
    }
    for (const auto& nb : view_.neighbors) {
      if (cert_of(nb).own_id != nb.id) {
        return fail(RuleTag::r1_rotation, "certificate of neighbour " + str(nb.id) + " names vertex " +
                                              str(cert_of(nb).own_id));
      }
    }
    if (!cellular) return std::nullopt;

    std::vector<bool> seen(d_, false);
    by_index_.assign(d_, VertexId{});
    for (const auto& nb : view_.neighbors) {
      auto it = view_.incident_edge_certs.find(nb.id);
      if (it == view_.incident_edge_certs.end()) {
        return fail(RuleTag::r1_rotation, "no certificate for the edge to " + str(nb.id));
      }
      const EdgeCertificate& c = it->second;
      if (!c.mentions(view_.own_id, nb.id)) {
        return fail(RuleTag::r1_rotation, "certificate of edge to " + str(nb.id) + " names " +
                                              str(c.u) + "-" + str(c.v));
      }
      std::uint64_t i = side_of(c, view_.own_id).index;
      if (i >= d_ || seen[i]) {
        return fail(RuleTag::r1_rotation, "v-indices are not a permutation of 0.." +
                                              std::to_string(d_ == 0 ? 0 : d_ - 1));
      }
      seen[i] = true;
      by_index_[i] = nb.id;
    }
    return std::nullopt;
  }

  Maybe check_faces() {
    const VertexId v = view_.own_id;
    for (std::size_t j = 0; j < d_; ++j) {
      VertexId u = by_index_[j];
      const int lambda = sign_to(u);
      VertexId w = by_index_[lambda > 0 ? (j + 1) % d_ : (j + d_ - 1) % d_];
      Side in = side_of(edge_to(u), u);   // half-edge at u towards v
      Side out = side_of(edge_to(w), v);  // its successor, at v towards w
      const HalfEdge succ{v, w};
      if (in.root != out.root) {
        return fail(RuleTag::r2_face, "half-edges " + str(HalfEdge{u, v}) + " and " + str(succ) +
                                          " disagree on the face root");
      }
      const bool ok = out.root == succ ? out.f == 0 : out.f == in.f + 1 && in.f + 1 != 0;
      if (!ok) {
        return fail(RuleTag::r2_face, "f-index of " + str(succ) + " does not follow " +
                                          str(HalfEdge{u, v}));
      }
    }
    return std::nullopt;
  }

  Maybe check_tree() {
    for (const auto& nb : view_.neighbors) {
      if (cert_of(nb).root != own_.root) {
        return fail(RuleTag::r3_tree, "neighbour " + str(nb.id) + " names a different root");
      }
    }
    if (own_.root == view_.own_id) {
      if (own_.depth != 0 || own_.parent) {
        return fail(RuleTag::r3_tree, "the root must have depth 0 and no parent");
      }
      return std::nullopt;
    }
    if (!own_.parent) return fail(RuleTag::r3_tree, "a non-root vertex needs a parent");
    const NeighborView* parent = neighbor(*own_.parent);
    if (!parent) return fail(RuleTag::r3_tree, "parent " + str(*own_.parent) + " is not a neighbour");
    if (Wide{cert_of(*parent).depth} + 1 != own_.depth) {
      return fail(RuleTag::r3_tree, "depth is not one more than the parent's");
    }
    return std::nullopt;
  }

  Maybe check_counters() {
    for (const auto& nb : view_.neighbors) {
      const auto& c = cert_of(nb);
      if (c.total_n != own_.total_n || c.total_2m != own_.total_2m || c.total_F != own_.total_F) {
        return fail(RuleTag::r4_counters, "global counts differ from neighbour " + str(nb.id));
      }
    }
    if (!own_.total_F || !own_.phi) {
      return fail(RuleTag::r4_counters, "cellular modes need F and phi");
    }
    Wide nu = 1, mu2 = d_, phi = 0;
    for (const auto& nb : view_.neighbors) {
      Side out = side_of(edge_to(nb.id), view_.own_id);
      if (out.root == HalfEdge{view_.own_id, nb.id} && out.f == 0) ++phi;
    }
    for (const auto* child : children()) {
      const auto& c = cert_of(*child);
      if (!c.phi) return fail(RuleTag::r4_counters, "child " + str(child->id) + " has no phi");
      nu += c.nu;
      mu2 += c.mu2;
      phi += *c.phi;
    }
    if (nu != own_.nu) return fail(RuleTag::r4_counters, "nu is not 1 + the children's nu");
    if (mu2 != own_.mu2) return fail(RuleTag::r4_counters, "mu2 is not d(v) + the children's mu2");
    if (phi != *own_.phi) {
      return fail(RuleTag::r4_counters, "phi is not the local face roots + the children's phi");
    }
    if (own_.root == view_.own_id &&
        (own_.nu != own_.total_n || own_.mu2 != own_.total_2m || *own_.phi != *own_.total_F)) {
      return fail(RuleTag::r4_counters, "root sums do not match the announced totals");
    }
    return std::nullopt;
  }

  Maybe check_euler() {
    if (own_.total_2m % 2 != 0) return fail(RuleTag::r5_euler, "2m is odd");
    // 2 + m - n - F <= g, rearranged to stay unsigned.
    const Wide lhs = Wide{2} + own_.total_2m / 2;
    const Wide rhs = Wide{own_.total_n} + *own_.total_F +
                     static_cast<std::uint64_t>(p_.target_eg < 0 ? 0 : p_.target_eg);
    if (p_.target_eg < 0 || lhs > rhs) {
      return fail(RuleTag::r5_euler, "2 + m - n - F exceeds the target Euler genus " +
                                         std::to_string(p_.target_eg));
    }
    return std::nullopt;
  }

  Maybe check_signs() {
    for (const auto& nb : view_.neighbors) {
      if (!edge_to(nb.id).sign) return fail(RuleTag::r6_signs, "edge to " + str(nb.id) + " has no sign");
    }
    if (!own_.eta || *own_.eta > 1) return fail(RuleTag::r6_signs, "eta missing");
    if (own_.root == view_.own_id) {
      if (*own_.eta != 0) return fail(RuleTag::r6_signs, "eta of the root is not 0");
      if (!own_.er) return fail(RuleTag::r6_signs, "the root names no special edge");
      const NeighborView* partner = neighbor(*own_.er);
      if (!partner) return fail(RuleTag::r6_signs, "special edge endpoint is not a neighbour");
      if (sign_to(partner->id) != -1) return fail(RuleTag::r6_signs, "special edge is not negative");
      const auto& pc = cert_of(*partner);
      if (pc.parent == view_.own_id) return fail(RuleTag::r6_signs, "special edge is a tree edge");
      if (pc.eta != std::uint8_t{0}) {
        return fail(RuleTag::r6_signs, "special edge endpoint has eta != 0");
      }
      return std::nullopt;
    }
    if (own_.er) return fail(RuleTag::r6_signs, "only the root names a special edge");
    const NeighborView* parent = neighbor(*own_.parent);
    const auto& peta = cert_of(*parent).eta;
    if (!peta || *peta > 1) return fail(RuleTag::r6_signs, "parent has no eta");
    const std::uint8_t want = *peta ^ (sign_to(parent->id) < 0 ? 1 : 0);
    if (*own_.eta != want) return fail(RuleTag::r6_signs, "eta does not follow the parent edge sign");
    return std::nullopt;
  }

  Maybe check_tree_mode() {
    for (const auto& nb : view_.neighbors) {
      if (cert_of(nb).total_n != own_.total_n) {
        return fail(RuleTag::r7_tree_mode, "n differs from neighbour " + str(nb.id));
      }
    }
    Wide nu = 1;
    std::set<VertexId> kids;
    for (const auto* child : children()) {
      nu += cert_of(*child).nu;
      kids.insert(child->id);
    }
    if (nu != own_.nu) return fail(RuleTag::r7_tree_mode, "nu is not 1 + the children's nu");
    if (own_.root == view_.own_id && own_.nu != own_.total_n) {
      return fail(RuleTag::r7_tree_mode, "root nu does not match n");
    }
    for (const auto& nb : view_.neighbors) {
      if (nb.id != own_.parent && !kids.count(nb.id)) {
        return fail(RuleTag::r7_tree_mode, "edge to " + str(nb.id) + " is not a tree edge");
      }
    }
    return std::nullopt;
  }

  Maybe check_mode() {
    for (const auto& nb : view_.neighbors) {
      if (cert_of(nb).mode != own_.mode) {
        return fail(RuleTag::r8_mode, "neighbour " + str(nb.id) + " uses another mode");
      }
    }
    if (own_.mode == CertMode::orientable && !p_.orientable) {
      return fail(RuleTag::r8_mode, "orientable certificates for a non-orientable target");
    }
    if (own_.mode == CertMode::nonorientable && p_.orientable) {
      return fail(RuleTag::r8_mode, "non-orientable certificates for an orientable target");
    }
    switch (own_.mode) {
      case CertMode::orientable:
        if (own_.eta || own_.er) return fail(RuleTag::r8_mode, "orientable mode carries no eta");
        for (const auto& [u, c] : view_.incident_edge_certs) {
          if (c.sign) return fail(RuleTag::r8_mode, "orientable mode carries no edge signs");
        }
        break;
      case CertMode::nonorientable:
        break;
      case CertMode::tree:
        if (own_.total_F || own_.phi || own_.eta || own_.er) {
          return fail(RuleTag::r8_mode, "tree mode carries only tree fields");
        }
        break;
    }
    return std::nullopt;
  }

  const NeighborView* neighbor(VertexId id) const {
    for (const auto& nb : view_.neighbors) {
      if (nb.id == id) return &nb;
    }
    return nullptr;
  }

  std::vector<const NeighborView*> children() const {
    std::vector<const NeighborView*> out;
    for (const auto& nb : view_.neighbors) {
      if (cert_of(nb).parent == view_.own_id) out.push_back(&nb);
    }
    return out;
  }

  const VerifierParams& p_;
  const LocalView& view_;
  const VertexCertificate& own_;
  const std::size_t d_;
  std::vector<VertexId> by_index_;
};

}  // namespace

UnpackResult unpack_local(const VerifierParams& params, const LocalView& view) {
  UnpackResult out{view, std::nullopt};
  out.view.incident_edge_certs.clear();
  const std::uint64_t bound =
      heawood_bound(static_cast<std::uint64_t>(params.target_eg < 0 ? 0 : params.target_eg));
  if (view.own_store.size() > bound) {
    out.rejection = Verdict::reject(RuleTag::pack_overflow,
                                    "stores " + std::to_string(view.own_store.size()) +
                                        " edge certificates, bound is " + std::to_string(bound));
    return out;
  }
  for (const auto& nb : view.neighbors) {
    std::optional<EdgeCertificate> found;
    auto take = [&](const std::vector<EdgeCertificate>& store) {
      for (const auto& c : store) {
        if (!c.mentions(view.own_id, nb.id)) continue;
        if (found && !(*found == c)) return false;
        found = c;
      }
      return true;
    };
    bool consistent = take(view.own_store);
    auto it = view.neighbor_stores.find(nb.id);
    if (consistent && it != view.neighbor_stores.end()) consistent = take(it->second);
    if (!consistent) {
      out.rejection = Verdict::reject(RuleTag::pack_conflict,
                                      "stored copies of the edge to " + str(nb.id) + " differ");
      return out;
    }
    if (!found) {
      out.rejection = Verdict::reject(RuleTag::pack_missing,
                                      "no stored certificate for the edge to " + str(nb.id));
      return out;
    }
    out.view.incident_edge_certs.emplace(nb.id, *found);
  }
  return out;
}

Verdict verify(const VerifierParams& params, const LocalView& view) {
  if (!view.own_cert) return Verdict::reject(RuleTag::r1_rotation, "no certificate");
  for (const auto& nb : view.neighbors) {
    if (!nb.cert) return Verdict::reject(RuleTag::r1_rotation, "neighbour " + str(nb.id) + " has no certificate");
  }
  if (view.own_cert->mode != CertMode::tree && params.packed) {
    UnpackResult unpacked = unpack_local(params, view);
    if (unpacked.rejection) return *unpacked.rejection;
    return Checker(params, unpacked.view).run();
  }
  return Checker(params, view).run();
}

}  // namespace surfcert
