#include "surfcert/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/oracle.hpp"
#include "surfcert/prover.hpp"

namespace surfcert {

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }
bool coin(Rng& rng, unsigned percent) { return rng() % 100 < percent; }

std::uint64_t bit_length(std::uint64_t x) {
  std::uint64_t bits = 0;
  while (x) {
    ++bits;
    x >>= 1;
  }
  return bits;
}

std::optional<VertexCertificate> cert_at(const CertificateAssignment& a, VertexId v) {
  auto it = a.vertex_certs.find(v);
  if (it == a.vertex_certs.end()) return std::nullopt;
  return it->second;
}

}  // namespace

LocalView local_view(const Graph& g, const CertificateAssignment& a, bool packed, VertexId v) {
  LocalView view;
  view.own_id = v;
  view.own_cert = cert_at(a, v);
  for (VertexId w : g.neighbors(v)) {
    view.neighbors.push_back({w, cert_at(a, w)});
    if (!packed) {
      auto it = a.edge_certs.find(Edge::of(v, w));
      if (it != a.edge_certs.end()) view.incident_edge_certs.emplace(w, it->second);
    }
  }
  if (packed && a.packing) {
    auto own = a.packing->find(v);
    if (own != a.packing->end()) view.own_store = own->second;
    for (VertexId w : g.neighbors(v)) {
      auto it = a.packing->find(w);
      if (it != a.packing->end()) view.neighbor_stores.emplace(w, it->second);
    }
  }
  return view;
}

RunReport run_verification(const Graph& g, const CertificateAssignment& a,
                           const VerifierParams& params) {
  RunReport report;
  for (VertexId v : g.vertices()) {
    Verdict verdict = verify(params, local_view(g, a, params.packed, v));
    if (!verdict.accepted) {
      report.all_accepted = false;
      ++report.reject_rules[*verdict.rule];
    }
    report.verdicts.emplace(v, std::move(verdict));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Relabeling

std::map<VertexId, VertexId> relabeling(const Graph& g, std::uint64_t seed) {
  const std::uint64_t n = g.order();
  std::uint64_t range = n;
  if (n < 2'642'245) range = n * n * n;  // below that n^3 fits in 64 bits
  Rng rng(seed);
  std::set<std::uint64_t> used;
  std::map<VertexId, VertexId> map;
  for (VertexId v : g.vertices()) {
    std::uint64_t x;
    do {
      x = 1 + below(rng, range);
    } while (!used.insert(x).second);
    map.emplace(v, VertexId(x));
  }
  return map;
}

Graph relabel_graph(const Graph& g, const std::map<VertexId, VertexId>& map) {
  std::vector<VertexId> vertices;
  for (VertexId v : g.vertices()) vertices.push_back(map.at(v));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::of(map.at(e.lo), map.at(e.hi)));
  std::sort(vertices.begin(), vertices.end());
  return Graph::from_edges(std::move(vertices), edges);
}

CertificateAssignment relabel_assignment(const CertificateAssignment& a,
                                         const std::map<VertexId, VertexId>& map) {
  auto id = [&](VertexId v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  };
  auto half = [&](const HalfEdge& h) { return HalfEdge{id(h.at), id(h.toward)}; };
  auto edge_cert = [&](EdgeCertificate c) {
    c.u = id(c.u);
    c.v = id(c.v);
    c.ru = half(c.ru);
    c.rv = half(c.rv);
    return c;
  };

  CertificateAssignment out;
  out.mode = a.mode;
  out.target_eg = a.target_eg;
  for (auto [v, c] : a.vertex_certs) {
    c.own_id = id(c.own_id);
    c.root = id(c.root);
    if (c.parent) c.parent = id(*c.parent);
    if (c.er) c.er = id(*c.er);
    out.vertex_certs.emplace(id(v), c);
  }
  for (const auto& [e, c] : a.edge_certs) {
    out.edge_certs.emplace(Edge::of(id(e.lo), id(e.hi)), edge_cert(c));
  }
  if (a.packing) {
    std::map<VertexId, std::vector<EdgeCertificate>> stores;
    for (const auto& [v, store] : *a.packing) {
      auto& s = stores[id(v)];
      for (const auto& c : store) s.push_back(edge_cert(c));
    }
    out.packing = std::move(stores);
  }
  return out;
}

std::pair<Graph, CertificateAssignment> relabel_ids(const Graph& g, const CertificateAssignment& a,
                                                    std::uint64_t seed) {
  auto map = relabeling(g, seed);
  return {relabel_graph(g, map), relabel_assignment(a, map)};
}

// ---------------------------------------------------------------------------
// Metering

namespace {

struct Widths {
  std::uint64_t id, counter, index;
};

Widths widths_for(const Graph& g) {
  const std::uint64_t two_m = 2 * g.size();
  return {std::max<std::uint64_t>(1, bit_length(g.max_id().value)),
          std::max<std::uint64_t>(1, bit_length(std::max<std::uint64_t>(two_m, g.order()))),
          std::max<std::uint64_t>(1, bit_length(g.max_degree() == 0 ? 0 : g.max_degree() - 1))};
}

struct Bits {
  std::uint64_t total = 0;
  std::uint64_t id_fields = 0;
};

Bits vertex_bits(const VertexCertificate& c, const Widths& w) {
  Bits b;
  b.total = w.id + 2 + w.id + w.counter;  // own id, mode, root, depth
  b.id_fields = 2;
  b.total += 1 + (c.parent ? w.id : 0);
  b.id_fields += c.parent ? 1 : 0;
  b.total += 4 * w.counter;  // n, nu, 2m, mu2
  b.total += 1 + (c.total_F ? w.counter : 0);
  b.total += 1 + (c.phi ? w.counter : 0);
  b.total += 1 + (c.eta ? 1 : 0);
  b.total += 1 + (c.er ? w.id : 0);
  b.id_fields += c.er ? 1 : 0;
  return b;
}

Bits edge_bits(const EdgeCertificate& c, const Widths& w) {
  Bits b;
  b.total = 6 * w.id + 2 * w.index + 2 * w.counter + 1 + (c.sign ? 1 : 0);
  b.id_fields = 6;
  return b;
}

}  // namespace

SizeReport meter_sizes(const CertificateAssignment& a, const Graph& g, const VerifierParams& p) {
  const CertificateAssignment packed = a.packed() ? a : pack(g, a);
  const Widths w = widths_for(g);
  SizeReport r;
  r.n = g.order();
  r.target_eg = p.target_eg;
  for (VertexId v : g.vertices()) {
    Bits b;
    if (auto c = cert_at(packed, v)) b = vertex_bits(*c, w);
    auto store = packed.packing->find(v);
    if (store != packed.packing->end()) {
      for (const auto& c : store->second) {
        Bits e = edge_bits(c, w);
        b.total += e.total;
        b.id_fields += e.id_fields;
      }
    }
    r.bits[v] = b.total;
    if (b.total > r.max_bits || (b.total == r.max_bits && b.id_fields > r.id_fields)) {
      r.max_bits = b.total;
      r.id_fields = b.id_fields;
    }
  }
  return r;
}

std::vector<MeterRow> meter_cycle_family(std::size_t max_n) {
  std::vector<MeterRow> rows;
  for (std::size_t n = 8; n <= max_n; n *= 2) {
    Graph g = cycle_graph(n);
    VerifierParams p{0, true, true};
    CertificateAssignment a = pack(g, prove(g, ascending_scheme(g), 0));
    SizeReport r = meter_sizes(a, g, p);
    rows.push_back({n, r.max_bits, r.id_fields});
  }
  return rows;
}

bool log_growth_ok(const std::vector<MeterRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].max_bits > rows[i - 1].max_bits + 2 * rows[i].id_fields + 4) return false;
  }
  return true;
}

std::string format_meter_report(const std::vector<MeterRow>& rows, std::uint64_t seed) {
  std::ostringstream os;
  os << "report meter seed=" << seed << " trials=" << rows.size() << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << "cycle n=" << rows[i].n << " max_bits=" << rows[i].max_bits
       << " id_fields=" << rows[i].id_fields;
    if (i > 0) {
      os << " growth=" << static_cast<std::int64_t>(rows[i].max_bits) -
                              static_cast<std::int64_t>(rows[i - 1].max_bits)
         << " allowed=" << 2 * rows[i].id_fields + 4;
    }
    os << '\n';
  }
  os << "RESULT " << (log_growth_ok(rows) ? "pass" : "fail") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Adversaries

const char* to_string(StrategyKind kind) noexcept {
  switch (kind) {
    case StrategyKind::random_bits: return "random-bits";
    case StrategyKind::honest_mutate: return "honest-mutate";
    case StrategyKind::wrong_instance_graft: return "wrong-instance-graft";
    case StrategyKind::stale_honest: return "stale-honest";
    case StrategyKind::fake_F: return "fake-F";
    case StrategyKind::fake_n: return "fake-n";
    case StrategyKind::fake_root: return "fake-root";
    case StrategyKind::sign_strip: return "sign-strip";
    case StrategyKind::eta_forgery: return "eta-forgery";
    case StrategyKind::fake_er: return "fake-er";
    case StrategyKind::phi_collision: return "phi-collision";
  }
  return "?";
}

StrategyKind parse_strategy(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(StrategyKind::phi_collision); ++k) {
    auto kind = static_cast<StrategyKind>(k);
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::vector<AdversaryStrategy> default_battery(bool orientable, std::uint64_t seed,
                                               std::size_t honest_mutate_trials) {
  std::vector<AdversaryStrategy> out = {
      {StrategyKind::random_bits, seed, 1, 0},
      {StrategyKind::honest_mutate, seed, 3, honest_mutate_trials},
      {StrategyKind::wrong_instance_graft, seed, 1, 100},
      {StrategyKind::stale_honest, seed, 1, 1},
      {StrategyKind::fake_F, seed, 1, 0},
      {StrategyKind::fake_n, seed, 1, 0},
      {StrategyKind::fake_root, seed, 1, 0},
  };
  if (!orientable) {
    out.push_back({StrategyKind::sign_strip, seed, 1, 0});
    out.push_back({StrategyKind::eta_forgery, seed, 1, 0});
    out.push_back({StrategyKind::fake_er, seed, 1, 0});
    out.push_back({StrategyKind::phi_collision, seed, 1, 200});
  }
  return out;
}

namespace {

// Honest certificates for some scheme of `g` of the requested kind, proved at
// the genus that scheme's faces give.
struct HonestSource {
  CertificateAssignment a;
  std::int64_t eg = 0;
  std::string origin;
};

std::optional<HonestSource> prove_at_own_genus(const Graph& g, const EmbeddingScheme& s,
                                               std::string origin) {
  try {
    FaceStructure fs = trace_faces_phi(g, s);
    if (!fs.indices_feasible) return std::nullopt;
    std::int64_t eg = euler_genus_unchecked(g, fs.face_count);
    return HonestSource{prove(g, s, eg), eg, std::move(origin)};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<HonestSource> honest_source(const Graph& g, bool orientable) {
  for (const Fixture& f : fixtures()) {
    if (f.graph == g && !f.tree_mode && f.scheme.orientable_mode == orientable) {
      if (auto h = prove_at_own_genus(g, f.scheme, "fixture " + f.name)) return h;
    }
  }
  if (!orientable) {
    // Negating every edge of an orientable scheme gives a non-orientable one
    // whenever the graph has an odd cycle.
    for (const Fixture& f : fixtures()) {
      if (f.graph == g && !f.tree_mode && f.scheme.orientable_mode) {
        EmbeddingScheme s = f.scheme;
        s.orientable_mode = false;
        for (const Edge& e : g.edges()) s.negative_edges.insert(e);
        if (auto h = prove_at_own_genus(g, s, "fixture " + f.name + " with every edge negative")) {
          return h;
        }
      }
    }
  }
  try {
    if (orientable) {
      return prove_at_own_genus(g, min_genus_orientable(g).witness, "oracle witness");
    }
    auto s = best_phi_switching(g, min_genus_nonorientable(g).witness);
    if (s) return prove_at_own_genus(g, *s, "oracle witness");
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

// Everything a forging strategy may need, built once per fuzz run.
struct Arena {
  const Graph& g;
  const VerifierParams& p;
  std::optional<HonestSource> honest;
  std::vector<VertexId> ids;
  VertexId fresh;
};

VertexId random_vertex(const Arena& ar, Rng& rng) { return ar.ids[below(rng, ar.ids.size())]; }

VertexId random_id(const Arena& ar, Rng& rng) {
  if (coin(rng, 85)) return random_vertex(ar, rng);
  return VertexId(1 + below(rng, ar.fresh.value + 2));
}

HalfEdge random_half_edge(const Arena& ar, Rng& rng) {
  const auto& edges = ar.g.edges();
  const Edge& e = edges[below(rng, edges.size())];
  return coin(rng, 50) ? HalfEdge{e.lo, e.hi} : HalfEdge{e.hi, e.lo};
}

CertMode claimed_mode(const Arena& ar, Rng& rng) {
  if (coin(rng, 85)) return ar.p.orientable ? CertMode::orientable : CertMode::nonorientable;
  return static_cast<CertMode>(below(rng, 3));
}

CertificateAssignment random_bits(const Arena& ar, Rng& rng) {
  const Graph& g = ar.g;
  const std::uint64_t n = g.order(), m2 = 2 * g.size();
  CertificateAssignment a;
  a.mode = ar.p.orientable ? CertMode::orientable : CertMode::nonorientable;
  a.target_eg = ar.p.target_eg;
  const VertexId root = random_vertex(ar, rng);
  const CertMode mode = claimed_mode(ar, rng);
  for (VertexId v : g.vertices()) {
    VertexCertificate c;
    c.own_id = coin(rng, 95) ? v : random_id(ar, rng);
    c.mode = coin(rng, 90) ? mode : claimed_mode(ar, rng);
    c.root = coin(rng, 85) ? root : random_id(ar, rng);
    c.depth = below(rng, n + 1);
    if (coin(rng, 85)) {
      const auto& nbrs = g.neighbors(v);
      c.parent = coin(rng, 85) ? nbrs[below(rng, nbrs.size())] : random_id(ar, rng);
    }
    c.total_n = below(rng, 2 * n + 2);
    c.nu = below(rng, n + 2);
    c.total_2m = below(rng, 2 * m2 + 2);
    c.mu2 = below(rng, m2 + 2);
    if (coin(rng, 90)) c.total_F = below(rng, m2 + 2);
    if (coin(rng, 90)) c.phi = below(rng, m2 + 2);
    if (coin(rng, ar.p.orientable ? 10 : 90)) c.eta = static_cast<std::uint8_t>(below(rng, 2));
    if (coin(rng, 20)) c.er = random_id(ar, rng);
    a.vertex_certs.emplace(v, c);
  }
  std::vector<EdgeCertificate> certs;
  for (const Edge& e : g.edges()) {
    EdgeCertificate c;
    c.u = coin(rng, 95) ? e.lo : random_id(ar, rng);
    c.v = coin(rng, 95) ? e.hi : random_id(ar, rng);
    if (coin(rng, 20)) std::swap(c.u, c.v);
    c.iu = below(rng, g.degree(e.lo) + 1);
    c.iv = below(rng, g.degree(e.hi) + 1);
    c.ru = random_half_edge(ar, rng);
    c.fu = below(rng, m2 + 1);
    c.rv = random_half_edge(ar, rng);
    c.fv = below(rng, m2 + 1);
    if (coin(rng, ar.p.orientable ? 10 : 90)) c.sign = coin(rng, 50) ? 1 : -1;
    certs.push_back(c);
    a.edge_certs.emplace(e, c);
  }
  if (ar.p.packed) {
    std::map<VertexId, std::vector<EdgeCertificate>> stores;
    for (VertexId v : g.vertices()) stores[v];
    for (const auto& [e, c] : a.edge_certs) {
      const unsigned where = static_cast<unsigned>(below(rng, 10));
      if (where < 4) stores[e.lo].push_back(c);
      if (where >= 4 && where < 8) stores[e.hi].push_back(c);
      if (where == 8) {
        stores[e.lo].push_back(c);
        stores[e.hi].push_back(c);
      }
    }
    a.edge_certs.clear();
    a.packing = std::move(stores);
  }
  return a;
}

std::uint64_t nudge(std::uint64_t x, Rng& rng, std::uint64_t scale) {
  switch (below(rng, 3)) {
    case 0: return x + 1;
    case 1: return x == 0 ? 1 : x - 1;
    default: return below(rng, scale + 2);
  }
}

std::vector<EdgeCertificate*> all_edge_certs(CertificateAssignment& a) {
  std::vector<EdgeCertificate*> out;
  for (auto& [e, c] : a.edge_certs) out.push_back(&c);
  if (a.packing) {
    for (auto& [v, store] : *a.packing) {
      for (auto& c : store) out.push_back(&c);
    }
  }
  return out;
}

void mutate_once(const Arena& ar, CertificateAssignment& a, Rng& rng) {
  const std::uint64_t scale = 2 * ar.g.size() + ar.g.order();
  auto edges = all_edge_certs(a);
  const bool vertex_field = edges.empty() || coin(rng, 50);
  if (vertex_field) {
    auto it = a.vertex_certs.begin();
    std::advance(it, static_cast<long>(below(rng, a.vertex_certs.size())));
    VertexCertificate& c = it->second;
    switch (below(rng, 13)) {
      case 0: c.own_id = random_id(ar, rng); break;
      case 1: c.mode = static_cast<CertMode>(below(rng, 3)); break;
      case 2: c.root = random_id(ar, rng); break;
      case 3: c.depth = nudge(c.depth, rng, scale); break;
      case 4:
        if (c.parent && coin(rng, 30)) {
          c.parent.reset();
        } else {
          c.parent = random_id(ar, rng);
        }
        break;
      case 5: c.total_n = nudge(c.total_n, rng, scale); break;
      case 6: c.nu = nudge(c.nu, rng, scale); break;
      case 7: c.total_2m = nudge(c.total_2m, rng, scale); break;
      case 8: c.mu2 = nudge(c.mu2, rng, scale); break;
      case 9: c.total_F = c.total_F ? nudge(*c.total_F, rng, scale) : 1; break;
      case 10: c.phi = c.phi ? nudge(*c.phi, rng, scale) : 1; break;
      case 11:
        if (c.eta) {
          c.eta = static_cast<std::uint8_t>(*c.eta ^ 1);
        } else {
          c.eta = 1;
        }
        break;
      default:
        if (c.er && coin(rng, 30)) {
          c.er.reset();
        } else {
          c.er = random_id(ar, rng);
        }
        break;
    }
    return;
  }

  if (a.packing && coin(rng, 20)) {
    // Move, drop or duplicate a stored certificate.
    auto& stores = *a.packing;
    auto from = stores.begin();
    std::advance(from, static_cast<long>(below(rng, stores.size())));
    if (from->second.empty()) return;
    const std::size_t k = below(rng, from->second.size());
    EdgeCertificate c = from->second[k];
    const auto action = below(rng, 3);
    if (action != 2) from->second.erase(from->second.begin() + static_cast<long>(k));
    if (action != 1) {
      VertexId to = c.u == from->first ? c.v : c.u;
      auto dest = stores.find(to);
      if (dest != stores.end()) dest->second.push_back(c);
    }
    return;
  }

  EdgeCertificate& c = *edges[below(rng, edges.size())];
  switch (below(rng, 11)) {
    case 0: c.u = random_id(ar, rng); break;
    case 1: c.v = random_id(ar, rng); break;
    case 2: c.iu = nudge(c.iu, rng, ar.g.max_degree()); break;
    case 3: c.iv = nudge(c.iv, rng, ar.g.max_degree()); break;
    case 4: c.ru.at = random_id(ar, rng); break;
    case 5: c.ru.toward = random_id(ar, rng); break;
    case 6: c.fu = nudge(c.fu, rng, scale); break;
    case 7: c.rv = random_half_edge(ar, rng); break;
    case 8: c.fv = nudge(c.fv, rng, scale); break;
    case 9: c.rv.toward = random_id(ar, rng); break;
    default:
      if (!c.sign) {
        c.sign = coin(rng, 50) ? 1 : -1;
      } else if (coin(rng, 30)) {
        c.sign.reset();
      } else {
        c.sign = -*c.sign;
      }
      break;
  }
}

CertificateAssignment presented(const Arena& ar, const CertificateAssignment& a) {
  if (ar.p.packed && !a.packed()) return pack(ar.g, a);
  if (!ar.p.packed && a.packed()) return unpack(a);
  return a;
}

// Certificates for a Hamiltonian cycle through the instance's ids in random
// order: a planar (or, with one negative edge, projective) graph of the same
// order, so the ids are right but the edges are not.
std::optional<CertificateAssignment> graft(const Arena& ar, Rng& rng) {
  if (ar.ids.size() < 3) return std::nullopt;
  std::vector<VertexId> order = ar.ids;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    edges.push_back(Edge::of(order[i], order[(i + 1) % order.size()]));
  }
  Graph donor = Graph::from_edges(ar.ids, edges);
  if (donor == ar.g) return std::nullopt;
  EmbeddingScheme s = ascending_scheme(donor);
  if (!ar.p.orientable) {
    s.orientable_mode = false;
    s.negative_edges.insert(edges[below(rng, edges.size())]);
  }
  auto h = prove_at_own_genus(donor, s, "graft");
  if (!h) return std::nullopt;
  return h->a;
}

std::vector<VertexId> path_to_root(const CertificateAssignment& a, VertexId v) {
  std::vector<VertexId> path{v};
  std::set<VertexId> seen{v};
  while (true) {
    auto p = a.vertex_certs.at(path.back()).parent;
    if (!p || !seen.insert(*p).second || !a.vertex_certs.count(*p)) break;
    path.push_back(*p);
  }
  return path;
}

std::vector<CertificateAssignment> fake_F(const Arena& ar, Rng& rng) {
  const HonestSource& h = *ar.honest;
  const std::int64_t need = std::max<std::int64_t>(1, h.eg - ar.p.target_eg);
  std::vector<CertificateAssignment> out;
  {
    CertificateAssignment a = h.a;
    for (auto& [v, c] : a.vertex_certs) {
      *c.total_F += static_cast<std::uint64_t>(need);
      if (c.root == v) *c.phi += static_cast<std::uint64_t>(need);
    }
    out.push_back(a);
  }
  for (int variant = 0; variant < 24; ++variant) {
    CertificateAssignment a = h.a;
    for (std::int64_t k = 0; k < need; ++k) {
      HalfEdge fake = random_half_edge(ar, rng);
      EdgeCertificate& c = a.edge_certs.at(Edge::of(fake.at, fake.toward));
      if (c.u == fake.at) {
        c.ru = fake;
        c.fu = 0;
      } else {
        c.rv = fake;
        c.fv = 0;
      }
      for (VertexId x : path_to_root(a, fake.at)) *a.vertex_certs.at(x).phi += 1;
    }
    for (auto& [v, c] : a.vertex_certs) *c.total_F += static_cast<std::uint64_t>(need);
    out.push_back(a);
  }
  return out;
}

std::vector<CertificateAssignment> fake_n(const Arena& ar, Rng& rng) {
  const HonestSource& h = *ar.honest;
  const std::uint64_t need = static_cast<std::uint64_t>(std::max<std::int64_t>(1, h.eg - ar.p.target_eg));
  std::vector<CertificateAssignment> out;
  {
    CertificateAssignment a = h.a;
    for (auto& [v, c] : a.vertex_certs) {
      c.total_n += need;
      if (c.root == v) c.nu += need;
    }
    out.push_back(a);
  }
  for (int variant = 0; variant < 24; ++variant) {
    CertificateAssignment a = h.a;
    for (VertexId x : path_to_root(a, random_vertex(ar, rng))) a.vertex_certs.at(x).nu += need;
    for (auto& [v, c] : a.vertex_certs) c.total_n += need;
    out.push_back(a);
  }
  // Fewer edges instead of more vertices.
  CertificateAssignment a = h.a;
  for (auto& [v, c] : a.vertex_certs) {
    c.total_2m -= std::min(c.total_2m, 2 * need);
    if (c.root == v) c.mu2 = c.total_2m;
  }
  out.push_back(a);
  return out;
}

std::vector<CertificateAssignment> fake_root(const Arena& ar, Rng&) {
  const HonestSource& h = *ar.honest;
  std::vector<CertificateAssignment> out;
  std::vector<VertexId> claims = ar.ids;
  claims.push_back(ar.fresh);
  const VertexId actual = h.a.vertex_certs.begin()->second.root;
  for (VertexId r : claims) {
    if (r == actual) continue;
    CertificateAssignment a = h.a;
    for (auto& [v, c] : a.vertex_certs) c.root = r;
    out.push_back(a);
  }
  // Two roots: one vertex additionally claims to be a root of its own.
  for (VertexId x : ar.ids) {
    CertificateAssignment a = h.a;
    auto& c = a.vertex_certs.at(x);
    if (!c.parent) continue;
    c.root = x;
    c.parent.reset();
    c.depth = 0;
    out.push_back(a);
  }
  return out;
}

std::vector<CertificateAssignment> sign_strip(const Arena& ar, Rng&) {
  const HonestSource& h = *ar.honest;
  std::vector<CertificateAssignment> out;
  {
    CertificateAssignment a = h.a;
    for (auto& [e, c] : a.edge_certs) c.sign.reset();
    out.push_back(a);
  }
  {
    CertificateAssignment a = h.a;
    for (auto& [e, c] : a.edge_certs) c.sign = 1;
    out.push_back(a);
  }
  {
    CertificateAssignment a = h.a;
    for (auto& [e, c] : a.edge_certs) c.sign = 1;
    for (auto& [v, c] : a.vertex_certs) c.eta = 0;
    out.push_back(a);
  }
  {
    // Present the certificates as orientable ones.
    CertificateAssignment a = h.a;
    a.mode = CertMode::orientable;
    for (auto& [e, c] : a.edge_certs) c.sign.reset();
    for (auto& [v, c] : a.vertex_certs) {
      c.mode = CertMode::orientable;
      c.eta.reset();
      c.er.reset();
    }
    out.push_back(a);
  }
  (void)ar;
  return out;
}

std::vector<CertificateAssignment> eta_forgery(const Arena& ar, Rng&) {
  const HonestSource& h = *ar.honest;
  std::vector<CertificateAssignment> out;
  for (VertexId x : ar.ids) {
    CertificateAssignment a = h.a;
    a.vertex_certs.at(x).eta = static_cast<std::uint8_t>(*a.vertex_certs.at(x).eta ^ 1);
    out.push_back(a);

    // Flip a whole subtree, which is consistent except across x's parent edge.
    CertificateAssignment b = h.a;
    for (auto& [v, c] : b.vertex_certs) {
      auto path = path_to_root(b, v);
      if (std::find(path.begin(), path.end(), x) != path.end()) c.eta = static_cast<std::uint8_t>(*c.eta ^ 1);
    }
    out.push_back(b);

    // ...and then also flip that parent edge's sign.
    auto p = b.vertex_certs.at(x).parent;
    if (p) {
      auto& c = b.edge_certs.at(Edge::of(x, *p));
      c.sign = -c.sign.value_or(1);
      out.push_back(b);
    }
  }
  return out;
}

std::vector<CertificateAssignment> fake_er(const Arena& ar, Rng&) {
  const HonestSource& h = *ar.honest;
  std::vector<CertificateAssignment> out;
  VertexId root = h.a.vertex_certs.begin()->second.root;
  for (VertexId w : ar.g.neighbors(root)) {
    CertificateAssignment a = h.a;
    if (a.vertex_certs.at(root).er == w) continue;
    a.vertex_certs.at(root).er = w;
    out.push_back(a);
  }
  {
    CertificateAssignment a = h.a;
    a.vertex_certs.at(root).er.reset();
    out.push_back(a);
  }
  {
    CertificateAssignment a = h.a;
    a.vertex_certs.at(root).er = ar.fresh;
    out.push_back(a);
  }
  return out;
}

}  // namespace

FuzzReport fuzz_soundness(const Graph& g, const VerifierParams& p,
                          const std::vector<AdversaryStrategy>& strategies, std::size_t trials,
                          const FuzzOptions& options) {
  bool embeddable = true;
  try {
    embeddable = is_embeddable(g, p.target_eg, p.orientable);
  } catch (const BudgetExceeded& e) {
    throw PreconditionError(std::string("cannot confirm the instance is false: ") + e.what());
  }
  if (embeddable) {
    throw PreconditionError("the instance embeds with Euler genus <= " +
                            std::to_string(p.target_eg) + "; soundness fuzzing needs a false instance");
  }

  Arena ar{g, p, honest_source(g, p.orientable), g.vertices(), VertexId(g.max_id().value + 1)};
  FuzzReport report;
  report.seed = strategies.empty() ? 0 : strategies.front().seed;
  report.trials = trials;
  for (const auto& rule : enumerate_rules()) report.rule_tally[rule.tag] = 0;

  for (const AdversaryStrategy& strategy : strategies) {
    StrategyOutcome outcome;
    outcome.kind = strategy.kind;
    Rng rng(strategy.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(strategy.kind) + 1);
    const std::size_t budget = strategy.trials ? strategy.trials : trials;

    auto submit = [&](const CertificateAssignment& forged) {
      const CertificateAssignment shown = presented(ar, forged);
      RunReport run = run_verification(g, shown, p);
      const std::size_t trial = outcome.trials++;
      for (const auto& [tag, count] : run.reject_rules) report.rule_tally[tag] += count;
      if (!run.all_accepted) {
        ++outcome.rejected;
        return;
      }
      ++outcome.violations;
      ++report.violations;
      if (options.artifact_dir.empty()) return;
      std::filesystem::create_directories(options.artifact_dir);
      auto path = options.artifact_dir / (options.label + "-" + to_string(strategy.kind) + "-" +
                                          std::to_string(trial) + ".txt");
      std::ofstream out(path);
      out << "# soundness violation: every vertex accepts a false instance\n"
          << "# instance " << options.label << " surface="
          << (p.orientable ? "orientable" : "nonorientable") << " target_eg=" << p.target_eg
          << " packed=" << (p.packed ? "yes" : "no") << '\n'
          << "# strategy " << to_string(strategy.kind) << " seed=" << strategy.seed
          << " trial=" << trial << '\n'
          << format_graph(g) << format_bundle(shown);
      report.artifacts.push_back(path);
    };

    const bool needs_honest = strategy.kind != StrategyKind::random_bits &&
                              strategy.kind != StrategyKind::wrong_instance_graft &&
                              strategy.kind != StrategyKind::phi_collision;
    const bool nonorientable_only = strategy.kind == StrategyKind::sign_strip ||
                                    strategy.kind == StrategyKind::eta_forgery ||
                                    strategy.kind == StrategyKind::fake_er ||
                                    strategy.kind == StrategyKind::phi_collision;
    if (needs_honest && !ar.honest) {
      outcome.skipped = "no honest certificates available for this graph";
      report.strategies.push_back(outcome);
      continue;
    }
    if (nonorientable_only && p.orientable) {
      outcome.skipped = "applies to non-orientable targets only";
      report.strategies.push_back(outcome);
      continue;
    }

    switch (strategy.kind) {
      case StrategyKind::random_bits:
        for (std::size_t t = 0; t < budget; ++t) submit(random_bits(ar, rng));
        break;
      case StrategyKind::honest_mutate: {
        const CertificateAssignment base = presented(ar, ar.honest->a);
        for (std::size_t t = 0; t < budget; ++t) {
          CertificateAssignment a = base;
          const std::size_t k = 1 + below(rng, std::max<std::size_t>(1, strategy.mutation_count));
          for (std::size_t i = 0; i < k; ++i) mutate_once(ar, a, rng);
          submit(a);
        }
        break;
      }
      case StrategyKind::wrong_instance_graft: {
        for (std::size_t t = 0; t < budget; ++t) {
          if (auto a = graft(ar, rng)) submit(*a);
        }
        if (outcome.trials == 0) outcome.skipped = "no donor graph differs from the instance";
        break;
      }
      case StrategyKind::stale_honest:
        for (std::size_t t = 0; t < budget; ++t) submit(ar.honest->a);
        break;
      case StrategyKind::phi_collision: {
        // Random rotations with mixed signs at some vertex of degree >= 3,
        // handed over with whatever certificates the construction yields.
        std::size_t attempts = 0;
        while (outcome.trials < budget && attempts < 50 * budget) {
          ++attempts;
          EmbeddingScheme s = ascending_scheme(g);
          s.orientable_mode = false;
          for (auto& [v, rot] : s.rotation) {
            for (std::size_t i = rot.size(); i > 1; --i) std::swap(rot[i - 1], rot[below(rng, i)]);
          }
          for (const Edge& e : g.edges()) {
            if (coin(rng, 50)) s.negative_edges.insert(e);
          }
          if (!find_odd_negative_cycle(g, s)) continue;
          try {
            submit(build_certificates(g, s, p.target_eg));
          } catch (const ProverError&) {
            // Infeasible f-indices: the construction has nothing to offer.
          }
        }
        if (outcome.trials == 0) outcome.skipped = "no sampled scheme admitted certificates";
        break;
      }
      default: {
        std::vector<CertificateAssignment> forged;
        switch (strategy.kind) {
          case StrategyKind::fake_F: forged = fake_F(ar, rng); break;
          case StrategyKind::fake_n: forged = fake_n(ar, rng); break;
          case StrategyKind::fake_root: forged = fake_root(ar, rng); break;
          case StrategyKind::sign_strip: forged = sign_strip(ar, rng); break;
          case StrategyKind::eta_forgery: forged = eta_forgery(ar, rng); break;
          case StrategyKind::fake_er: forged = fake_er(ar, rng); break;
          default: break;
        }
        for (std::size_t t = 0; t < forged.size() && (!strategy.trials || t < strategy.trials); ++t) {
          submit(forged[t]);
        }
        break;
      }
    }
    report.strategies.push_back(outcome);
  }
  return report;
}

std::string format_fuzz_report(const FuzzReport& r, const Graph& g, const VerifierParams& p) {
  std::ostringstream os;
  os << "report fuzz seed=" << r.seed << " trials=" << r.trials << '\n';
  os << "instance n=" << g.order() << " m=" << g.size()
     << " surface=" << (p.orientable ? "orientable" : "nonorientable")
     << " target_eg=" << p.target_eg << " packed=" << (p.packed ? "yes" : "no") << '\n';
  for (const auto& s : r.strategies) {
    os << "strategy " << to_string(s.kind);
    if (!s.skipped.empty()) {
      os << " skipped (" << s.skipped << ")\n";
      continue;
    }
    os << " trials=" << s.trials << " rejected=" << s.rejected << " violations=" << s.violations
       << '\n';
  }
  for (const auto& [tag, count] : r.rule_tally) os << "rule " << to_string(tag) << ' ' << count << '\n';
  for (const auto& path : r.artifacts) os << "artifact " << path.string() << '\n';
  os << "violations " << r.violations << '\n';
  os << "RESULT " << (r.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Suites

bool SuiteReport::passed() const noexcept {
  return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.passed; });
}

SuiteReport completeness_suite(std::uint64_t seed, std::size_t relabelings) {
  SuiteReport report;
  report.kind = "completeness";
  report.seed = seed;
  report.trials = relabelings;
  for (const Fixture& f : fixtures()) {
    SuiteCase sc;
    sc.name = f.name;
    try {
      VerifierParams p;
      CertificateAssignment a;
      if (f.tree_mode) {
        p = {1, false, false};
        a = prove_tree(f.graph, 1);
      } else {
        p = {f.phi_genus, f.scheme.orientable_mode, false};
        a = prove(f.graph, f.scheme, f.phi_genus);
      }
      std::size_t runs = 0;
      std::string failure;
      auto check = [&](const Graph& g, const CertificateAssignment& logical, const std::string& what) {
        VerifierParams lp = p, pp = p;
        pp.packed = true;
        RunReport l = run_verification(g, logical, lp);
        RunReport k = run_verification(g, pack(g, logical), pp);
        runs += 2;
        if (failure.empty() && !l.all_accepted) failure = what + " logical rejected";
        if (failure.empty() && !k.all_accepted) failure = what + " packed rejected";
      };
      check(f.graph, a, "original");
      for (std::size_t r = 0; r < relabelings; ++r) {
        auto [g2, a2] = relabel_ids(f.graph, a, seed * 1'000'003 + r);
        check(g2, a2, "relabeling " + std::to_string(r));
      }
      std::ostringstream os;
      os << (f.tree_mode ? "tree" : to_string(a.mode)) << " target_eg=" << p.target_eg
         << " F=" << f.phi_faces << " runs=" << runs;
      if (!failure.empty()) os << " (" << failure << ")";
      sc.passed = failure.empty();
      sc.detail = os.str();
    } catch (const std::exception& e) {
      sc.detail = std::string("prover failed: ") + e.what();
    }
    report.cases.push_back(std::move(sc));
  }
  return report;
}

SuiteReport soundness_suite(std::uint64_t seed, std::size_t random_trials,
                            std::size_t honest_mutate_trials,
                            const std::filesystem::path& artifact_dir) {
  struct Instance {
    std::string name;
    Graph g;
    VerifierParams p;
  };
  const std::vector<Instance> instances = {
      {"K5-orientable-g0", complete_graph(5), {0, true, false}},
      {"K3,3-orientable-g0", complete_bipartite_graph(3, 3), {0, true, false}},
      {"C3-nonorientable-g0", cycle_graph(3), {0, false, false}},
      {"K7-nonorientable-g1", complete_graph(7), {1, false, false}},
  };

  SuiteReport report;
  report.kind = "soundness";
  report.seed = seed;
  report.trials = random_trials;
  for (const auto& rule : enumerate_rules()) report.rule_tally[rule.tag] = 0;
  for (const Instance& inst : instances) {
    SuiteCase sc;
    sc.name = inst.name;
    try {
      FuzzOptions options{artifact_dir, inst.name};
      FuzzReport r = fuzz_soundness(inst.g, inst.p,
                                    default_battery(inst.p.orientable, seed, honest_mutate_trials),
                                    random_trials, options);
      for (const auto& [tag, count] : r.rule_tally) report.rule_tally[tag] += count;
      std::ostringstream os;
      std::size_t total = 0;
      for (const auto& s : r.strategies) total += s.trials;
      os << "trials=" << total << " violations=" << r.violations;
      for (const auto& s : r.strategies) {
        if (s.violations) os << ' ' << to_string(s.kind) << '=' << s.violations;
      }
      sc.passed = r.passed();
      sc.detail = os.str();
    } catch (const std::exception& e) {
      sc.detail = std::string("could not run: ") + e.what();
    }
    report.cases.push_back(std::move(sc));
  }
  return report;
}

std::string format_suite_report(const SuiteReport& r) {
  std::ostringstream os;
  os << "report " << r.kind << " seed=" << r.seed << " trials=" << r.trials << '\n';
  for (const auto& c : r.cases) {
    os << "case " << c.name << ' ' << (c.passed ? "pass" : "fail") << ' ' << c.detail << '\n';
  }
  if (r.kind == "soundness") {
    for (const auto& [tag, count] : r.rule_tally) {
      os << "rule " << to_string(tag) << ' ' << count << '\n';
    }
  }
  os << "RESULT " << (r.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace surfcert
