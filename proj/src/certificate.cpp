#include "surfcert/certificate.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "surfcert/errors.hpp"
#include "text_util.hpp"

namespace surfcert {

const char* to_string(CertMode mode) noexcept {
  switch (mode) {
    case CertMode::orientable: return "orientable";
    case CertMode::nonorientable: return "nonorientable";
    case CertMode::tree: return "tree";
  }
  return "?";
}

CertMode parse_cert_mode(std::string_view text) {
  if (text == "orientable") return CertMode::orientable;
  if (text == "nonorientable") return CertMode::nonorientable;
  if (text == "tree") return CertMode::tree;
  throw std::invalid_argument("unknown certificate mode '" + std::string(text) + "'");
}

namespace {

template <class T>
void put_opt(std::ostream& os, const char* key, const std::optional<T>& v) {
  os << ' ' << key << '=';
  if (v) {
    os << +*v;
  } else {
    os << '-';
  }
}

void put_opt(std::ostream& os, const char* key, const std::optional<VertexId>& v) {
  os << ' ' << key << '=';
  if (v) {
    os << *v;
  } else {
    os << '-';
  }
}

void put_edge_cert(std::ostream& os, const EdgeCertificate& c) {
  os << "ec " << c.u << ' ' << c.v << " iu=" << c.iu << " iv=" << c.iv << " ru=" << c.ru.at << ','
     << c.ru.toward << " fu=" << c.fu << " rv=" << c.rv.at << ',' << c.rv.toward << " fv=" << c.fv;
  if (c.sign) os << " sign=" << (*c.sign < 0 ? '-' : '+');
  os << '\n';
}

class BundleReader {
 public:
  explicit BundleReader(std::size_t lineno) : lineno_(lineno) {}

  [[noreturn]] void fail(const std::string& what) const { throw FormatError(what, lineno_); }

  std::uint64_t number(std::string_view tok) const {
    auto v = detail::parse_u64(tok);
    if (!v) fail("expected a number, got '" + std::string(tok) + "'");
    return *v;
  }

  VertexId id(std::string_view tok) const {
    std::uint64_t v = number(tok);
    if (v == 0) fail("identifiers are positive");
    return VertexId(v);
  }

  HalfEdge half_edge(std::string_view tok) const {
    auto comma = tok.find(',');
    if (comma == std::string_view::npos) fail("expected '<id>,<id>', got '" + std::string(tok) + "'");
    return {id(tok.substr(0, comma)), id(tok.substr(comma + 1))};
  }

  // Splits `key=value` tokens, checking the keys appear exactly in `keys`
  // order. Keys listed after `optional_from` may be missing.
  std::vector<std::string_view> fields(const std::vector<std::string_view>& tokens,
                                       std::size_t first,
                                       const std::vector<std::string_view>& keys,
                                       std::size_t optional_from) const {
    std::vector<std::string_view> values;
    std::size_t k = 0;
    for (std::size_t i = first; i < tokens.size(); ++i, ++k) {
      if (k >= keys.size()) fail("unexpected field '" + std::string(tokens[i]) + "'");
      auto eq = tokens[i].find('=');
      if (eq == std::string_view::npos || tokens[i].substr(0, eq) != keys[k]) {
        fail("expected field '" + std::string(keys[k]) + "='");
      }
      values.push_back(tokens[i].substr(eq + 1));
    }
    if (k < optional_from) fail("missing field '" + std::string(keys[k]) + "='");
    return values;
  }

 private:
  std::size_t lineno_;
};

}  // namespace

std::string format_bundle(const CertificateAssignment& a) {
  std::map<Edge, EdgeCertificate> certs = a.edge_certs;
  if (a.packing) {
    for (const auto& [v, store] : *a.packing) {
      for (const auto& c : store) certs.emplace(c.edge(), c);
    }
  }
  std::ostringstream os;
  os << "certs " << to_string(a.mode) << ' ' << a.target_eg << ' ' << a.vertex_certs.size() << ' '
     << certs.size() << '\n';
  for (const auto& [v, c] : a.vertex_certs) {
    os << "vc " << c.own_id << " root=" << c.root << " depth=" << c.depth;
    put_opt(os, "parent", c.parent);
    os << " n=" << c.total_n << " nu=" << c.nu << " m2=" << c.total_2m << " mu2=" << c.mu2;
    put_opt(os, "F", c.total_F);
    put_opt(os, "phi", c.phi);
    put_opt(os, "eta", c.eta);
    put_opt(os, "er", c.er);
    os << '\n';
  }
  for (const auto& [e, c] : certs) put_edge_cert(os, c);
  if (a.packing) {
    for (const auto& [v, store] : *a.packing) {
      os << "store " << v << ':';
      for (const auto& c : store) os << ' ' << c.edge();
      os << '\n';
    }
  }
  return os.str();
}

CertificateAssignment parse_bundle(std::string_view text) {
  CertificateAssignment a;
  bool have_header = false;
  std::uint64_t want_n = 0, want_m = 0;
  std::map<VertexId, std::vector<Edge>> stores;
  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++lineno;
    auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    BundleReader in(lineno);
    if (!have_header) {
      if (tokens.size() != 5 || tokens[0] != "certs") {
        in.fail("expected 'certs <mode> <target_eg> <n> <m>'");
      }
      try {
        a.mode = parse_cert_mode(tokens[1]);
      } catch (const std::invalid_argument& e) {
        in.fail(e.what());
      }
      a.target_eg = static_cast<std::int64_t>(in.number(tokens[2]));
      want_n = in.number(tokens[3]);
      want_m = in.number(tokens[4]);
      have_header = true;
      continue;
    }

    if (tokens[0] == "vc") {
      if (tokens.size() < 2) in.fail("expected 'vc <id> ...'");
      VertexCertificate c;
      c.own_id = in.id(tokens[1]);
      c.mode = a.mode;
      auto f = in.fields(tokens, 2,
                         {"root", "depth", "parent", "n", "nu", "m2", "mu2", "F", "phi", "eta", "er"},
                         11);
      auto opt_number = [&](std::string_view v) -> std::optional<std::uint64_t> {
        if (v == "-") return std::nullopt;
        return in.number(v);
      };
      auto opt_id = [&](std::string_view v) -> std::optional<VertexId> {
        if (v == "-") return std::nullopt;
        return in.id(v);
      };
      c.root = in.id(f[0]);
      c.depth = in.number(f[1]);
      c.parent = opt_id(f[2]);
      c.total_n = in.number(f[3]);
      c.nu = in.number(f[4]);
      c.total_2m = in.number(f[5]);
      c.mu2 = in.number(f[6]);
      c.total_F = opt_number(f[7]);
      c.phi = opt_number(f[8]);
      if (auto eta = opt_number(f[9])) {
        if (*eta > 1) in.fail("eta is 0 or 1");
        c.eta = static_cast<std::uint8_t>(*eta);
      }
      c.er = opt_id(f[10]);
      if (!a.vertex_certs.emplace(c.own_id, c).second) {
        in.fail("second certificate for vertex " + std::to_string(c.own_id.value));
      }
    } else if (tokens[0] == "ec") {
      if (tokens.size() < 3) in.fail("expected 'ec <u> <v> ...'");
      EdgeCertificate c;
      c.u = in.id(tokens[1]);
      c.v = in.id(tokens[2]);
      auto f = in.fields(tokens, 3, {"iu", "iv", "ru", "fu", "rv", "fv", "sign"}, 6);
      c.iu = in.number(f[0]);
      c.iv = in.number(f[1]);
      c.ru = in.half_edge(f[2]);
      c.fu = in.number(f[3]);
      c.rv = in.half_edge(f[4]);
      c.fv = in.number(f[5]);
      if (f.size() > 6) {
        if (f[6] == "+") {
          c.sign = 1;
        } else if (f[6] == "-") {
          c.sign = -1;
        } else {
          in.fail("sign is '+' or '-'");
        }
      }
      if (!a.edge_certs.emplace(c.edge(), c).second) {
        in.fail("second certificate for edge " + std::to_string(c.u.value) + "-" +
                std::to_string(c.v.value));
      }
    } else if (tokens[0] == "store") {
      if (tokens.size() < 2 || tokens[1].back() != ':') in.fail("expected 'store <id>: <edges...>'");
      VertexId v = in.id(tokens[1].substr(0, tokens[1].size() - 1));
      if (stores.count(v)) in.fail("second store line for vertex " + std::to_string(v.value));
      auto& list = stores[v];
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto dash = tokens[i].find('-');
        if (dash == std::string_view::npos) in.fail("expected '<id>-<id>'");
        list.push_back(Edge::of(in.id(tokens[i].substr(0, dash)), in.id(tokens[i].substr(dash + 1))));
      }
    } else {
      in.fail("unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw FormatError("missing 'certs' header", lineno);
  if (a.vertex_certs.size() != want_n) {
    throw FormatError("header announces " + std::to_string(want_n) + " vertex certificates, found " +
                          std::to_string(a.vertex_certs.size()),
                      lineno);
  }
  if (a.edge_certs.size() != want_m) {
    throw FormatError("header announces " + std::to_string(want_m) + " edge certificates, found " +
                          std::to_string(a.edge_certs.size()),
                      lineno);
  }
  if (!stores.empty()) {
    std::map<VertexId, std::vector<EdgeCertificate>> packing;
    for (const auto& [v, list] : stores) {
      auto& out = packing[v];
      for (const Edge& e : list) {
        auto it = a.edge_certs.find(e);
        if (it == a.edge_certs.end()) {
          throw FormatError("store of vertex " + std::to_string(v.value) +
                                " names an edge without an 'ec' line",
                            lineno);
        }
        out.push_back(it->second);
      }
    }
    a.edge_certs.clear();
    a.packing = std::move(packing);
  }
  return a;
}

}  // namespace surfcert
