#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/prover.hpp"

using namespace surfcert;

TEST_CASE("bundles round-trip, logical and packed") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.name);
    CertificateAssignment a =
        f.tree_mode ? prove_tree(f.graph) : prove(f.graph, f.scheme, f.phi_genus);
    CHECK(parse_bundle(format_bundle(a)) == a);
    if (!f.tree_mode) {
      CertificateAssignment p = pack(f.graph, a);
      CHECK(parse_bundle(format_bundle(p)) == p);
    }
  }
}

TEST_CASE("malformed bundles are reported") {
  CHECK_THROWS_AS(parse_bundle("certs sideways 0 1 0\n"), FormatError);
  CHECK_THROWS_AS(parse_bundle("certs orientable 0 2 0\nvc 1 root=1\n"), FormatError);

  const Fixture& c4 = fixture("C4");
  std::string text = format_bundle(prove(c4.graph, c4.scheme, 0));
  text.replace(text.find("certs orientable 0 4 4"), 22, "certs orientable 0 5 4");
  CHECK_THROWS_AS(parse_bundle(text), FormatError);
}

TEST_CASE("modes parse by name") {
  for (auto m : {CertMode::orientable, CertMode::nonorientable, CertMode::tree}) {
    CHECK(parse_cert_mode(to_string(m)) == m);
  }
}
