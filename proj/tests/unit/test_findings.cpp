#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/harness.hpp"
#include "surfcert/oracle.hpp"
#include "surfcert/prover.hpp"

using namespace surfcert;

// Known gaps of the local rules. These pin the current behaviour so that a
// change in either direction is noticed.

TEST_CASE("the twisted triangle passes at non-orientable genus 0") {
  const Fixture& f = fixture("C3-twisted");
  CHECK_FALSE(is_embeddable(f.graph, 0, false));
  CertificateAssignment a = prove(f.graph, f.scheme, 0);
  CHECK(run_verification(f.graph, a, {0, false, false}).all_accepted);
  CHECK(run_verification(f.graph, pack(f.graph, a), {0, false, true}).all_accepted);
}

TEST_CASE("all-negative torus K7 passes at non-orientable genus 2") {
  Graph k7 = complete_graph(7);
  EmbeddingScheme s = k7_torus_scheme();
  s.orientable_mode = false;
  for (const Edge& e : k7.edges()) s.negative_edges.insert(e);
  CHECK(trace_faces_phi(k7, s).face_count == 14);
  // Franklin: K7 does not embed in the Klein bottle, the only surface of
  // non-orientable Euler genus 2. The oracle cannot enumerate this instance.
  CertificateAssignment a = prove(k7, s, 2);
  CHECK(run_verification(k7, a, {2, false, false}).all_accepted);
}
