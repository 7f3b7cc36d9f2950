#include "doctest.h"
#include "helpers.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/fixtures.hpp"
#include "surfcert/oracle.hpp"

using namespace surfcert;

namespace {

Graph petersen() {
  return testutil::graph({1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                         {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8},
                          {4, 9}, {5, 10}, {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

}  // namespace

TEST_CASE("orientable minimum genus") {
  auto k4 = min_genus_orientable(complete_graph(4));
  CHECK(k4.min_eg == 0);
  CHECK(k4.systems_searched == 16);

  auto k5 = min_genus_orientable(complete_graph(5));
  CHECK(k5.min_eg == 2);
  CHECK(k5.systems_searched == 7776);

  auto k33 = min_genus_orientable(complete_bipartite_graph(3, 3));
  CHECK(k33.min_eg == 2);
  CHECK(k33.systems_searched == 64);

  auto c6 = min_genus_orientable(cycle_graph(6));
  CHECK(c6.min_eg == 0);
  CHECK(c6.systems_searched == 1);

  auto p = min_genus_orientable(petersen());
  CHECK(p.min_eg == 2);
  CHECK(p.systems_searched == 1024);

  CHECK(min_genus_orientable(cycle_graph(3)).min_eg == 0);
}

TEST_CASE("witnesses realise the reported genus") {
  for (const Graph& g : {complete_graph(5), complete_bipartite_graph(3, 3), petersen()}) {
    auto r = min_genus_orientable(g);
    CHECK(euler_genus(g, trace_faces_doubled(g, r.witness).face_count) == r.min_eg);
    auto nr = min_genus_nonorientable(g);
    CHECK_FALSE(is_orientable_scheme(g, nr.witness));
    CHECK(euler_genus(g, trace_faces_doubled(g, nr.witness).face_count) == nr.min_eg);
  }
}

TEST_CASE("non-orientable minimum genus") {
  CHECK(min_genus_nonorientable(complete_graph(4)).min_eg == 1);
  CHECK(min_genus_nonorientable(complete_graph(5)).min_eg == 1);
  CHECK(min_genus_nonorientable(complete_bipartite_graph(3, 3)).min_eg == 1);
  CHECK(min_genus_nonorientable(petersen()).min_eg == 1);

  Graph c3 = cycle_graph(3);
  auto r = min_genus_nonorientable(c3);
  CHECK(r.min_eg == 1);
  CHECK(trace_faces_doubled(c3, r.witness).face_count == 1);

  CHECK_THROWS_AS(min_genus_nonorientable(path_graph(4)), std::invalid_argument);
}

TEST_CASE("no rotation system of K5 has more than five faces") {
  auto r = min_genus_orientable(complete_graph(5));
  CHECK(2 + 10 - 5 - r.min_eg == 5);
}

TEST_CASE("budget and counting helpers") {
  CHECK(rotation_system_count(complete_graph(5)) == 7776);
  CHECK(rotation_system_count(complete_graph(4)) == 16);
  CHECK(sign_class_count(complete_graph(4)) == 8);
  CHECK(euler_lower_bound(complete_graph(5)) == 1);
  CHECK(euler_lower_bound(complete_graph(7)) == 2);

  OracleBudget tiny;
  tiny.max_rotation_systems = 100;
  CHECK_THROWS_AS(min_genus_orientable(complete_graph(5), tiny), BudgetExceeded);
  try {
    min_genus_orientable(complete_graph(5), tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 7776);
  }
}

TEST_CASE("embeddability") {
  CHECK_FALSE(is_embeddable(complete_graph(5), 0, true));
  CHECK(is_embeddable(complete_graph(5), 2, true));
  CHECK(is_embeddable(complete_graph(5), 1, false));
  CHECK_FALSE(is_embeddable(complete_bipartite_graph(3, 3), 0, true));
  CHECK_FALSE(is_embeddable(cycle_graph(3), 0, false));
  CHECK(is_embeddable(path_graph(5), 0, true));
  CHECK(is_embeddable(complete_graph(7), 2, true));
  CHECK_FALSE(is_embeddable(complete_graph(7), 1, true));
}
