#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace succession;
using fixtures::st;

TEST_CASE("lexicographic enumeration of the product") {
  const StateGrid g({fixtures::axis({"0", "1"}), fixtures::axis({"0", "1"})});
  const auto states = enumerate_states(g);
  REQUIRE(states.size() == 4);
  CHECK(states[0] == st({0, 0}));
  CHECK(states[1] == st({0, 1}));
  CHECK(states[2] == st({1, 0}));
  CHECK(states[3] == st({1, 1}));
  CHECK(enumerate_states(StateGrid({fixtures::axis({"5"})})).size() == 1);
  const auto a4 = fixtures::axis({"0", "1", "2", "3"});
  const StateGrid cube({a4, a4, a4});
  CHECK(cube.size() == 64);
  for (StateId id = 0; id < cube.size(); ++id) CHECK(cube.id_of(cube.state(id)) == id);
  CHECK_FALSE(cube.find(st({0, 0, 4})).has_value());
  CHECK_THROWS_AS(cube.id_of(st({0, 0})), std::out_of_range);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(StateGrid({}), std::invalid_argument);
  CHECK_THROWS_AS(StateGrid({RationalVector{}}), std::invalid_argument);
  CHECK_THROWS_AS(StateGrid({fixtures::axis({"1", "1"})}), std::invalid_argument);
  CHECK_THROWS_AS(StateGrid({fixtures::axis({"2", "1"})}), std::invalid_argument);
}

TEST_CASE("relation values on the min-utility community") {
  const Community c = fixtures::min_utility();
  CHECK(relation(c, 0, Role::Interest, RelationKind::Weak, st({2, 2, 2}), st({1, 2, 2})));
  CHECK(relation(c, 0, Role::Preference, RelationKind::Strict, st({2, 2, 2}), st({1, 2, 2})));
  CHECK_FALSE(relation(c, 0, Role::Preference, RelationKind::Strict, st({1, 2, 2}), st({2, 2, 2})));
  CHECK(relation(c, 1, Role::Preference, RelationKind::Equiv, st({2, 2, 2}), st({1, 2, 2})));
  CHECK(relation(c, 2, Role::Interest, RelationKind::Equiv, st({2, 2, 2}), st({1, 2, 2})));
  CHECK(c.utility(0, Role::Preference, c.grid().id_of(st({7, 3, 3}))) == 3);
}

TEST_CASE("evaluation failures name agent and state") {
  try {
    fixtures::make({fixtures::axis({"0", "1"})}, {{"x1", "1/x1"}});
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.agent() == 0);
    CHECK(std::string(e.what()).find("(0)") != std::string::npos);
  }
}

TEST_CASE("community validation") {
  const StateGrid g({fixtures::axis({"0", "1"})});
  CHECK_THROWS_AS(Community(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(Community(g, {{2, parse_expr("x1", 1), parse_expr("x1", 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Community(g, {{1, parse_expr("x1", 1), parse_expr("x2", 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(Community(g, {{1, parse_expr("x1", 1), parse_expr("x1", 1)}}, Rational(-1)), std::invalid_argument);
}

TEST_CASE("order properties of induced relations") {
  for (const Rational eps : {Rational(0), Rational(1, 4)}) {
    const Community c = fixtures::make({fixtures::axis({"0", "1/4", "1/2", "1", "2"}), fixtures::axis({"0", "1", "3"})},
                                       {{"x1 - x2/2", "min(x1, x2)"}, {"x2*x2", "max(x1 - x2, 0)"}}, eps);
    const std::size_t n = c.state_count();
    for (std::size_t a = 0; a < c.agent_count(); ++a) {
      for (Role role : {Role::Interest, Role::Preference}) {
        for (StateId x = 0; x < n; ++x) {
          for (StateId y = 0; y < n; ++y) {
            const bool wxy = c.weak(a, role, x, y), wyx = c.weak(a, role, y, x);
            CHECK((wxy || wyx));
            CHECK_FALSE((c.strict(a, role, x, y) && c.equiv(a, role, x, y)));
            if (c.strict(a, role, x, y)) CHECK(wxy);
            if (c.equiv(a, role, x, y)) CHECK((wxy && wyx));
            if (eps == 0) {
              CHECK(c.strict(a, role, x, y) == (wxy && !wyx));
              CHECK(c.equiv(a, role, x, y) == (wxy && wyx));
              for (StateId z = 0; z < n; ++z) {
                if (wxy && c.weak(a, role, y, z)) CHECK(c.weak(a, role, x, z));
              }
            }
          }
        }
      }
    }
  }
}
