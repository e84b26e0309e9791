#include "succession/relations.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace succession;
using fixtures::st;

namespace {

// Direct reading of the liberal-succession definition: try every subset, keep the
// smallest (then lexicographically smallest) one that qualifies.
std::optional<Coalition> brute_liberal(const Community& c, StateId x, StateId y, bool permissive) {
  const std::size_t n = c.agent_count();
  if (pareto_superior(c, x, y).holds) {
    Coalition all;
    for (std::size_t k = 0; k < n; ++k) all.members.push_back(k);
    return all;
  }
  std::optional<Coalition> best;
  for (AgentMask m = 0; m < (AgentMask{1} << n); ++m) {
    const Coalition j = Coalition::from_mask(m);
    bool ok = std::ranges::all_of(j.members, [&](auto a) { return c.R(a, x, y); }) &&
              std::ranges::any_of(j.members, [&](auto a) { return c.P(a, x, y); });
    for (std::size_t k = 0; ok && k < n; ++k) {
      if (j.contains(k)) continue;
      ok = permissive ? !c.V(k, y, x) : c.W(k, x, y);
    }
    if (!ok) continue;
    if (!best || j.members.size() < best->members.size() ||
        (j.members.size() == best->members.size() && j.members < best->members)) {
      best = j;
    }
  }
  return best;
}

Community random_community(std::mt19937_64& rng, std::size_t n) {
  static const char* coords[] = {"x1", "x2", "-x1", "-x2", "x1 + x2", "x1 - x2", "min(x1, x2)", "max(x1, 2 - x2)", "1"};
  std::vector<std::pair<std::string, std::string>> vp;
  for (std::size_t k = 0; k < n; ++k) vp.emplace_back(coords[rng() % 9], coords[rng() % 9]);
  return fixtures::make({fixtures::axis({"0", "1", "2"}), fixtures::axis({"0", "1", "2"})}, vp);
}

}  // namespace

TEST_CASE("coalition order is by size then lexicographic") {
  const auto order = coalition_order(3);
  std::vector<std::string> text;
  for (auto m : order) text.push_back(to_string(Coalition::from_mask(m)));
  CHECK(text == std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
  CHECK(coalition_order(4)[5] == 0b0011);
  CHECK(coalition_order(4)[7] == 0b1001);
  CHECK(coalition_order(0).size() == 1);
  CHECK_THROWS_AS(coalition_order(21), BudgetExceeded);
}

TEST_CASE("degenerate four-agent community") {
  const Community c = fixtures::degenerate();
  for (StateId x = 0; x < c.state_count(); ++x) {
    for (StateId y = 0; y < c.state_count(); ++y) {
      CHECK_FALSE(pareto_superior(c, x, y).holds);
      CHECK(liberal_successor(c, x, y).holds == (x != y));
    }
  }
  const State one{{Rational(1)}}, zero{{Rational(0)}};
  auto w = liberal_successor(c, one, zero);
  CHECK(to_string(w.coalition) == "{1,3}");
  CHECK(w.strict_agent == 0u);
  CHECK(to_string(liberal_successor(c, zero, one).coalition) == "{2,4}");
  CHECK(to_string(liberal_successor_permissive(c, one, zero).coalition) == "{1,3}");

  const auto report = coincidence_report(c);
  CHECK(report.pairs_examined == 20);
  CHECK(report.pareto_count == 0);
  CHECK(report.liberal_count == 20);
  CHECK(report.divergences.size() == 20);
}

TEST_CASE("min-utility community relations") {
  const Community c = fixtures::min_utility();
  auto p = pareto_superior(c, st({2, 2, 2}), st({1, 2, 2}));
  CHECK(p.holds);
  CHECK(p.strict_agent == 0u);
  auto l = liberal_successor(c, st({2, 2, 2}), st({1, 2, 2}));
  CHECK(l.holds);
  CHECK(to_string(l.coalition) == "{1,2,3}");
  CHECK(liberal_successor_permissive(c, st({2, 2, 2}), st({1, 2, 2})).holds);
  // Interest of agent 1 rises, but nobody's preference moves.
  CHECK(c.V(0, c.grid().id_of(st({2, 0, 0})), c.grid().id_of(st({1, 0, 0}))));
  CHECK_FALSE(liberal_successor(c, st({2, 0, 0}), st({1, 0, 0})).holds);
  CHECK_FALSE(pareto_superior(c, st({2, 2, 2}), st({2, 2, 2})).holds);
  CHECK_FALSE(liberal_successor(c, st({3, 3, 3}), st({3, 3, 3})).holds);

  const auto report = coincidence_report(c);
  CHECK(report.coincide());
  CHECK(report.pairs_examined == 125 * 124);
  CHECK(report.pareto_count == report.liberal_count);
}

TEST_CASE("single agent: liberal reduces to Pareto") {
  const Community c = fixtures::make({fixtures::axis({"0", "1", "2", "3"})}, {{"x1", "x1"}});
  CHECK(coincidence_report(c).coincide());
}

TEST_CASE("liberal scan agrees with subset enumeration on random communities") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Community c = random_community(rng, 1 + trial % 4);
    for (StateId x = 0; x < c.state_count(); ++x) {
      for (StateId y = 0; y < c.state_count(); ++y) {
        const auto lib = liberal_successor(c, x, y);
        const auto perm = liberal_successor_permissive(c, x, y);
        const auto expect = brute_liberal(c, x, y, false);
        REQUIRE(lib.holds == expect.has_value());
        REQUIRE(perm.holds == brute_liberal(c, x, y, true).has_value());
        if (lib.holds) {
          CHECK(lib.coalition == *expect);
          CHECK(lib.coalition.contains(*lib.strict_agent));
          CHECK(c.P(*lib.strict_agent, x, y));
        }
        // Pareto implies liberal implies permissive; both are irreflexive.
        if (pareto_superior(c, x, y).holds) CHECK(lib.holds);
        if (lib.holds) CHECK(perm.holds);
        CHECK(lib.holds == perm.holds);  // interest relations are connected
        if (x == y) CHECK_FALSE(perm.holds);
      }
    }
    CHECK(coincidence_report(c) == coincidence_report_serial(c));
  }
}

TEST_CASE("budget guards") {
  const Community c = fixtures::min_utility();
  CHECK_THROWS_AS(coincidence_report(c, RelationBudget{20, 1000}), BudgetExceeded);
  CHECK_THROWS_AS(coincidence_report(c, RelationBudget{2, 1'000'000}), BudgetExceeded);
  std::vector<std::pair<std::string, std::string>> many(21, {"x1", "x1"});
  const Community big = fixtures::make({fixtures::axis({"0", "1"})}, many);
  CHECK_THROWS_AS(liberal_successor(big, StateId{0}, StateId{1}), BudgetExceeded);
}
