#include "succession/axioms.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace succession;
using fixtures::st;

namespace {

Witness pair_witness(const char* agent_name, std::size_t agent, const State& x, const State& y) {
  Witness w;
  w.agents.emplace_back(agent_name, agent);
  w.states = {{"x", x}, {"y", y}};
  return w;
}

Witness cardinality_witness(std::size_t h, std::size_t i, std::size_t j, const State& wh, const State& xh,
                            const State& yh, const State& zh, const State& wi, const State& xi, const State& yi,
                            const State& zi) {
  Witness w;
  w.agents = {{"h", h}, {"i", i}, {"j", j}};
  w.states = {{"w_h", wh}, {"x_h", xh}, {"y_h", yh}, {"z_h", zh}, {"w_i", wi}, {"x_i", xi}, {"y_i", yi}, {"z_i", zi}};
  return w;
}

Witness separability_quadruple() {
  Witness w;
  w.agents = {{"i", 0}};
  w.coalition = Coalition{{0}};
  w.states = {{"w", st({1, 2, 2})}, {"x", st({2, 2, 2})}, {"y", st({1, 0, 0})}, {"z", st({2, 0, 0})}};
  return w;
}

}  // namespace

TEST_CASE("degenerate community: every hypothesis of the early axioms is empty") {
  const Community c = fixtures::degenerate();
  for (Condition cond : {Condition::BasedOnInterests, Condition::Nonpaternalism, Condition::Separability,
                         Condition::Nonmalevolence}) {
    const CheckResult r = run_check(c, cond);
    CAPTURE(condition_name(cond));
    CHECK(r.holds);
    CHECK(r.exhaustive);
  }
  CHECK(check_based_on_interests(c).vacuous);
  CHECK(check_based_on_interests(c).samples_examined == 0);
  CHECK(check_nonpaternalism(c).vacuous);
  CHECK(check_nonmalevolence(c).vacuous);
  // Separability's E-constraints force w=y and x=z, so it is met non-vacuously.
  CHECK_FALSE(check_separability(c).vacuous);

  for (Condition cond : {Condition::ProductStructure, Condition::IdiosyncraticInterest,
                         Condition::IdiosyncraticPreference, Condition::UnambiguousImprovement}) {
    const CheckResult r = run_check(c, cond);
    CAPTURE(condition_name(cond));
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.witness.empty());
    CHECK(reproduces_failure(c, r));
  }
  const CheckResult product = check_product_structure(c);
  REQUIRE(product.witness.states.size() == 4);
  CHECK(product.witness.states[0].second == State{{Rational(0)}});
  CHECK(product.witness.states[3].second == State{{Rational(1, 4)}});
  CHECK(check_idiosyncratic_interest(c).witness.agent("i") == 0u);
}

TEST_CASE("antagonistic pair: unambiguous improvement without nonmalevolence") {
  const Community c = fixtures::antagonistic();
  const CheckResult imp = check_unambiguous_improvement(c);
  CHECK(imp.holds);
  REQUIRE(imp.evidence.size() == 1);
  CHECK(*imp.evidence[0].state("x") == st({1, 1}));
  CHECK(*imp.evidence[0].state("y") == st({0, 0}));

  const CheckResult nm = check_nonmalevolence(c);
  CHECK_FALSE(nm.holds);
  CHECK(reproduces_failure(c, nm));
  CHECK(evaluate_tuple(c, Condition::Nonmalevolence, pair_witness("j", 1, st({1, 0}), st({0, 0}))).violation());

  const CheckResult np = check_nonpaternalism(c);
  CHECK_FALSE(np.holds);
  CHECK(np.witness.agent("j") == 0u);
  CHECK(*np.witness.state("x") == st({0, 1}));
  CHECK(*np.witness.state("y") == st({0, 0}));
  CHECK(evaluate_tuple(c, Condition::Nonpaternalism, pair_witness("j", 1, st({1, 0}), st({0, 0}))).violation());

  const SupportSet n1 = detect_support(c, 0);
  CHECK(n1.members == std::vector<std::size_t>{0, 1});
}

TEST_CASE("interests misassigned to preferences") {
  const Community c = fixtures::make({fixtures::axis({"0", "1"}), fixtures::axis({"0", "1"})},
                                     {{"x1", "x2"}, {"x2", "x1"}});
  const CheckResult r = check_based_on_interests(c);
  CHECK_FALSE(r.holds);
  CHECK(r.witness.agent("j") == 0u);
  CHECK(*r.witness.state("x") == st({0, 0}));
  CHECK(*r.witness.state("y") == st({1, 0}));
  CHECK(reproduces_failure(c, r));
}

TEST_CASE("min-utility community") {
  const Community c = fixtures::min_utility();

  SUBCASE("based on interests and nonpaternalism") {
    const Community small = fixtures::min_utility({"0", "1", "2", "3"});
    // Preference is flat in the own interest once another coordinate binds the minimum.
    const CheckResult r = check_based_on_interests(small);
    CHECK_FALSE(r.holds);
    CHECK(r.witness.agent("j") == 0u);
    CHECK(*r.witness.state("x") == st({0, 0, 0}));
    CHECK(*r.witness.state("y") == st({1, 0, 0}));
    CHECK(evaluate_tuple(c, Condition::BasedOnInterests, pair_witness("j", 0, st({3, 1, 1}), st({7, 1, 1})))
              .violation());
    CHECK_FALSE(check_based_on_interests(c).holds);
    CHECK(check_nonpaternalism(small).holds);
    CHECK(check_nonpaternalism(c).holds);
    CHECK(check_nonmalevolence(c).holds);
  }

  SUBCASE("separability fails") {
    const CheckResult r = check_separability(c);
    CHECK_FALSE(r.holds);
    CHECK(reproduces_failure(c, r));
    CHECK(r.witness.agent("i") == 0u);
    CHECK(to_string(*r.witness.coalition) == "{1}");
    CHECK(*r.witness.state("w") == st({0, 0, 0}));
    CHECK(*r.witness.state("x") == st({1, 0, 0}));
    CHECK(*r.witness.state("y") == st({0, 1, 1}));
    CHECK(*r.witness.state("z") == st({1, 1, 1}));
    CHECK(evaluate_tuple(c, Condition::Separability, separability_quadruple()).violation());

    CheckOptions hinted;
    hinted.hints.push_back({Condition::Separability, separability_quadruple()});
    const CheckResult h = check_separability(c, hinted);
    CHECK_FALSE(h.holds);
    CHECK(h.witness == separability_quadruple());
  }

  SUBCASE("existence conditions hold") {
    CHECK(check_product_structure(c).holds);
    const CheckResult eleven = check_idiosyncratic_interest(c);
    CHECK(eleven.holds);
    REQUIRE(eleven.evidence.size() == 3);
    CHECK(*eleven.evidence[0].state("x") == st({1, 0, 0}));
    CHECK(*eleven.evidence[0].state("y") == st({0, 0, 0}));
    const CheckResult twelve = check_idiosyncratic_preference(c);
    CHECK(twelve.holds);
    for (const auto& e : twelve.evidence) CHECK(satisfies_existential(c, Condition::IdiosyncraticPreference, e));
    Witness known = pair_witness("i", 0, st({2, 2, 2}), st({1, 2, 2}));
    CHECK(satisfies_existential(c, Condition::IdiosyncraticPreference, known));

    const CheckResult thirteen = check_unambiguous_improvement(c);
    CHECK(thirteen.holds);
    CHECK(*thirteen.evidence[0].state("x") == st({1, 1, 1}));
    CHECK(*thirteen.evidence[0].state("y") == st({0, 0, 0}));
    Witness w;
    w.states = {{"x", st({2, 2, 2})}, {"y", st({1, 1, 1})}};
    CHECK(satisfies_existential(c, Condition::UnambiguousImprovement, w));
  }

  SUBCASE("supports") {
    for (std::size_t i = 0; i < 3; ++i) CHECK(detect_support(c, i).members == std::vector<std::size_t>{0, 1, 2});
    CHECK(check_double_cancellation(c).vacuous);
    CHECK(two_factor_pairs(c).empty());
  }

  SUBCASE("interest cardinality fails") {
    const CheckResult r = check_interest_cardinality(c);
    CHECK_FALSE(r.holds);
    CHECK(reproduces_failure(c, r));
    // The states (3,2,2) and (2,2,2) violate the condition with w and x swapped
    // relative to the literal assignment, for h = 2, i = j = 1.
    const State hi = st({3, 2, 2}), lo = st({2, 2, 2});
    CHECK(evaluate_tuple(c, Condition::InterestCardinality,
                         cardinality_witness(1, 0, 0, lo, hi, hi, lo, lo, hi, hi, lo))
              .violation());
    for (std::size_t h = 0; h < 3; ++h)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          CHECK_FALSE(evaluate_tuple(c, Condition::InterestCardinality,
                                     cardinality_witness(h, i, j, hi, lo, lo, hi, hi, lo, lo, hi))
                          .violation());
        }
  }

  SUBCASE("preference cardinality fails") {
    const CheckResult r = check_preference_cardinality(c);
    CHECK_FALSE(r.holds);
    CHECK(reproduces_failure(c, r));
    // An agent's own preference cannot move alone: raising the binding coordinate
    // also raises the owner's preference of that coordinate.
    CHECK(detect_preference_support(c, 1).members == std::vector<std::size_t>{0, 2});
    const State h_lo = st({2, 3, 3}), h_hi = st({3, 3, 3}), i_lo = st({2, 3, 7}), i_hi = st({3, 3, 7});
    CHECK(evaluate_tuple(c, Condition::PreferenceCardinality,
                         cardinality_witness(1, 2, 0, h_lo, h_hi, h_hi, h_lo, i_lo, i_hi, i_hi, i_lo))
              .violation());
  }
}

TEST_CASE("additive communities satisfy the qualitative axioms") {
  const auto a3 = fixtures::axis({"0", "1", "2"});
  const Community c = fixtures::make({a3, a3, a3}, {{"x1", "2*x1 + x2"}, {"x2", "x1 + 3*x2 + x3"}, {"x3", "x3 + x2/2"}});
  for (Condition cond : {Condition::BasedOnInterests, Condition::Nonpaternalism, Condition::Separability,
                         Condition::DoubleCancellation, Condition::InterestCardinality, Condition::ProductStructure,
                         Condition::IdiosyncraticInterest, Condition::UnambiguousImprovement, Condition::Nonmalevolence}) {
    CAPTURE(condition_name(cond));
    CHECK(run_check(c, cond).holds);
  }
  // Agents 1 and 3 weigh only two interests each.
  CHECK_FALSE(check_double_cancellation(c).vacuous);
  // Keeping p2 and p3 fixed while moving p1 needs steps of 5/2 in x1, which this grid lacks.
  const CheckResult twelve = check_idiosyncratic_preference(c);
  CHECK_FALSE(twelve.holds);
  CHECK(twelve.witness.agent("i") == 0u);
}

TEST_CASE("single agent") {
  const Community c = fixtures::make({fixtures::axis({"0", "1", "2"})}, {{"x1", "x1"}});
  CHECK(check_nonpaternalism(c).holds);
  CHECK(check_double_cancellation(c).vacuous);
  const CheckResult z = check_interest_cardinality(c);
  CHECK(z.holds);
  CHECK(check_preference_cardinality(c).holds);
  CHECK(detect_support(c, 0).members == std::vector<std::size_t>{0});
}

TEST_CASE("budget and names") {
  const Community c = fixtures::min_utility();
  CheckOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(check_separability(c, tight), BudgetExceeded);
  CHECK_THROWS_AS(check_interest_cardinality(c, tight), BudgetExceeded);
  for (Condition cond : kAllConditions) CHECK(condition_from_name(condition_name(cond)) == cond);
  CHECK_FALSE(condition_from_name("nonsense").has_value());
}

namespace {

Community random_small(std::mt19937_64& rng) {
  static const char* interests[] = {"x1", "x2", "x1 + x2", "min(x1, x2)", "x1 - x2", "0", "2*x1 + x2"};
  static const char* prefs[] = {"x1", "x2", "x1 + x2", "min(x1, x2)", "max(x1, x2)", "x1*x2", "2*x1 - x2",
                                "x1 + 2*x2", "min(2*x1, x2 + 1)", "0", "-x1", "x1*x1 - x2",
                                "max(x1, 2*x2)", "x1*x2 + x1 + x2", "min(x1 + x2, 2)"};
  std::vector<std::pair<std::string, std::string>> vp;
  for (int a = 0; a < 2; ++a) {
    vp.emplace_back(interests[oracles::uniform(rng, 0, 6)], prefs[oracles::uniform(rng, 0, 14)]);
  }
  return fixtures::make({fixtures::axis({"0", "1", "2"}), fixtures::axis({"0", "1", "2"})}, vp);
}

}  // namespace

TEST_CASE("aggregated scans agree with definitional enumeration") {
  std::mt19937_64 rng(2024);
  int violations[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 60; ++trial) {
    const Community c = random_small(rng);
    const CheckResult sep = check_separability(c);
    const CheckResult dc = check_double_cancellation(c);
    const CheckResult z = check_interest_cardinality(c);
    const CheckResult cc = check_preference_cardinality(c);
    CHECK(sep.holds == !oracles::separability_violated(c));
    CHECK(dc.holds == !oracles::double_cancellation_violated(c));
    CHECK(z.holds == !oracles::cardinality_violated(c, true));
    CHECK(cc.holds == !oracles::cardinality_violated(c, false));
    const CheckResult* all[] = {&sep, &dc, &z, &cc};
    for (int k = 0; k < 4; ++k) {
      if (!all[k]->holds) {
        ++violations[k];
        CHECK(reproduces_failure(c, *all[k]));
      }
    }
    CHECK(check_separability_serial(c).witness == sep.witness);
    CHECK(check_separability_serial(c).samples_examined == sep.samples_examined);
    for (std::size_t i = 0; i < c.agent_count(); ++i) {
      std::vector<std::size_t> expect;
      for (std::size_t j = 0; j < c.agent_count(); ++j) {
        if (oracles::in_interest_support(c, i, j)) expect.push_back(j);
      }
      CHECK(detect_support(c, i).members == expect);
      expect.clear();
      for (std::size_t j = 0; j < c.agent_count(); ++j) {
        if (oracles::in_preference_support(c, i, j)) expect.push_back(j);
      }
      CHECK(detect_preference_support(c, i).members == expect);
    }
  }
  // The generator must exercise both verdicts.
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(violations[k] > 0);
    CHECK(violations[k] < 60);
  }
}

TEST_CASE("witnesses re-check and sampling never contradicts exhaustive success") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Community c = random_small(rng);
    for (Condition cond : kAllConditions) {
      const CheckResult ex = run_check(c, cond);
      CAPTURE(condition_name(cond));
      if (!ex.holds) {
        CHECK_FALSE(ex.witness.empty());
        CHECK(reproduces_failure(c, ex));
      }
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        CheckOptions opt;
        opt.mode = CheckMode::sampled(300, seed);
        const CheckResult s = run_check(c, cond, opt);
        if (ex.holds) CHECK(s.holds);
        if (!s.holds) CHECK(reproduces_failure(c, s));
        CHECK(s.holds == run_check(c, cond, opt).holds);
      }
    }
  }
}
