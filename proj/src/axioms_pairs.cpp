#include "axioms_internal.hpp"

#include <set>

namespace succession {

using namespace detail;

namespace {

// Universal pair conditions quantified over one agent j and two distinct states.
CheckResult pair_scan(const Community& c, Condition condition, const CheckOptions& options) {
  if (auto hinted = apply_hints(c, condition, options)) return *hinted;
  CheckResult r = start(condition, options);
  const std::size_t n = c.agent_count();
  const std::size_t states = c.state_count();

  const auto visit = [&](std::size_t j, StateId x, StateId y) {
    ++r.tuples_scanned;
    const TupleVerdict v = pair_verdict(c, condition, j, x, y);
    if (!v.hypothesis) return false;
    ++r.samples_examined;
    if (!v.conclusion) {
      r.holds = false;
      r.witness = agent_pair_witness(c, "j", j, x, y);
      return true;
    }
    return false;
  };

  if (options.mode.kind == CheckMode::Kind::Exhaustive) {
    require_budget(options, static_cast<double>(n) * static_cast<double>(states) * static_cast<double>(states),
                   condition);
    for (std::size_t j = 0; j < n; ++j) {
      for (StateId x = 0; x < states; ++x) {
        for (StateId y = 0; y < states; ++y) {
          if (x != y && visit(j, x, y)) {
            finish(r);
            return r;
          }
        }
      }
    }
  } else if (states > 1) {
    std::mt19937_64 rng(options.mode.seed);
    for (std::size_t k = 0; k < options.mode.samples; ++k) {
      const StateId x = uniform_index(rng, states);
      StateId y = uniform_index(rng, states - 1);
      if (y >= x) ++y;
      for (std::size_t j = 0; j < n; ++j) {
        if (visit(j, x, y)) {
          finish(r);
          return r;
        }
      }
    }
  }
  finish(r);
  return r;
}

// Idiosyncratic interest and preference: for each agent, the first pair (x, y) in scan order that moves
// only that agent's utility of the given role.
CheckResult idiosyncratic(const Community& c, Condition condition, const CheckOptions& options) {
  CheckResult r = start(condition, options);
  r.exhaustive = true;
  r.seed.reset();
  note_inexact_matching(c, r);
  const Role role = condition == Condition::IdiosyncraticInterest ? Role::Interest : Role::Preference;
  for (std::size_t i = 0; i < c.agent_count(); ++i) {
    std::vector<std::pair<std::size_t, Role>> keys;
    for (std::size_t g = 0; g < c.agent_count(); ++g) {
      if (g != i) keys.emplace_back(g, role);
    }
    const Grouping groups = group_by(c, keys);
    std::optional<Witness> found;
    for (StateId x = 0; x < c.state_count() && !found; ++x) {
      for (StateId y : groups.members[groups.group_of[x]]) {
        ++r.tuples_scanned;
        if (c.strict(i, role, x, y)) {
          found = agent_pair_witness(c, "i", i, x, y);
          break;
        }
      }
    }
    if (!found) {
      r.holds = false;
      r.witness = Witness{};
      r.witness.agents.emplace_back("i", i);
      r.witness.note = role == Role::Interest
                           ? "no pair moves this agent's interest while every other interest is unchanged"
                           : "no pair moves this agent's preference while every other agent is indifferent";
      r.evidence.clear();
      break;
    }
    ++r.samples_examined;
    r.evidence.push_back(std::move(*found));
  }
  finish(r);
  r.vacuous = false;
  return r;
}

}  // namespace

CheckResult check_based_on_interests(const Community& c, const CheckOptions& options) {
  return pair_scan(c, Condition::BasedOnInterests, options);
}

CheckResult check_nonpaternalism(const Community& c, const CheckOptions& options) {
  return pair_scan(c, Condition::Nonpaternalism, options);
}

CheckResult check_nonmalevolence(const Community& c, const CheckOptions& options) {
  return pair_scan(c, Condition::Nonmalevolence, options);
}

CheckResult check_idiosyncratic_interest(const Community& c, const CheckOptions& options) {
  return idiosyncratic(c, Condition::IdiosyncraticInterest, options);
}

CheckResult check_idiosyncratic_preference(const Community& c, const CheckOptions& options) {
  return idiosyncratic(c, Condition::IdiosyncraticPreference, options);
}

CheckResult check_unambiguous_improvement(const Community& c, const CheckOptions& options) {
  CheckResult r = start(Condition::UnambiguousImprovement, options);
  r.exhaustive = true;
  r.seed.reset();
  Witness probe;
  for (StateId x = 0; x < c.state_count(); ++x) {
    for (StateId y = 0; y < c.state_count(); ++y) {
      ++r.tuples_scanned;
      bool all = true;
      for (std::size_t i = 0; i < c.agent_count() && all; ++i) all = c.V(i, x, y) && c.P(i, x, y);
      if (all) {
        Witness w;
        w.states = {named(c, "x", x), named(c, "y", y)};
        r.evidence.push_back(std::move(w));
        r.samples_examined = 1;
        return r;
      }
    }
  }
  r.holds = false;
  r.witness.note = "no pair raises every agent's interest and preference";
  return r;
}

// Enumerates interest-level profiles through representative states: for each
// agent, the first state (by id) at each distinct interest level, agent 1 slowest.
CheckResult check_product_structure(const Community& c, const CheckOptions& options) {
  CheckResult r = start(Condition::ProductStructure, options);
  note_inexact_matching(c, r);
  const std::size_t n = c.agent_count();

  std::vector<std::vector<StateId>> reps(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(c.level_count(i, Role::Interest), false);
    for (StateId s = 0; s < c.state_count(); ++s) {
      const auto l = c.level(i, Role::Interest, s);
      if (!seen[l]) {
        seen[l] = true;
        reps[i].push_back(s);
      }
    }
  }
  std::set<std::vector<std::uint32_t>> realized;
  for (StateId s = 0; s < c.state_count(); ++s) {
    std::vector<std::uint32_t> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = c.level(i, Role::Interest, s);
    realized.insert(std::move(key));
  }

  double total = 1;
  for (const auto& rep : reps) total *= static_cast<double>(rep.size());

  std::vector<std::size_t> pick(n, 0);
  const auto test_profile = [&]() {
    ++r.tuples_scanned;
    ++r.samples_examined;
    std::vector<std::uint32_t> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = c.level(i, Role::Interest, reps[i][pick[i]]);
    if (realized.count(key)) return false;
    r.holds = false;
    for (std::size_t i = 0; i < n; ++i) r.witness.states.push_back(named(c, "x_" + std::to_string(i + 1), reps[i][pick[i]]));
    r.witness.note = "no state matches every agent's interest in its target state";
    return true;
  };

  const bool enumerate = options.mode.kind == CheckMode::Kind::Exhaustive ||
                         total <= static_cast<double>(options.mode.samples);
  if (options.mode.kind == CheckMode::Kind::Exhaustive) require_budget(options, total, r.condition);
  if (enumerate) {
    r.exhaustive = c.exact();
    while (true) {
      if (test_profile()) break;
      std::size_t pos = n;
      while (pos > 0 && pick[pos - 1] + 1 == reps[pos - 1].size()) pick[--pos] = 0;
      if (pos == 0) break;
      ++pick[pos - 1];
    }
  } else {
    std::mt19937_64 rng(options.mode.seed);
    for (std::size_t k = 0; k < options.mode.samples; ++k) {
      for (std::size_t i = 0; i < n; ++i) pick[i] = uniform_index(rng, reps[i].size());
      if (test_profile()) break;
    }
  }
  if (r.holds) r.notes.push_back(std::to_string(r.samples_examined) + " interest profiles realized");
  finish(r);
  return r;
}

}  // namespace succession
