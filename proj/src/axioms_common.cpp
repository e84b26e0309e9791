#include "axioms_internal.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace succession {

namespace {

struct ConditionInfo {
  Condition condition;
  std::string_view name;
};

constexpr std::array<ConditionInfo, 11> kInfo{{
    {Condition::BasedOnInterests, "based-on-interests"},
    {Condition::Nonpaternalism, "nonpaternalism"},
    {Condition::Separability, "separability"},
    {Condition::ProductStructure, "product-structure"},
    {Condition::IdiosyncraticInterest, "idiosyncratic-interest"},
    {Condition::IdiosyncraticPreference, "idiosyncratic-preference"},
    {Condition::UnambiguousImprovement, "unambiguous-improvement"},
    {Condition::Nonmalevolence, "nonmalevolence"},
    {Condition::DoubleCancellation, "double-cancellation"},
    {Condition::InterestCardinality, "interest-cardinality"},
    {Condition::PreferenceCardinality, "preference-cardinality"},
}};

const ConditionInfo& info(Condition c) {
  for (const auto& i : kInfo) {
    if (i.condition == c) return i;
  }
  throw std::logic_error("unknown condition");
}

}  // namespace

std::string_view condition_name(Condition c) { return info(c).name; }

std::optional<Condition> condition_from_name(std::string_view name) {
  for (const auto& i : kInfo) {
    if (i.name == name) return i.condition;
  }
  return std::nullopt;
}

bool is_existential(Condition c) {
  return c == Condition::ProductStructure || c == Condition::IdiosyncraticInterest ||
         c == Condition::IdiosyncraticPreference || c == Condition::UnambiguousImprovement;
}

std::optional<std::size_t> Witness::agent(std::string_view name) const {
  for (const auto& [n, a] : agents) {
    if (n == name) return a;
  }
  return std::nullopt;
}

const State* Witness::state(std::string_view name) const {
  for (const auto& [n, s] : states) {
    if (n == name) return &s;
  }
  return nullptr;
}

namespace detail {

Grouping group_by(const Community& c, const std::vector<std::pair<std::size_t, Role>>& keys) {
  Grouping g;
  g.group_of.resize(c.state_count());
  std::map<std::vector<std::uint32_t>, std::size_t> ids;
  std::vector<std::uint32_t> key(keys.size());
  for (StateId s = 0; s < c.state_count(); ++s) {
    for (std::size_t k = 0; k < keys.size(); ++k) key[k] = c.level(keys[k].first, keys[k].second, s);
    auto [it, inserted] = ids.emplace(key, g.members.size());
    if (inserted) g.members.emplace_back();
    g.group_of[s] = it->second;
    g.members[it->second].push_back(s);
  }
  return g;
}

std::vector<std::pair<std::size_t, Role>> interests_except(const Community& c, std::initializer_list<std::size_t> skip) {
  std::vector<std::pair<std::size_t, Role>> keys;
  for (std::size_t a = 0; a < c.agent_count(); ++a) {
    if (std::find(skip.begin(), skip.end(), a) == skip.end()) keys.emplace_back(a, Role::Interest);
  }
  return keys;
}

Extremes preference_extremes(const Community& c, std::size_t agent, const Grouping& g) {
  Extremes e;
  e.lo.resize(g.size());
  e.hi.resize(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    StateId lo = g.members[k].front(), hi = lo;
    for (StateId s : g.members[k]) {
      if (c.level(agent, Role::Preference, s) < c.level(agent, Role::Preference, lo)) lo = s;
      if (c.level(agent, Role::Preference, s) > c.level(agent, Role::Preference, hi)) hi = s;
    }
    e.lo[k] = lo;
    e.hi[k] = hi;
  }
  return e;
}

std::pair<std::string, State> named(const Community& c, std::string name, StateId s) {
  return {std::move(name), c.grid().state(s)};
}

Witness agent_pair_witness(const Community& c, const char* agent_name, std::size_t agent, StateId x, StateId y) {
  Witness w;
  w.agents.emplace_back(agent_name, agent);
  w.states.push_back(named(c, "x", x));
  w.states.push_back(named(c, "y", y));
  return w;
}

StateId id_of(const Community& c, const Witness& w, std::string_view name) {
  const State* s = w.state(name);
  if (!s) throw std::invalid_argument("witness lacks state '" + std::string(name) + "'");
  return c.grid().id_of(*s);
}

std::size_t agent_of(const Witness& w, std::string_view name) {
  auto a = w.agent(name);
  if (!a) throw std::invalid_argument("witness lacks agent '" + std::string(name) + "'");
  return *a;
}

CheckResult start(Condition condition, const CheckOptions& options) {
  CheckResult r;
  r.condition = condition;
  r.exhaustive = options.mode.kind == CheckMode::Kind::Exhaustive;
  if (!r.exhaustive) r.seed = options.mode.seed;
  return r;
}

void finish(CheckResult& r) { r.vacuous = r.holds && r.samples_examined == 0; }

void require_budget(const CheckOptions& options, double work, Condition condition) {
  if (work > static_cast<double>(options.budget)) {
    std::ostringstream msg;
    msg << condition_name(condition) << ": exhaustive scan needs about " << static_cast<long double>(work)
        << " tuples; budget is " << options.budget << " (use sampled mode)";
    throw BudgetExceeded(msg.str());
  }
}

void note_inexact_matching(const Community& c, CheckResult& r) {
  if (c.exact()) return;
  r.exhaustive = false;
  r.notes.push_back("nonzero tolerance: equivalence classes matched by exact utility value");
}

std::optional<CheckResult> apply_hints(const Community& c, Condition condition, const CheckOptions& options) {
  if (is_existential(condition)) return std::nullopt;
  for (const auto& hint : options.hints) {
    if (hint.condition != condition) continue;
    if (!evaluate_tuple(c, condition, hint.witness).violation()) continue;
    CheckResult r = start(condition, options);
    r.holds = false;
    r.samples_examined = 1;
    r.tuples_scanned = 1;
    r.witness = hint.witness;
    r.notes.push_back("violation confirmed on a supplied witness; scan skipped");
    return r;
  }
  return std::nullopt;
}

bool in_support(const SupportSet& s, std::size_t j) {
  return std::binary_search(s.members.begin(), s.members.end(), j);
}

}  // namespace detail

using namespace detail;

SupportSet detect_support(const Community& c, std::size_t agent) {
  SupportSet out;
  out.agent = agent;
  for (std::size_t j = 0; j < c.agent_count(); ++j) {
    const Grouping g = group_by(c, interests_except(c, {j}));
    const Extremes e = preference_extremes(c, agent, g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (c.P(agent, e.hi[k], e.lo[k])) {
        out.members.push_back(j);
        out.witnesses.push_back(agent_pair_witness(c, "i", agent, e.hi[k], e.lo[k]));
        break;
      }
    }
  }
  return out;
}

SupportSet detect_preference_support(const Community& c, std::size_t agent) {
  SupportSet out;
  out.agent = agent;
  for (std::size_t j = 0; j < c.agent_count(); ++j) {
    std::vector<std::pair<std::size_t, Role>> keys{{agent, Role::Interest}};
    for (std::size_t h = 0; h < c.agent_count(); ++h) {
      if (h != agent && h != j) keys.emplace_back(h, Role::Preference);
    }
    const Grouping g = group_by(c, keys);
    const Extremes e = preference_extremes(c, j, g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (c.P(j, e.hi[k], e.lo[k])) {
        out.members.push_back(j);
        out.witnesses.push_back(agent_pair_witness(c, "i", agent, e.hi[k], e.lo[k]));
        break;
      }
    }
  }
  return out;
}

bool detail::two_factor_guard(const Community& c, std::size_t i, std::size_t j) {
  for (StateId x = 0; x < c.state_count(); ++x) {
    for (StateId y = 0; y < c.state_count(); ++y) {
      if (c.W(i, x, y) && c.W(j, x, y) && !c.R(j, x, y)) return false;
    }
  }
  return true;
}

bool detail::all_equiv(const Community& c, Role role, StateId x, StateId y, std::initializer_list<std::size_t> skip) {
  for (std::size_t g = 0; g < c.agent_count(); ++g) {
    if (std::find(skip.begin(), skip.end(), g) != skip.end()) continue;
    if (!c.equiv(g, role, x, y)) return false;
  }
  return true;
}

TupleVerdict detail::pair_verdict(const Community& c, Condition condition, std::size_t j, StateId x, StateId y) {
  TupleVerdict v;
  const std::size_t n = c.agent_count();
  switch (condition) {
    case Condition::BasedOnInterests:
      v.hypothesis = all_equiv(c, Role::Interest, x, y, {j});
      v.conclusion = c.W(j, x, y) == c.R(j, x, y);
      break;
    case Condition::Nonpaternalism:
      v.hypothesis = c.W(j, x, y);
      for (std::size_t i = 0; i < n && v.hypothesis; ++i) v.hypothesis = i == j || c.R(i, x, y);
      v.conclusion = c.R(j, x, y);
      break;
    case Condition::Nonmalevolence:
      v.hypothesis = true;
      for (std::size_t i = 0; i < n && v.hypothesis; ++i) v.hypothesis = c.W(i, x, y);
      v.conclusion = c.R(j, x, y);
      break;
    default:
      throw std::invalid_argument("not a pair condition");
  }
  return v;
}

std::vector<std::pair<std::size_t, std::size_t>> two_factor_pairs(const Community& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < c.agent_count(); ++i) {
    for (std::size_t j = 0; j < c.agent_count(); ++j) {
      if (i != j && two_factor_guard(c, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

TupleVerdict evaluate_tuple(const Community& c, Condition condition, const Witness& w) {
  TupleVerdict v;
  const std::size_t n = c.agent_count();
  switch (condition) {
    case Condition::BasedOnInterests:
    case Condition::Nonpaternalism:
    case Condition::Nonmalevolence:
      return pair_verdict(c, condition, agent_of(w, "j"), id_of(c, w, "x"), id_of(c, w, "y"));
    case Condition::Separability: {
      const std::size_t i = agent_of(w, "i");
      if (!w.coalition) throw std::invalid_argument("separability witness needs a coalition");
      const StateId sw = id_of(c, w, "w"), sx = id_of(c, w, "x"), sy = id_of(c, w, "y"), sz = id_of(c, w, "z");
      v.hypothesis = true;
      for (std::size_t a = 0; a < n; ++a) {
        if (w.coalition->contains(a)) {
          v.hypothesis = v.hypothesis && c.E(a, sw, sy) && c.E(a, sx, sz);
        } else {
          v.hypothesis = v.hypothesis && c.E(a, sw, sx) && c.E(a, sy, sz);
        }
      }
      v.conclusion = c.R(i, sw, sx) == c.R(i, sy, sz);
      return v;
    }
    case Condition::DoubleCancellation: {
      const std::size_t i = agent_of(w, "i"), j = agent_of(w, "j");
      const StateId r = id_of(c, w, "r"), s = id_of(c, w, "s"), t = id_of(c, w, "t");
      const StateId x = id_of(c, w, "x"), y = id_of(c, w, "y"), z = id_of(c, w, "z");
      v.hypothesis = i != j && c.R(j, r, x) && c.R(j, s, y) && c.E(i, r, t) && c.E(i, x, s) && c.E(i, y, z) &&
                     c.E(j, r, y) && c.E(j, s, t) && c.E(j, x, z) && two_factor_guard(c, i, j);
      v.conclusion = c.R(j, t, z);
      return v;
    }
    case Condition::InterestCardinality:
    case Condition::PreferenceCardinality: {
      const bool interest = condition == Condition::InterestCardinality;
      const std::size_t h = agent_of(w, "h"), i = agent_of(w, "i"), j = agent_of(w, "j");
      const StateId wh = id_of(c, w, "w_h"), xh = id_of(c, w, "x_h"), yh = id_of(c, w, "y_h"), zh = id_of(c, w, "z_h");
      const StateId wi = id_of(c, w, "w_i"), xi = id_of(c, w, "x_i"), yi = id_of(c, w, "y_i"), zi = id_of(c, w, "z_i");
      const Role link = interest ? Role::Interest : Role::Preference;
      bool hyp = c.equiv(j, link, wh, wi) && c.equiv(j, link, xh, xi) && c.equiv(j, link, yh, yi) &&
                 c.equiv(j, link, zh, zi);
      if (interest) {
        hyp = hyp && in_support(detect_support(c, h), j) && in_support(detect_support(c, i), j);
        hyp = hyp && all_equiv(c, Role::Interest, wh, xh, {j}) && all_equiv(c, Role::Interest, wi, xi, {j}) &&
              all_equiv(c, Role::Interest, yh, zh, {j}) && all_equiv(c, Role::Interest, yi, zi, {j});
      } else {
        hyp = hyp && in_support(detect_preference_support(c, h), j) && in_support(detect_preference_support(c, i), j);
        hyp = hyp && all_equiv(c, Role::Preference, wh, xh, {h, j}) && all_equiv(c, Role::Preference, yh, zh, {h, j}) &&
              all_equiv(c, Role::Preference, wi, xi, {i, j}) && all_equiv(c, Role::Preference, yi, zi, {i, j}) &&
              c.E(h, wh, xh) && c.E(h, yh, zh) && c.E(i, wi, xi) && c.E(i, yi, zi);
      }
      v.hypothesis = hyp && c.R(h, wh, yh) && c.R(h, zh, xh) && c.R(i, yi, wi);
      v.conclusion = c.R(i, zi, xi);
      return v;
    }
    default:
      throw std::invalid_argument(std::string(condition_name(condition)) + " is an existence condition");
  }
}

bool satisfies_existential(const Community& c, Condition condition, const Witness& w) {
  const std::size_t n = c.agent_count();
  switch (condition) {
    case Condition::ProductStructure: {
      const StateId y = id_of(c, w, "y");
      for (std::size_t i = 0; i < n; ++i) {
        if (!c.E(i, y, id_of(c, w, "x_" + std::to_string(i + 1)))) return false;
      }
      return true;
    }
    case Condition::IdiosyncraticInterest:
    case Condition::IdiosyncraticPreference: {
      const bool interest = condition == Condition::IdiosyncraticInterest;
      const std::size_t i = agent_of(w, "i");
      const StateId x = id_of(c, w, "x"), y = id_of(c, w, "y");
      const Role role = interest ? Role::Interest : Role::Preference;
      return c.strict(i, role, x, y) && all_equiv(c, role, x, y, {i});
    }
    case Condition::UnambiguousImprovement: {
      const StateId x = id_of(c, w, "x"), y = id_of(c, w, "y");
      for (std::size_t i = 0; i < n; ++i) {
        if (!c.V(i, x, y) || !c.P(i, x, y)) return false;
      }
      return true;
    }
    default:
      throw std::invalid_argument(std::string(condition_name(condition)) + " is not an existence condition");
  }
}

bool reproduces_failure(const Community& c, const CheckResult& result) {
  if (result.holds || result.witness.empty()) return false;
  const Witness& w = result.witness;
  const std::size_t n = c.agent_count();
  switch (result.condition) {
    case Condition::ProductStructure: {
      for (StateId y = 0; y < c.state_count(); ++y) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) match = c.E(i, y, id_of(c, w, "x_" + std::to_string(i + 1)));
        if (match) return false;
      }
      return true;
    }
    case Condition::IdiosyncraticInterest:
    case Condition::IdiosyncraticPreference:
    case Condition::UnambiguousImprovement: {
      Witness probe;
      if (result.condition != Condition::UnambiguousImprovement) probe.agents.emplace_back("i", agent_of(w, "i"));
      for (StateId x = 0; x < c.state_count(); ++x) {
        for (StateId y = 0; y < c.state_count(); ++y) {
          probe.states = {named(c, "x", x), named(c, "y", y)};
          if (satisfies_existential(c, result.condition, probe)) return false;
        }
      }
      return true;
    }
    default:
      return evaluate_tuple(c, result.condition, w).violation();
  }
}

CheckResult run_check(const Community& c, Condition condition, const CheckOptions& options) {
  switch (condition) {
    case Condition::BasedOnInterests: return check_based_on_interests(c, options);
    case Condition::Nonpaternalism: return check_nonpaternalism(c, options);
    case Condition::Separability: return check_separability(c, options);
    case Condition::ProductStructure: return check_product_structure(c, options);
    case Condition::IdiosyncraticInterest: return check_idiosyncratic_interest(c, options);
    case Condition::IdiosyncraticPreference: return check_idiosyncratic_preference(c, options);
    case Condition::UnambiguousImprovement: return check_unambiguous_improvement(c, options);
    case Condition::Nonmalevolence: return check_nonmalevolence(c, options);
    case Condition::DoubleCancellation: return check_double_cancellation(c, options);
    case Condition::InterestCardinality: return check_interest_cardinality(c, options);
    case Condition::PreferenceCardinality: return check_preference_cardinality(c, options);
  }
  throw std::logic_error("unknown condition");
}

}  // namespace succession
