#pragma once

#include "succession/axioms.hpp"
#include "succession/random.hpp"

#include <map>

namespace succession::detail {

/// Partition of the grid by the levels of selected (agent, role) utilities.
/// Group ids follow the first state id at which each key appears.
struct Grouping {
  std::vector<std::size_t> group_of;
  std::vector<std::vector<StateId>> members;
  std::size_t size() const noexcept { return members.size(); }
};

Grouping group_by(const Community& c, const std::vector<std::pair<std::size_t, Role>>& keys);

/// Keys for "every interest except those in `skip`".
std::vector<std::pair<std::size_t, Role>> interests_except(const Community& c, std::initializer_list<std::size_t> skip);

/// First-attaining argmin/argmax of one agent's preference over each group.
struct Extremes {
  std::vector<StateId> lo;
  std::vector<StateId> hi;
};
Extremes preference_extremes(const Community& c, std::size_t agent, const Grouping& g);

Witness agent_pair_witness(const Community& c, const char* agent_name, std::size_t agent, StateId x, StateId y);
std::pair<std::string, State> named(const Community& c, std::string name, StateId s);
StateId id_of(const Community& c, const Witness& w, std::string_view name);
std::size_t agent_of(const Witness& w, std::string_view name);

/// Applies hints for `condition`; returns a failing result when one is a violation.
std::optional<CheckResult> apply_hints(const Community& c, Condition condition, const CheckOptions& options);

CheckResult start(Condition condition, const CheckOptions& options);
void finish(CheckResult& r);
void require_budget(const CheckOptions& options, double work, Condition condition);
void note_inexact_matching(const Community& c, CheckResult& r);

bool all_equiv(const Community& c, Role role, StateId x, StateId y, std::initializer_list<std::size_t> skip);
TupleVerdict pair_verdict(const Community& c, Condition condition, std::size_t j, StateId x, StateId y);

bool two_factor_guard(const Community& c, std::size_t i, std::size_t j);
bool in_support(const SupportSet& s, std::size_t j);

}  // namespace succession::detail
