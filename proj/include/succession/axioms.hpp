#pragma once

#include "succession/core.hpp"
#include "succession/relations.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace succession {

enum class Condition {
  BasedOnInterests,
  Nonpaternalism,
  Separability,
  ProductStructure,
  IdiosyncraticInterest,
  IdiosyncraticPreference,
  UnambiguousImprovement,
  Nonmalevolence,
  DoubleCancellation,
  InterestCardinality,
  PreferenceCardinality,
};

inline constexpr Condition kAllConditions[] = {
    Condition::BasedOnInterests,        Condition::Nonpaternalism,         Condition::Separability,
    Condition::ProductStructure,        Condition::IdiosyncraticInterest,  Condition::IdiosyncraticPreference,
    Condition::UnambiguousImprovement,  Condition::Nonmalevolence,         Condition::DoubleCancellation,
    Condition::InterestCardinality,     Condition::PreferenceCardinality,
};

/// Kebab-case name used by the CLI and in reports, e.g. "separability".
std::string_view condition_name(Condition c);
std::optional<Condition> condition_from_name(std::string_view name);

/// True for the conditions that assert some improving pair exists; the others are implications.
bool is_existential(Condition c);

/// Named agents and states making up one tuple of a condition.
struct Witness {
  std::vector<std::pair<std::string, std::size_t>> agents;  // 0-based agent indices
  std::vector<std::pair<std::string, State>> states;
  std::optional<Coalition> coalition;
  std::string note;

  bool empty() const noexcept { return agents.empty() && states.empty() && !coalition && note.empty(); }
  std::optional<std::size_t> agent(std::string_view name) const;
  const State* state(std::string_view name) const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct WitnessHint {
  Condition condition;
  Witness witness;
};

struct CheckMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode sampled(std::size_t count, std::uint64_t seed) { return {Kind::Sampled, count, seed}; }
};

struct CheckOptions {
  CheckMode mode;
  std::size_t budget = 50'000'000;  // tuples an exhaustive scan may touch
  std::vector<WitnessHint> hints;   // tuples evaluated before any scan
};

struct CheckResult {
  Condition condition = Condition::BasedOnInterests;
  bool holds = true;
  bool vacuous = false;       // holds only because no tuple met the hypothesis
  bool exhaustive = true;     // false for sampled scans and inexact matching
  std::size_t samples_examined = 0;  // tuples that met the hypothesis
  std::size_t tuples_scanned = 0;
  std::optional<std::uint64_t> seed;
  Witness witness;                 // violation, when !holds
  std::vector<Witness> evidence;   // witnessing tuples of existential conditions, when they hold
  std::vector<std::string> notes;
};

CheckResult check_based_on_interests(const Community& c, const CheckOptions& options = {});
CheckResult check_nonpaternalism(const Community& c, const CheckOptions& options = {});
CheckResult check_separability(const Community& c, const CheckOptions& options = {});
/// Single-threaded reference for check_separability.
CheckResult check_separability_serial(const Community& c, const CheckOptions& options = {});
CheckResult check_product_structure(const Community& c, const CheckOptions& options = {});
CheckResult check_idiosyncratic_interest(const Community& c, const CheckOptions& options = {});
CheckResult check_idiosyncratic_preference(const Community& c, const CheckOptions& options = {});
CheckResult check_unambiguous_improvement(const Community& c, const CheckOptions& options = {});
CheckResult check_nonmalevolence(const Community& c, const CheckOptions& options = {});
CheckResult check_double_cancellation(const Community& c, const CheckOptions& options = {});
CheckResult check_interest_cardinality(const Community& c, const CheckOptions& options = {});
CheckResult check_preference_cardinality(const Community& c, const CheckOptions& options = {});

CheckResult run_check(const Community& c, Condition condition, const CheckOptions& options = {});

/// Hypothesis and conclusion of a universal condition evaluated on one tuple.
struct TupleVerdict {
  bool hypothesis = false;
  bool conclusion = true;
  bool violation() const noexcept { return hypothesis && !conclusion; }
};

/// Evaluates the defining implication of a universal condition directly on the
/// named agents and states of `w`. Throws std::invalid_argument when a name is
/// missing or the condition is existential.
TupleVerdict evaluate_tuple(const Community& c, Condition condition, const Witness& w);

/// For existential conditions: does `w` witness the existence claim?
bool satisfies_existential(const Community& c, Condition condition, const Witness& w);

/// Re-derives a reported failure from its witness alone.
bool reproduces_failure(const Community& c, const CheckResult& result);

struct SupportSet {
  std::size_t agent = 0;
  std::vector<std::size_t> members;  // ascending, 0-based
  std::vector<Witness> witnesses;    // one (x, y) pair per member
};

/// j is in N(i) when some pair moves p_i strictly while every interest other than j's is unchanged.
SupportSet detect_support(const Community& c, std::size_t agent);

/// j is in S(i) when some pair keeps i's interest and every preference outside {i, j}
/// unchanged while j strictly prefers one state.
SupportSet detect_preference_support(const Community& c, std::size_t agent);

/// Agents i != j whose joint interest gains always carry j's preference.
std::vector<std::pair<std::size_t, std::size_t>> two_factor_pairs(const Community& c);

}  // namespace succession
