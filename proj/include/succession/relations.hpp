#pragma once

#include "succession/core.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace succession {

/// Bit k set means agent k (0-based) is a member.
using AgentMask = std::uint32_t;

inline constexpr std::size_t kMaxCoalitionAgents = 20;

struct Coalition {
  std::vector<std::size_t> members;  // 0-based, ascending

  static Coalition from_mask(AgentMask mask);
  AgentMask mask() const;
  bool contains(std::size_t agent) const;
  friend bool operator==(const Coalition&, const Coalition&) = default;
};

/// "{1,3}" with 1-based ids.
std::string to_string(const Coalition& coalition);

struct SuccessionWitness {
  bool holds = false;
  Coalition coalition;                      // the coalition J for liberal queries, all of I for Pareto
  std::optional<std::size_t> strict_agent;  // lowest j in J with x P_j y
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct RelationBudget {
  std::size_t max_agents = kMaxCoalitionAgents;
  std::size_t max_evaluations = 1'000'000;  // ordered pairs times coalitions
};

/// All masks over n agents, ordered by size, then lexicographically by sorted member list.
std::vector<AgentMask> coalition_order(std::size_t n);

/// Everyone weakly prefers x, someone strictly.
SuccessionWitness pareto_superior(const Community& c, StateId x, StateId y);

/// Some coalition J unanimously (one member strictly) prefers x while every
/// outsider's interest is weakly served. Witness is the first J in coalition_order.
SuccessionWitness liberal_successor(const Community& c, StateId x, StateId y);

/// Outsider clause relaxed to "no outsider k has y V_k x".
SuccessionWitness liberal_successor_permissive(const Community& c, StateId x, StateId y);

SuccessionWitness pareto_superior(const Community& c, const State& x, const State& y);
SuccessionWitness liberal_successor(const Community& c, const State& x, const State& y);
SuccessionWitness liberal_successor_permissive(const Community& c, const State& x, const State& y);

struct DivergentPair {
  StateId x = 0;
  StateId y = 0;
  bool pareto = false;
  bool liberal = false;
  Coalition coalition;  // liberal witness
};

struct CoincidenceReport {
  std::size_t pairs_examined = 0;
  std::size_t pareto_count = 0;
  std::size_t liberal_count = 0;
  std::size_t permissive_count = 0;
  std::vector<DivergentPair> divergences;  // ordered by (x, y)

  bool coincide() const noexcept { return divergences.empty(); }
  friend bool operator==(const CoincidenceReport&, const CoincidenceReport&) = default;
};

bool operator==(const DivergentPair& a, const DivergentPair& b);

/// Scans every ordered pair of distinct states. Parallel over x; the result
/// does not depend on thread count or scheduling.
CoincidenceReport coincidence_report(const Community& c, const RelationBudget& budget = {});

/// Single-threaded reference for coincidence_report.
CoincidenceReport coincidence_report_serial(const Community& c, const RelationBudget& budget = {});

}  // namespace succession
