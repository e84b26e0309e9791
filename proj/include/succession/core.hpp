#pragma once

#include "succession/expr.hpp"
#include "succession/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace succession {

/// Position of a state in the lexicographic enumeration of its grid.
using StateId = std::size_t;

/// A social state: one level from each grid axis.
struct State {
  RationalVector coords;

  friend bool operator==(const State&, const State&) = default;
};

/// "(2,2,2)", "(1/4)" and so on.
std::string to_string(const State& state);

/// Finite product of strictly increasing rational axes.
class StateGrid {
 public:
  explicit StateGrid(std::vector<RationalVector> axes);

  std::size_t dimension() const noexcept { return axes_.size(); }
  const std::vector<RationalVector>& axes() const noexcept { return axes_; }
  std::size_t size() const noexcept { return size_; }

  State state(StateId id) const;
  /// Per-axis level positions of a state id (mixed radix, last axis fastest).
  std::vector<std::size_t> level_positions(StateId id) const;
  std::optional<StateId> find(const State& state) const;
  /// Like find() but throws std::out_of_range for off-grid states.
  StateId id_of(const State& state) const;

 private:
  std::vector<RationalVector> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// All grid states in lexicographic order.
std::vector<State> enumerate_states(const StateGrid& grid);

enum class Role { Interest, Preference };
enum class RelationKind { Weak, Strict, Equiv };

struct AgentSpec {
  std::size_t id = 0;  // 1-based, as written in community documents
  Expr interest;       // v_j
  Expr preference;     // p_j
};

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::size_t agent, Role role, const State& state, const std::string& cause);
  std::size_t agent() const noexcept { return agent_; }

 private:
  std::size_t agent_;
};

/// n agents whose interest and preference utilities are tabulated on a grid.
///
/// Agent indices in the library API are 0-based; AgentSpec::id and every
/// rendered report use the 1-based ids. With zero tolerance, comparisons go
/// through dense integer ranks of the exact utility values.
class Community {
 public:
  Community(StateGrid grid, std::vector<AgentSpec> agents, Rational tolerance = Rational(0));

  const StateGrid& grid() const noexcept { return grid_; }
  const std::vector<AgentSpec>& agents() const noexcept { return agents_; }
  std::size_t agent_count() const noexcept { return agents_.size(); }
  std::size_t state_count() const noexcept { return grid_.size(); }
  const Rational& tolerance() const noexcept { return tolerance_; }
  bool exact() const noexcept { return exact_; }

  const Rational& utility(std::size_t agent, Role role, StateId s) const {
    return table(agent, role).values[s];
  }
  /// Dense rank of the exact utility value (0 = lowest).
  std::uint32_t level(std::size_t agent, Role role, StateId s) const { return table(agent, role).levels[s]; }
  std::size_t level_count(std::size_t agent, Role role) const { return table(agent, role).distinct; }

  bool weak(std::size_t agent, Role role, StateId x, StateId y) const {
    const auto& t = table(agent, role);
    if (exact_) return t.levels[x] >= t.levels[y];
    return t.values[x] >= t.values[y] - tolerance_;
  }
  bool strict(std::size_t agent, Role role, StateId x, StateId y) const {
    const auto& t = table(agent, role);
    if (exact_) return t.levels[x] > t.levels[y];
    return t.values[x] > t.values[y] + tolerance_;
  }
  bool equiv(std::size_t agent, Role role, StateId x, StateId y) const {
    const auto& t = table(agent, role);
    if (exact_) return t.levels[x] == t.levels[y];
    return abs(t.values[x] - t.values[y]) <= tolerance_;
  }
  bool holds(std::size_t agent, Role role, RelationKind kind, StateId x, StateId y) const;

  // Shorthands in the usual W/R notation.
  bool W(std::size_t j, StateId x, StateId y) const { return weak(j, Role::Interest, x, y); }
  bool V(std::size_t j, StateId x, StateId y) const { return strict(j, Role::Interest, x, y); }
  bool E(std::size_t j, StateId x, StateId y) const { return equiv(j, Role::Interest, x, y); }
  bool R(std::size_t j, StateId x, StateId y) const { return weak(j, Role::Preference, x, y); }
  bool P(std::size_t j, StateId x, StateId y) const { return strict(j, Role::Preference, x, y); }
  bool I(std::size_t j, StateId x, StateId y) const { return equiv(j, Role::Preference, x, y); }

 private:
  struct Table {
    RationalVector values;
    std::vector<std::uint32_t> levels;
    std::size_t distinct = 0;
  };
  const Table& table(std::size_t agent, Role role) const {
    return tables_[2 * agent + (role == Role::Preference ? 1 : 0)];
  }

  StateGrid grid_;
  std::vector<AgentSpec> agents_;
  Rational tolerance_;
  bool exact_;
  std::vector<Table> tables_;
};

/// State-level relation query. Throws std::out_of_range for off-grid states.
bool relation(const Community& community, std::size_t agent, Role role, RelationKind kind, const State& x,
              const State& y);

}  // namespace succession
