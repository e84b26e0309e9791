#include "succession/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace succession {

std::string to_string(const State& state) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < state.coords.size(); ++k) {
    if (k) out << ',';
    out << format_rational(state.coords[k]);
  }
  out << ')';
  return out.str();
}

StateGrid::StateGrid(std::vector<RationalVector> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw std::invalid_argument("grid needs at least one axis");
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    const auto& axis = axes_[k];
    if (axis.empty()) throw std::invalid_argument("axis " + std::to_string(k + 1) + " has no levels");
    for (std::size_t l = 1; l < axis.size(); ++l) {
      if (!(axis[l - 1] < axis[l])) {
        throw std::invalid_argument("axis " + std::to_string(k + 1) + " levels are not strictly increasing");
      }
    }
  }
  strides_.assign(axes_.size(), 1);
  for (std::size_t k = axes_.size(); k-- > 0;) {
    strides_[k] = size_;
    size_ *= axes_[k].size();
  }
}

std::vector<std::size_t> StateGrid::level_positions(StateId id) const {
  std::vector<std::size_t> pos(axes_.size());
  for (std::size_t k = 0; k < axes_.size(); ++k) pos[k] = (id / strides_[k]) % axes_[k].size();
  return pos;
}

State StateGrid::state(StateId id) const {
  if (id >= size_) throw std::out_of_range("state id beyond grid");
  State s;
  s.coords.reserve(axes_.size());
  for (std::size_t k = 0; k < axes_.size(); ++k) s.coords.push_back(axes_[k][(id / strides_[k]) % axes_[k].size()]);
  return s;
}

std::optional<StateId> StateGrid::find(const State& state) const {
  if (state.coords.size() != axes_.size()) return std::nullopt;
  StateId id = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    const auto& axis = axes_[k];
    auto it = std::lower_bound(axis.begin(), axis.end(), state.coords[k]);
    if (it == axis.end() || *it != state.coords[k]) return std::nullopt;
    id += static_cast<std::size_t>(it - axis.begin()) * strides_[k];
  }
  return id;
}

StateId StateGrid::id_of(const State& state) const {
  if (auto id = find(state)) return *id;
  throw std::out_of_range("state " + to_string(state) + " is not on the grid");
}

std::vector<State> enumerate_states(const StateGrid& grid) {
  std::vector<State> states;
  states.reserve(grid.size());
  for (StateId id = 0; id < grid.size(); ++id) states.push_back(grid.state(id));
  return states;
}

EvaluationError::EvaluationError(std::size_t agent, Role role, const State& state, const std::string& cause)
    : std::runtime_error("agent " + std::to_string(agent + 1) + (role == Role::Interest ? " interest" : " preference") +
                         " utility failed at " + to_string(state) + ": " + cause),
      agent_(agent) {}

Community::Community(StateGrid grid, std::vector<AgentSpec> agents, Rational tolerance)
    : grid_(std::move(grid)), agents_(std::move(agents)), tolerance_(std::move(tolerance)) {
  if (agents_.empty()) throw std::invalid_argument("community needs at least one agent");
  if (tolerance_ < 0) throw std::invalid_argument("tolerance must be nonnegative");
  exact_ = tolerance_ == 0;
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    if (agents_[a].id != a + 1) throw std::invalid_argument("agent ids must be 1..n in order");
    for (const Expr* e : {&agents_[a].interest, &agents_[a].preference}) {
      if (e->max_coordinate() > grid_.dimension()) {
        throw std::invalid_argument("agent " + std::to_string(a + 1) + " references a coordinate beyond the grid");
      }
    }
  }

  const std::size_t n = agents_.size();
  tables_.resize(2 * n);
  for (auto& t : tables_) t.values.resize(grid_.size());
  for (StateId s = 0; s < grid_.size(); ++s) {
    const State state = grid_.state(s);
    for (std::size_t a = 0; a < n; ++a) {
      for (Role role : {Role::Interest, Role::Preference}) {
        const Expr& e = role == Role::Interest ? agents_[a].interest : agents_[a].preference;
        try {
          tables_[2 * a + (role == Role::Preference ? 1 : 0)].values[s] = evaluate(e, state.coords);
        } catch (const DivisionByZeroError& err) {
          throw EvaluationError(a, role, state, err.what());
        }
      }
    }
  }

  for (auto& t : tables_) {
    std::vector<StateId> order(grid_.size());
    std::iota(order.begin(), order.end(), StateId{0});
    std::stable_sort(order.begin(), order.end(), [&](StateId l, StateId r) { return t.values[l] < t.values[r]; });
    t.levels.assign(grid_.size(), 0);
    std::uint32_t rank = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0 && t.values[order[k]] != t.values[order[k - 1]]) ++rank;
      t.levels[order[k]] = rank;
    }
    t.distinct = order.empty() ? 0 : rank + 1;
  }
}

bool Community::holds(std::size_t agent, Role role, RelationKind kind, StateId x, StateId y) const {
  switch (kind) {
    case RelationKind::Weak: return weak(agent, role, x, y);
    case RelationKind::Strict: return strict(agent, role, x, y);
    case RelationKind::Equiv: return equiv(agent, role, x, y);
  }
  return false;
}

bool relation(const Community& community, std::size_t agent, Role role, RelationKind kind, const State& x,
              const State& y) {
  if (agent >= community.agent_count()) throw std::out_of_range("agent index beyond community");
  return community.holds(agent, role, kind, community.grid().id_of(x), community.grid().id_of(y));
}

}  // namespace succession
