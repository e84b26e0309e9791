#include "succession/relations.hpp"

#include <bit>
#include <sstream>

namespace succession {

Coalition Coalition::from_mask(AgentMask mask) {
  Coalition c;
  for (std::size_t k = 0; mask; ++k, mask >>= 1) {
    if (mask & 1u) c.members.push_back(k);
  }
  return c;
}

AgentMask Coalition::mask() const {
  AgentMask m = 0;
  for (auto k : members) m |= AgentMask{1} << k;
  return m;
}

bool Coalition::contains(std::size_t agent) const { return (mask() >> agent) & 1u; }

std::string to_string(const Coalition& coalition) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < coalition.members.size(); ++k) {
    if (k) out << ',';
    out << coalition.members[k] + 1;
  }
  out << '}';
  return out.str();
}

bool operator==(const DivergentPair& a, const DivergentPair& b) {
  return a.x == b.x && a.y == b.y && a.pareto == b.pareto && a.liberal == b.liberal && a.coalition == b.coalition;
}

std::vector<AgentMask> coalition_order(std::size_t n) {
  if (n > kMaxCoalitionAgents) throw BudgetExceeded("coalition scan limited to " + std::to_string(kMaxCoalitionAgents) + " agents");
  std::vector<AgentMask> order;
  order.reserve(std::size_t{1} << n);
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= n; ++size) {
    idx.resize(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = k;
    while (true) {
      AgentMask m = 0;
      for (auto k : idx) m |= AgentMask{1} << k;
      order.push_back(m);
      // Advance to the next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t k = pos; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return order;
}

namespace {

struct PairMasks {
  AgentMask prefer = 0;         // x R_i y
  AgentMask strict = 0;         // x P_i y
  AgentMask interest_kept = 0;  // x W_k y
  AgentMask interest_hurt = 0;  // y V_k x
};

PairMasks pair_masks(const Community& c, StateId x, StateId y) {
  PairMasks m;
  for (std::size_t i = 0; i < c.agent_count(); ++i) {
    const AgentMask bit = AgentMask{1} << i;
    if (c.R(i, x, y)) m.prefer |= bit;
    if (c.P(i, x, y)) m.strict |= bit;
    if (c.W(i, x, y)) m.interest_kept |= bit;
    if (c.V(i, y, x)) m.interest_hurt |= bit;
  }
  return m;
}

AgentMask full_mask(std::size_t n) { return n >= 32 ? ~AgentMask{0} : (AgentMask{1} << n) - 1; }

SuccessionWitness make_witness(AgentMask coalition, AgentMask strict) {
  SuccessionWitness w;
  w.holds = true;
  w.coalition = Coalition::from_mask(coalition);
  w.strict_agent = static_cast<std::size_t>(std::countr_zero(coalition & strict));
  return w;
}

enum class OutsiderClause { KeepsInterest, NotHurt };

SuccessionWitness liberal_scan(const Community& c, const PairMasks& m, const std::vector<AgentMask>& order,
                               OutsiderClause clause) {
  const AgentMask all = full_mask(c.agent_count());
  if (m.prefer == all && m.strict) return make_witness(all, m.strict);
  if (!m.strict) return {};
  for (AgentMask j : order) {
    if ((j & ~m.prefer) || !(j & m.strict)) continue;
    const AgentMask outsiders = all & ~j;
    const bool ok = clause == OutsiderClause::KeepsInterest ? (outsiders & ~m.interest_kept) == 0
                                                           : (outsiders & m.interest_hurt) == 0;
    if (ok) return make_witness(j, m.strict);
  }
  return {};
}

void require_coalition_size(const Community& c, std::size_t limit) {
  if (c.agent_count() > limit) {
    throw BudgetExceeded("community has " + std::to_string(c.agent_count()) + " agents; coalition scan limited to " +
                         std::to_string(limit));
  }
}

const std::vector<AgentMask>& cached_order(std::size_t n) {
  thread_local std::size_t cached_n = static_cast<std::size_t>(-1);
  thread_local std::vector<AgentMask> cached;
  if (cached_n != n) {
    cached = coalition_order(n);
    cached_n = n;
  }
  return cached;
}

void check_budget(const Community& c, const RelationBudget& budget) {
  require_coalition_size(c, std::min(budget.max_agents, kMaxCoalitionAgents));
  const double pairs = static_cast<double>(c.state_count()) * static_cast<double>(c.state_count());
  const double work = pairs * static_cast<double>(std::size_t{1} << c.agent_count());
  if (work > static_cast<double>(budget.max_evaluations)) {
    std::ostringstream msg;
    msg << "coincidence report needs " << static_cast<long double>(work) << " pair-coalition evaluations; budget is "
        << budget.max_evaluations;
    throw BudgetExceeded(msg.str());
  }
}

// Examines all y for one x; appends divergences in y order.
void scan_row(const Community& c, StateId x, const std::vector<AgentMask>& order, CoincidenceReport& out) {
  for (StateId y = 0; y < c.state_count(); ++y) {
    if (x == y) continue;
    const PairMasks m = pair_masks(c, x, y);
    const AgentMask all = full_mask(c.agent_count());
    const bool pareto = m.prefer == all && m.strict;
    const SuccessionWitness lib = liberal_scan(c, m, order, OutsiderClause::KeepsInterest);
    const SuccessionWitness perm = liberal_scan(c, m, order, OutsiderClause::NotHurt);
    ++out.pairs_examined;
    out.pareto_count += pareto;
    out.liberal_count += lib.holds;
    out.permissive_count += perm.holds;
    if (pareto != lib.holds) out.divergences.push_back({x, y, pareto, lib.holds, lib.coalition});
  }
}

}  // namespace

SuccessionWitness pareto_superior(const Community& c, StateId x, StateId y) {
  const PairMasks m = pair_masks(c, x, y);
  if (m.prefer == full_mask(c.agent_count()) && m.strict) return make_witness(m.prefer, m.strict);
  return {};
}

SuccessionWitness liberal_successor(const Community& c, StateId x, StateId y) {
  require_coalition_size(c, kMaxCoalitionAgents);
  return liberal_scan(c, pair_masks(c, x, y), cached_order(c.agent_count()), OutsiderClause::KeepsInterest);
}

SuccessionWitness liberal_successor_permissive(const Community& c, StateId x, StateId y) {
  require_coalition_size(c, kMaxCoalitionAgents);
  return liberal_scan(c, pair_masks(c, x, y), cached_order(c.agent_count()), OutsiderClause::NotHurt);
}

SuccessionWitness pareto_superior(const Community& c, const State& x, const State& y) {
  return pareto_superior(c, c.grid().id_of(x), c.grid().id_of(y));
}
SuccessionWitness liberal_successor(const Community& c, const State& x, const State& y) {
  return liberal_successor(c, c.grid().id_of(x), c.grid().id_of(y));
}
SuccessionWitness liberal_successor_permissive(const Community& c, const State& x, const State& y) {
  return liberal_successor_permissive(c, c.grid().id_of(x), c.grid().id_of(y));
}

CoincidenceReport coincidence_report_serial(const Community& c, const RelationBudget& budget) {
  check_budget(c, budget);
  const auto order = coalition_order(c.agent_count());
  CoincidenceReport report;
  for (StateId x = 0; x < c.state_count(); ++x) scan_row(c, x, order, report);
  return report;
}

CoincidenceReport coincidence_report(const Community& c, const RelationBudget& budget) {
  check_budget(c, budget);
  const auto order = coalition_order(c.agent_count());
  const auto rows = static_cast<std::int64_t>(c.state_count());
  std::vector<CoincidenceReport> partial(c.state_count());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t x = 0; x < rows; ++x) {
    scan_row(c, static_cast<StateId>(x), order, partial[static_cast<std::size_t>(x)]);
  }

  CoincidenceReport report;
  for (auto& row : partial) {
    report.pairs_examined += row.pairs_examined;
    report.pareto_count += row.pareto_count;
    report.liberal_count += row.liberal_count;
    report.permissive_count += row.permissive_count;
    report.divergences.insert(report.divergences.end(), row.divergences.begin(), row.divergences.end());
  }
  return report;
}

}  // namespace succession
