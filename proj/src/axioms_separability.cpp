#include "axioms_internal.hpp"

#include <atomic>
#include <limits>

namespace succession {

using namespace detail;

namespace {

// Interest cells for one partition (J, K): states keyed by their J-levels and their K-levels.
struct Partition {
  Grouping by_j;
  Grouping by_k;
  std::vector<std::ptrdiff_t> cell_of;  // by_j id * by_k.size() + by_k id -> cell, or -1
  std::vector<std::vector<StateId>> cells;

  std::ptrdiff_t cell(std::size_t jkey, std::size_t kkey) const { return cell_of[jkey * by_k.size() + kkey]; }
};

Partition make_partition(const Community& c, AgentMask j_mask) {
  std::vector<std::pair<std::size_t, Role>> jkeys, kkeys;
  for (std::size_t a = 0; a < c.agent_count(); ++a) {
    ((j_mask >> a) & 1u ? jkeys : kkeys).emplace_back(a, Role::Interest);
  }
  Partition p{group_by(c, jkeys), group_by(c, kkeys), {}, {}};
  p.cell_of.assign(p.by_j.size() * p.by_k.size(), -1);
  for (StateId s = 0; s < c.state_count(); ++s) {
    auto& slot = p.cell_of[p.by_j.group_of[s] * p.by_k.size() + p.by_k.group_of[s]];
    if (slot < 0) {
      slot = static_cast<std::ptrdiff_t>(p.cells.size());
      p.cells.emplace_back();
    }
    p.cells[static_cast<std::size_t>(slot)].push_back(s);
  }
  return p;
}

struct Found {
  StateId w, x, y, z;
};

struct RowResult {
  std::size_t tuples = 0;
  std::optional<Found> found;
};

// All quadruples whose first state is w, for agent i. Stops at the first violation.
RowResult scan_row(const Community& c, std::size_t i, const Partition& p, const Extremes& ext, StateId w) {
  RowResult out;
  const std::size_t jw = p.by_j.group_of[w];
  for (StateId x : p.by_k.members[p.by_k.group_of[w]]) {
    const std::size_t jx = p.by_j.group_of[x];
    const bool wx = c.R(i, w, x);
    for (std::size_t k = 0; k < p.by_k.size(); ++k) {
      const auto cy = p.cell(jw, k), cz = p.cell(jx, k);
      if (cy < 0 || cz < 0) continue;
      const auto ycell = static_cast<std::size_t>(cy), zcell = static_cast<std::size_t>(cz);
      out.tuples += p.cells[ycell].size() * p.cells[zcell].size();
      if (wx && !c.R(i, ext.lo[ycell], ext.hi[zcell])) {
        out.found = Found{w, x, ext.lo[ycell], ext.hi[zcell]};
        return out;
      }
      if (!wx && c.R(i, ext.hi[ycell], ext.lo[zcell])) {
        out.found = Found{w, x, ext.hi[ycell], ext.lo[zcell]};
        return out;
      }
    }
  }
  return out;
}

Extremes cell_extremes(const Community& c, std::size_t agent, const Partition& p) {
  Grouping cells;
  cells.members = p.cells;
  return preference_extremes(c, agent, cells);
}

Witness make_witness(const Community& c, std::size_t i, AgentMask j, const Found& f) {
  Witness w;
  w.agents.emplace_back("i", i);
  w.coalition = Coalition::from_mask(j);
  w.states = {named(c, "w", f.w), named(c, "x", f.x), named(c, "y", f.y), named(c, "z", f.z)};
  return w;
}

CheckResult exhaustive_scan(const Community& c, const CheckOptions& options, bool parallel) {
  CheckResult r = start(Condition::Separability, options);
  note_inexact_matching(c, r);
  const std::size_t n = c.agent_count();
  const auto order = coalition_order(n);
  require_budget(options, static_cast<double>(order.size()) * static_cast<double>(c.state_count()), r.condition);

  std::vector<Partition> parts;
  parts.reserve(order.size());
  double work = 0;
  for (AgentMask j : order) {
    parts.push_back(make_partition(c, j));
    const auto& p = parts.back();
    for (const auto& g : p.by_k.members) {
      work += static_cast<double>(g.size()) * static_cast<double>(g.size()) * static_cast<double>(p.by_k.size());
    }
  }
  require_budget(options, work * static_cast<double>(n), r.condition);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jm = 0; jm < order.size(); ++jm) {
      const Partition& p = parts[jm];
      const Extremes ext = cell_extremes(c, i, p);
      const std::size_t states = c.state_count();
      std::vector<RowResult> rows(states);

      if (parallel) {
        std::atomic<std::size_t> first{std::numeric_limits<std::size_t>::max()};
        const auto count = static_cast<std::int64_t>(states);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t w = 0; w < count; ++w) {
          const auto sw = static_cast<std::size_t>(w);
          if (sw > first.load(std::memory_order_relaxed)) continue;
          rows[sw] = scan_row(c, i, p, ext, sw);
          if (rows[sw].found) {
            std::size_t cur = first.load();
            while (sw < cur && !first.compare_exchange_weak(cur, sw)) {
            }
          }
        }
      } else {
        for (StateId w = 0; w < states; ++w) {
          rows[w] = scan_row(c, i, p, ext, w);
          if (rows[w].found) break;
        }
      }

      for (const auto& row : rows) {
        r.samples_examined += row.tuples;
        if (row.found) {
          r.holds = false;
          r.witness = make_witness(c, i, order[jm], *row.found);
          r.tuples_scanned = r.samples_examined;
          finish(r);
          return r;
        }
      }
    }
  }
  r.tuples_scanned = r.samples_examined;
  finish(r);
  return r;
}

CheckResult sampled_scan(const Community& c, const CheckOptions& options) {
  CheckResult r = start(Condition::Separability, options);
  const std::size_t n = c.agent_count();
  if (n > kMaxCoalitionAgents) throw BudgetExceeded("separability sampling limited to 20 agents");
  std::mt19937_64 rng(options.mode.seed);
  std::map<AgentMask, Partition> cache;
  for (std::size_t k = 0; k < options.mode.samples; ++k) {
    const std::size_t i = uniform_index(rng, n);
    const auto j = static_cast<AgentMask>(uniform_index(rng, std::uint64_t{1} << n));
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, make_partition(c, j)).first;
    const Partition& p = it->second;
    const StateId w = uniform_index(rng, c.state_count());
    const auto& kgroup = p.by_k.members[p.by_k.group_of[w]];
    const StateId x = kgroup[uniform_index(rng, kgroup.size())];
    const std::size_t kp = uniform_index(rng, p.by_k.size());
    ++r.tuples_scanned;
    const auto cy = p.cell(p.by_j.group_of[w], kp), cz = p.cell(p.by_j.group_of[x], kp);
    if (cy < 0 || cz < 0) continue;
    const auto& ys = p.cells[static_cast<std::size_t>(cy)];
    const auto& zs = p.cells[static_cast<std::size_t>(cz)];
    const StateId y = ys[uniform_index(rng, ys.size())];
    const StateId z = zs[uniform_index(rng, zs.size())];
    ++r.samples_examined;
    if (c.R(i, w, x) != c.R(i, y, z)) {
      r.holds = false;
      r.witness = make_witness(c, i, j, Found{w, x, y, z});
      break;
    }
  }
  finish(r);
  return r;
}

}  // namespace

CheckResult check_separability(const Community& c, const CheckOptions& options) {
  if (auto hinted = apply_hints(c, Condition::Separability, options)) return *hinted;
  if (options.mode.kind == CheckMode::Kind::Sampled) return sampled_scan(c, options);
  return exhaustive_scan(c, options, true);
}

CheckResult check_separability_serial(const Community& c, const CheckOptions& options) {
  if (auto hinted = apply_hints(c, Condition::Separability, options)) return *hinted;
  if (options.mode.kind == CheckMode::Kind::Sampled) return sampled_scan(c, options);
  return exhaustive_scan(c, options, false);
}

}  // namespace succession
