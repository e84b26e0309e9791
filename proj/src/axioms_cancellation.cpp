#include "axioms_internal.hpp"

namespace succession {

using namespace detail;

namespace {

// Cells of the (v_i, v_j) level plane for a two-factor pair.
struct Plane {
  Grouping by_i;
  Grouping by_j;
  std::vector<std::ptrdiff_t> cell_of;  // i-level * levels_j + j-level
  std::vector<std::vector<StateId>> cells;
  Extremes ext;  // of p_j
  std::size_t levels_j = 0;

  std::ptrdiff_t cell(StateId with_i, StateId with_j, const Community& c, std::size_t i, std::size_t j) const {
    return cell_of[c.level(i, Role::Interest, with_i) * levels_j + c.level(j, Role::Interest, with_j)];
  }
};

Plane make_plane(const Community& c, std::size_t i, std::size_t j) {
  Plane p;
  p.by_i = group_by(c, {{i, Role::Interest}});
  p.by_j = group_by(c, {{j, Role::Interest}});
  p.levels_j = c.level_count(j, Role::Interest);
  p.cell_of.assign(c.level_count(i, Role::Interest) * p.levels_j, -1);
  for (StateId s = 0; s < c.state_count(); ++s) {
    auto& slot = p.cell_of[c.level(i, Role::Interest, s) * p.levels_j + c.level(j, Role::Interest, s)];
    if (slot < 0) {
      slot = static_cast<std::ptrdiff_t>(p.cells.size());
      p.cells.emplace_back();
    }
    p.cells[static_cast<std::size_t>(slot)].push_back(s);
  }
  Grouping g;
  g.members = p.cells;
  p.ext = preference_extremes(c, j, g);
  return p;
}

Witness make_witness(const Community& c, std::size_t i, std::size_t j, const StateId (&s)[6]) {
  Witness w;
  w.agents = {{"i", i}, {"j", j}};
  const char* names[6] = {"r", "s", "t", "x", "y", "z"};
  for (int k = 0; k < 6; ++k) w.states.push_back(named(c, names[k], s[k]));
  return w;
}

}  // namespace

// The matching premises are read as interest equivalences: r~t and x~s and y~z
// for agent i, r~y and s~t and x~z for agent j, which is the standard
// cancellation pattern on the (v_i, v_j) plane.
CheckResult check_double_cancellation(const Community& c, const CheckOptions& options) {
  if (auto hinted = apply_hints(c, Condition::DoubleCancellation, options)) return *hinted;
  CheckResult r = start(Condition::DoubleCancellation, options);
  note_inexact_matching(c, r);
  const auto pairs = two_factor_pairs(c);
  if (pairs.empty()) {
    r.notes.push_back("no agent's preference is carried by two interests; condition is inactive");
    finish(r);
    return r;
  }

  const std::size_t states = c.state_count();
  if (options.mode.kind == CheckMode::Kind::Exhaustive) {
    double work = 0;
    for (const auto& [i, j] : pairs) {
      const double ci = static_cast<double>(states) / static_cast<double>(c.level_count(i, Role::Interest));
      const double cj = static_cast<double>(states) / static_cast<double>(c.level_count(j, Role::Interest));
      work += static_cast<double>(states) * static_cast<double>(states) * ci * cj;
    }
    require_budget(options, work, r.condition);

    for (const auto& [i, j] : pairs) {
      const Plane p = make_plane(c, i, j);
      for (StateId rr = 0; rr < states; ++rr) {
        for (StateId x = 0; x < states; ++x) {
          if (!c.R(j, rr, x)) continue;
          for (StateId s : p.by_i.members[p.by_i.group_of[x]]) {
            const auto t = p.cell(rr, s, c, i, j);
            for (StateId y : p.by_j.members[p.by_j.group_of[rr]]) {
              ++r.tuples_scanned;
              if (!c.R(j, s, y)) continue;
              const auto z = p.cell(y, x, c, i, j);
              if (t < 0 || z < 0) continue;
              const auto tc = static_cast<std::size_t>(t), zc = static_cast<std::size_t>(z);
              r.samples_examined += p.cells[tc].size() * p.cells[zc].size();
              if (!c.R(j, p.ext.lo[tc], p.ext.hi[zc])) {
                r.holds = false;
                const StateId found[6] = {rr, s, p.ext.lo[tc], x, y, p.ext.hi[zc]};
                r.witness = make_witness(c, i, j, found);
                finish(r);
                return r;
              }
            }
          }
        }
      }
    }
    finish(r);
    return r;
  }

  std::vector<Plane> planes;
  for (const auto& [i, j] : pairs) planes.push_back(make_plane(c, i, j));
  std::mt19937_64 rng(options.mode.seed);
  for (std::size_t k = 0; k < options.mode.samples; ++k) {
    const std::size_t pick = uniform_index(rng, pairs.size());
    const auto [i, j] = pairs[pick];
    const Plane& p = planes[pick];
    const StateId rr = uniform_index(rng, states);
    const StateId x = uniform_index(rng, states);
    const auto& iclass = p.by_i.members[p.by_i.group_of[x]];
    const auto& jclass = p.by_j.members[p.by_j.group_of[rr]];
    const StateId s = iclass[uniform_index(rng, iclass.size())];
    const StateId y = jclass[uniform_index(rng, jclass.size())];
    ++r.tuples_scanned;
    const auto t = p.cell(rr, s, c, i, j), z = p.cell(y, x, c, i, j);
    if (t < 0 || z < 0) continue;
    const auto& tcell = p.cells[static_cast<std::size_t>(t)];
    const auto& zcell = p.cells[static_cast<std::size_t>(z)];
    const StateId ts = tcell[uniform_index(rng, tcell.size())];
    const StateId zs = zcell[uniform_index(rng, zcell.size())];
    if (!c.R(j, rr, x) || !c.R(j, s, y)) continue;
    ++r.samples_examined;
    if (!c.R(j, ts, zs)) {
      r.holds = false;
      const StateId found[6] = {rr, s, ts, x, y, zs};
      r.witness = make_witness(c, i, j, found);
      break;
    }
  }
  finish(r);
  return r;
}

}  // namespace succession
