#include "axioms_internal.hpp"

#include <sstream>

namespace succession {

using namespace detail;

namespace {

// One side (h or i) of a cardinality quadruple: states are cut into cells by a
// context (what must stay fixed between w and x, or y and z) and a link level
// (j's utility, which must match across the two sides).
struct Side {
  std::size_t agent = 0;
  Grouping context;
  std::size_t links = 0;
  std::vector<std::ptrdiff_t> cell_of;  // context * links + link
  Extremes ext;                          // of the side agent's preference, per cell

  std::ptrdiff_t cell(std::size_t ctx, std::size_t link) const { return cell_of[ctx * links + link]; }
};

Side make_side(const Community& c, std::size_t agent, std::size_t j, Role link_role,
               const std::vector<std::pair<std::size_t, Role>>& context_keys) {
  Side s;
  s.agent = agent;
  s.context = group_by(c, context_keys);
  s.links = c.level_count(j, link_role);
  s.cell_of.assign(s.context.size() * s.links, -1);
  Grouping cells;
  for (StateId st = 0; st < c.state_count(); ++st) {
    auto& slot = s.cell_of[s.context.group_of[st] * s.links + c.level(j, link_role, st)];
    if (slot < 0) {
      slot = static_cast<std::ptrdiff_t>(cells.members.size());
      cells.members.emplace_back();
    }
    cells.members[static_cast<std::size_t>(slot)].push_back(st);
  }
  s.ext = preference_extremes(c, agent, cells);
  return s;
}

std::size_t quad_index(std::size_t L, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return ((a * L + b) * L + c) * L + d;
}

// For every link quadruple (a, b, c, d), the first context pair in which the
// h-side premises "w R_h y" and "z R_h x" can be met; -1 when none.
std::vector<std::ptrdiff_t> h_premises(const Community& c, const Side& h) {
  const std::size_t L = h.links, C = h.context.size();
  std::vector<std::ptrdiff_t> first(L * L * L * L, -1);
  for (std::size_t c1 = 0; c1 < C; ++c1) {
    for (std::size_t c2 = 0; c2 < C; ++c2) {
      for (std::size_t a = 0; a < L; ++a) {
        const auto wa = h.cell(c1, a);
        if (wa < 0) continue;
        for (std::size_t cc = 0; cc < L; ++cc) {
          const auto yc = h.cell(c2, cc);
          if (yc < 0 || !c.R(h.agent, h.ext.hi[wa], h.ext.lo[yc])) continue;
          for (std::size_t d = 0; d < L; ++d) {
            const auto zd = h.cell(c2, d);
            if (zd < 0) continue;
            for (std::size_t b = 0; b < L; ++b) {
              const auto xb = h.cell(c1, b);
              if (xb < 0 || !c.R(h.agent, h.ext.hi[zd], h.ext.lo[xb])) continue;
              auto& slot = first[quad_index(L, a, b, cc, d)];
              if (slot < 0) slot = static_cast<std::ptrdiff_t>(c1 * C + c2);
            }
          }
        }
      }
    }
  }
  return first;
}

struct ISide {
  std::vector<bool> premise;            // "y R_i w" can be met
  std::vector<std::ptrdiff_t> violation;  // first context pair where also "not z R_i x"
};

ISide i_side(const Community& c, const Side& s) {
  const std::size_t L = s.links, C = s.context.size();
  ISide out{std::vector<bool>(L * L * L * L, false), std::vector<std::ptrdiff_t>(L * L * L * L, -1)};
  for (std::size_t c3 = 0; c3 < C; ++c3) {
    for (std::size_t c4 = 0; c4 < C; ++c4) {
      for (std::size_t a = 0; a < L; ++a) {
        const auto wa = s.cell(c3, a);
        if (wa < 0) continue;
        for (std::size_t cc = 0; cc < L; ++cc) {
          const auto yc = s.cell(c4, cc);
          if (yc < 0 || !c.R(s.agent, s.ext.hi[yc], s.ext.lo[wa])) continue;
          for (std::size_t b = 0; b < L; ++b) {
            const auto xb = s.cell(c3, b);
            if (xb < 0) continue;
            for (std::size_t d = 0; d < L; ++d) {
              const auto zd = s.cell(c4, d);
              if (zd < 0) continue;
              const std::size_t q = quad_index(L, a, b, cc, d);
              out.premise[q] = true;
              if (out.violation[q] < 0 && !c.R(s.agent, s.ext.lo[zd], s.ext.hi[xb])) {
                out.violation[q] = static_cast<std::ptrdiff_t>(c3 * C + c4);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

struct Triple {
  std::size_t h, i, j;
};

class CardinalityScan {
 public:
  CardinalityScan(const Community& c, Condition condition) : c_(c) {
    interest_ = condition == Condition::InterestCardinality;
    for (std::size_t a = 0; a < c.agent_count(); ++a) {
      support_.push_back(interest_ ? detect_support(c, a) : detect_preference_support(c, a));
    }
    for (std::size_t h = 0; h < c.agent_count(); ++h) {
      for (std::size_t i = 0; i < c.agent_count(); ++i) {
        for (std::size_t j = 0; j < c.agent_count(); ++j) {
          if (in_support(support_[h], j) && in_support(support_[i], j)) triples_.push_back({h, i, j});
        }
      }
    }
  }

  const std::vector<Triple>& triples() const { return triples_; }
  const std::vector<SupportSet>& support() const { return support_; }

  Side side(std::size_t agent, std::size_t j) const {
    std::vector<std::pair<std::size_t, Role>> keys;
    if (interest_) {
      keys = interests_except(c_, {j});
    } else {
      keys.emplace_back(agent, Role::Interest);
      for (std::size_t g = 0; g < c_.agent_count(); ++g) {
        if (g != agent && g != j) keys.emplace_back(g, Role::Preference);
      }
    }
    return make_side(c_, agent, j, interest_ ? Role::Interest : Role::Preference, keys);
  }

  Witness witness(const Triple& t, const Side& hs, const Side& is, std::size_t L, std::size_t q, std::size_t hctx,
                  std::size_t ictx) const {
    const std::size_t d = q % L, cc = q / L % L, b = q / (L * L) % L, a = q / (L * L * L);
    const std::size_t c1 = hctx / hs.context.size(), c2 = hctx % hs.context.size();
    const std::size_t c3 = ictx / is.context.size(), c4 = ictx % is.context.size();
    const auto hc = [&](std::size_t ctx, std::size_t link) { return static_cast<std::size_t>(hs.cell(ctx, link)); };
    const auto ic = [&](std::size_t ctx, std::size_t link) { return static_cast<std::size_t>(is.cell(ctx, link)); };
    Witness w;
    w.agents = {{"h", t.h}, {"i", t.i}, {"j", t.j}};
    w.states = {
        named(c_, "w_h", hs.ext.hi[hc(c1, a)]), named(c_, "x_h", hs.ext.lo[hc(c1, b)]),
        named(c_, "y_h", hs.ext.lo[hc(c2, cc)]), named(c_, "z_h", hs.ext.hi[hc(c2, d)]),
        named(c_, "w_i", is.ext.lo[ic(c3, a)]), named(c_, "x_i", is.ext.hi[ic(c3, b)]),
        named(c_, "y_i", is.ext.hi[ic(c4, cc)]), named(c_, "z_i", is.ext.lo[ic(c4, d)]),
    };
    return w;
  }

 private:
  const Community& c_;
  bool interest_ = true;
  std::vector<SupportSet> support_;
  std::vector<Triple> triples_;
};

void note_enabling_hypothesis(const CardinalityScan& scan, CheckResult& r) {
  std::vector<std::string> unmet;
  for (const auto& t : scan.triples()) {
    const auto has_other = [&](const SupportSet& s) {
      return s.members.size() > 1 || (s.members.size() == 1 && s.members[0] != t.j);
    };
    if (!has_other(scan.support()[t.h]) || !has_other(scan.support()[t.i])) {
      std::ostringstream o;
      o << "(h=" << t.h + 1 << ",i=" << t.i + 1 << ",j=" << t.j + 1 << ")";
      unmet.push_back(o.str());
    }
  }
  if (scan.triples().empty()) return;
  if (unmet.empty()) {
    r.notes.push_back("enabling hypothesis (supports of h and i reach beyond j) met for every triple");
  } else {
    std::string text = "enabling hypothesis (supports of h and i reach beyond j) unmet for";
    for (const auto& u : unmet) text += " " + u;
    r.notes.push_back(text);
  }
}

CheckResult exhaustive(const Community& c, Condition condition, const CheckOptions& options) {
  CheckResult r = start(condition, options);
  note_inexact_matching(c, r);
  const CardinalityScan scan(c, condition);
  if (condition == Condition::InterestCardinality) note_enabling_hypothesis(scan, r);

  std::map<std::pair<std::size_t, std::size_t>, Side> sides;
  const auto side = [&](std::size_t agent, std::size_t j) -> const Side& {
    auto it = sides.find({agent, j});
    if (it == sides.end()) it = sides.emplace(std::make_pair(agent, j), scan.side(agent, j)).first;
    return it->second;
  };

  double work = 0;
  for (const auto& t : scan.triples()) {
    const double L = static_cast<double>(side(t.h, t.j).links);
    const double ch = static_cast<double>(side(t.h, t.j).context.size());
    const double ci = static_cast<double>(side(t.i, t.j).context.size());
    work += L * L * L * L * (ch * ch + ci * ci);
  }
  require_budget(options, work, condition);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::ptrdiff_t>> h_cache;
  std::map<std::pair<std::size_t, std::size_t>, ISide> i_cache;
  for (const auto& t : scan.triples()) {
    const Side& hs = side(t.h, t.j);
    const Side& is = side(t.i, t.j);
    const std::size_t L = hs.links;
    auto hit = h_cache.find({t.h, t.j});
    if (hit == h_cache.end()) hit = h_cache.emplace(std::make_pair(t.h, t.j), h_premises(c, hs)).first;
    auto iit = i_cache.find({t.i, t.j});
    if (iit == i_cache.end()) iit = i_cache.emplace(std::make_pair(t.i, t.j), i_side(c, is)).first;
    const auto& hp = hit->second;
    const auto& ip = iit->second;
    const double ch = static_cast<double>(hs.context.size()), ci = static_cast<double>(is.context.size());
    r.tuples_scanned += static_cast<std::size_t>(static_cast<double>(L * L * L * L) * (ch * ch + ci * ci));
    for (std::size_t q = 0; q < hp.size(); ++q) {
      if (hp[q] < 0 || !ip.premise[q]) continue;
      ++r.samples_examined;
      if (ip.violation[q] >= 0) {
        r.holds = false;
        r.witness = scan.witness(t, hs, is, L, q, static_cast<std::size_t>(hp[q]),
                                 static_cast<std::size_t>(ip.violation[q]));
        finish(r);
        return r;
      }
    }
  }
  if (scan.triples().empty()) r.notes.push_back("no agent j lies in two supports");
  finish(r);
  return r;
}

CheckResult sampled(const Community& c, Condition condition, const CheckOptions& options) {
  CheckResult r = start(condition, options);
  const CardinalityScan scan(c, condition);
  if (condition == Condition::InterestCardinality) note_enabling_hypothesis(scan, r);
  if (scan.triples().empty()) {
    r.notes.push_back("no agent j lies in two supports");
    finish(r);
    return r;
  }
  std::map<std::pair<std::size_t, std::size_t>, Side> sides;
  const auto side = [&](std::size_t agent, std::size_t j) -> const Side& {
    auto it = sides.find({agent, j});
    if (it == sides.end()) it = sides.emplace(std::make_pair(agent, j), scan.side(agent, j)).first;
    return it->second;
  };
  // Cells hold state lists; rebuild them per side on demand.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<StateId>>> cell_states;
  const auto cells = [&](std::size_t agent, std::size_t j, const Side& s) -> const std::vector<std::vector<StateId>>& {
    auto it = cell_states.find({agent, j});
    if (it != cell_states.end()) return it->second;
    std::vector<std::vector<StateId>> out(s.ext.lo.size());
    for (StateId st = 0; st < c.state_count(); ++st) {
      const Role link = condition == Condition::InterestCardinality ? Role::Interest : Role::Preference;
      out[static_cast<std::size_t>(s.cell(s.context.group_of[st], c.level(j, link, st)))].push_back(st);
    }
    return cell_states.emplace(std::make_pair(agent, j), std::move(out)).first->second;
  };

  std::mt19937_64 rng(options.mode.seed);
  for (std::size_t k = 0; k < options.mode.samples; ++k) {
    const Triple t = scan.triples()[uniform_index(rng, scan.triples().size())];
    const Side& hs = side(t.h, t.j);
    const Side& is = side(t.i, t.j);
    const auto& hcells = cells(t.h, t.j, hs);
    const auto& icells = cells(t.i, t.j, is);
    const std::size_t L = hs.links;
    std::size_t link[4], ctx[4];
    for (auto& l : link) l = uniform_index(rng, L);
    ctx[0] = uniform_index(rng, hs.context.size());
    ctx[1] = uniform_index(rng, hs.context.size());
    ctx[2] = uniform_index(rng, is.context.size());
    ctx[3] = uniform_index(rng, is.context.size());
    ++r.tuples_scanned;
    // w and x share the first context, y and z the second; links a,b,c,d go to w,x,y,z.
    const std::ptrdiff_t hcell[4] = {hs.cell(ctx[0], link[0]), hs.cell(ctx[0], link[1]), hs.cell(ctx[1], link[2]),
                                     hs.cell(ctx[1], link[3])};
    const std::ptrdiff_t icell[4] = {is.cell(ctx[2], link[0]), is.cell(ctx[2], link[1]), is.cell(ctx[3], link[2]),
                                     is.cell(ctx[3], link[3])};
    bool present = true;
    for (int q = 0; q < 4; ++q) present = present && hcell[q] >= 0 && icell[q] >= 0;
    if (!present) continue;
    StateId hst[4], ist[4];
    for (int q = 0; q < 4; ++q) {
      const auto& hc = hcells[static_cast<std::size_t>(hcell[q])];
      const auto& ic = icells[static_cast<std::size_t>(icell[q])];
      hst[q] = hc[uniform_index(rng, hc.size())];
      ist[q] = ic[uniform_index(rng, ic.size())];
    }
    if (!c.R(t.h, hst[0], hst[2]) || !c.R(t.h, hst[3], hst[1]) || !c.R(t.i, ist[2], ist[0])) continue;
    ++r.samples_examined;
    if (!c.R(t.i, ist[3], ist[1])) {
      r.holds = false;
      r.witness.agents = {{"h", t.h}, {"i", t.i}, {"j", t.j}};
      const char* names[4] = {"w", "x", "y", "z"};
      for (int q = 0; q < 4; ++q) r.witness.states.push_back(named(c, std::string(names[q]) + "_h", hst[q]));
      for (int q = 0; q < 4; ++q) r.witness.states.push_back(named(c, std::string(names[q]) + "_i", ist[q]));
      break;
    }
  }
  finish(r);
  return r;
}

CheckResult cardinality(const Community& c, Condition condition, const CheckOptions& options) {
  if (auto hinted = apply_hints(c, condition, options)) return *hinted;
  if (options.mode.kind == CheckMode::Kind::Sampled) return sampled(c, condition, options);
  return exhaustive(c, condition, options);
}

}  // namespace

CheckResult check_interest_cardinality(const Community& c, const CheckOptions& options) {
  return cardinality(c, Condition::InterestCardinality, options);
}

CheckResult check_preference_cardinality(const Community& c, const CheckOptions& options) {
  return cardinality(c, Condition::PreferenceCardinality, options);
}

}  // namespace succession
