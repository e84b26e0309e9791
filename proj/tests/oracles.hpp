#pragma once

// Independent reference computations used to cross-check library answers.

#include "succession/linalg.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracles {

using namespace succession;

// Uniform integer in [lo, hi] by rejection, so sequences do not depend on the
// standard library's distribution implementation.
inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

// Caratheodory: a point of a finitely generated cone is a nonnegative combination
// of linearly independent generators, so trying every independent subset decides
// membership exactly.
inline std::optional<RationalVector> cone_by_basic_solutions(const RationalVector& target,
                                                             const std::vector<RationalVector>& gens) {
  const std::size_t m = target.size();
  const std::size_t g = gens.size();
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < g; ++j) {
      if (mask >> j & 1u) cols.push_back(j);
    }
    if (cols.size() > m) continue;
    RationalMatrix sub(m, RationalVector(cols.size()));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = gens[cols[c]][r];
    }
    if (rank(sub) != cols.size()) continue;
    RationalVector lambda;
    if (!cols.empty()) {
      const RationalMatrix st = transpose(sub);
      lambda = solve(multiply(st, sub), multiply(st, target));
    }
    RationalVector back(m);
    bool nonneg = true;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      nonneg = nonneg && lambda[c] >= 0;
      for (std::size_t r = 0; r < m; ++r) back[r] += lambda[c] * sub[r][c];
    }
    if (!nonneg || back != target) continue;
    RationalVector weights(g);
    for (std::size_t c = 0; c < cols.size(); ++c) weights[cols[c]] = lambda[c];
    return weights;
  }
  return std::nullopt;
}

// Grid over weights k/4, k = 0..16: any hit proves membership.
inline bool cone_by_weight_grid(const std::vector<std::int64_t>& target,
                                const std::vector<std::vector<std::int64_t>>& gens) {
  const std::size_t g = gens.size();
  std::vector<std::int64_t> k(g, 0);
  while (true) {
    bool match = true;
    for (std::size_t r = 0; r < target.size() && match; ++r) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < g; ++j) s += k[j] * gens[j][r];
      match = s == 4 * target[r];
    }
    if (match) return true;
    std::size_t pos = 0;
    while (pos < g && k[pos] == 16) k[pos++] = 0;
    if (pos == g) return false;
    ++k[pos];
  }
}

}  // namespace oracles

#include "succession/core.hpp"

namespace oracles {

// Definitional scans: every tuple of states, no grouping or aggregation.

inline bool all_E_except(const Community& c, Role role, StateId x, StateId y, std::size_t a, std::size_t b) {
  for (std::size_t g = 0; g < c.agent_count(); ++g) {
    if (g != a && g != b && !c.equiv(g, role, x, y)) return false;
  }
  return true;
}

inline bool separability_violated(const Community& c) {
  const std::size_t n = c.agent_count(), S = c.state_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t J = 0; J < (1u << n); ++J) {
      for (StateId w = 0; w < S; ++w) {
        for (StateId x = 0; x < S; ++x) {
          for (StateId y = 0; y < S; ++y) {
            for (StateId z = 0; z < S; ++z) {
              bool hyp = true;
              for (std::size_t a = 0; a < n && hyp; ++a) {
                hyp = (J >> a & 1u) ? c.E(a, w, y) && c.E(a, x, z) : c.E(a, w, x) && c.E(a, y, z);
              }
              if (hyp && c.R(i, w, x) != c.R(i, y, z)) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

inline bool guard(const Community& c, std::size_t i, std::size_t j) {
  for (StateId x = 0; x < c.state_count(); ++x) {
    for (StateId y = 0; y < c.state_count(); ++y) {
      if (c.W(i, x, y) && c.W(j, x, y) && !c.R(j, x, y)) return false;
    }
  }
  return true;
}

inline bool double_cancellation_violated(const Community& c) {
  const std::size_t n = c.agent_count(), S = c.state_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !guard(c, i, j)) continue;
      for (StateId r = 0; r < S; ++r)
        for (StateId x = 0; x < S; ++x) {
          if (!c.R(j, r, x)) continue;
          for (StateId s = 0; s < S; ++s) {
            if (!c.E(i, x, s)) continue;
            for (StateId y = 0; y < S; ++y) {
              if (!c.R(j, s, y) || !c.E(j, r, y)) continue;
              for (StateId t = 0; t < S; ++t) {
                if (!c.E(i, r, t) || !c.E(j, s, t)) continue;
                for (StateId z = 0; z < S; ++z) {
                  if (c.E(i, y, z) && c.E(j, x, z) && !c.R(j, t, z)) return true;
                }
              }
            }
          }
        }
    }
  }
  return false;
}

inline bool in_interest_support(const Community& c, std::size_t i, std::size_t j) {
  for (StateId x = 0; x < c.state_count(); ++x)
    for (StateId y = 0; y < c.state_count(); ++y)
      if (c.P(i, x, y) && all_E_except(c, Role::Interest, x, y, j, j)) return true;
  return false;
}

inline bool in_preference_support(const Community& c, std::size_t i, std::size_t j) {
  for (StateId x = 0; x < c.state_count(); ++x)
    for (StateId y = 0; y < c.state_count(); ++y)
      if (c.E(i, x, y) && c.P(j, x, y) && all_E_except(c, Role::Preference, x, y, i, j)) return true;
  return false;
}

// interest == true: interest cardinality; otherwise preference cardinality.
inline bool cardinality_violated(const Community& c, bool interest) {
  const std::size_t n = c.agent_count(), S = c.state_count();
  const Role link = interest ? Role::Interest : Role::Preference;
  // Context agreement between the two states of a side agent a.
  const auto same_context = [&](std::size_t a, std::size_t j, StateId p, StateId q) {
    if (interest) return all_E_except(c, Role::Interest, p, q, j, j);
    return c.E(a, p, q) && all_E_except(c, Role::Preference, p, q, a, j);
  };
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool active = interest ? in_interest_support(c, h, j) && in_interest_support(c, i, j)
                                     : in_preference_support(c, h, j) && in_preference_support(c, i, j);
        if (!active) continue;
        for (StateId wh = 0; wh < S; ++wh)
          for (StateId yh = 0; yh < S; ++yh) {
            if (!c.R(h, wh, yh)) continue;
            for (StateId xh = 0; xh < S; ++xh) {
              if (!same_context(h, j, wh, xh)) continue;
              for (StateId zh = 0; zh < S; ++zh) {
                if (!same_context(h, j, yh, zh) || !c.R(h, zh, xh)) continue;
                for (StateId wi = 0; wi < S; ++wi) {
                  if (!c.equiv(j, link, wh, wi)) continue;
                  for (StateId yi = 0; yi < S; ++yi) {
                    if (!c.equiv(j, link, yh, yi) || !c.R(i, yi, wi)) continue;
                    for (StateId xi = 0; xi < S; ++xi) {
                      if (!c.equiv(j, link, xh, xi) || !same_context(i, j, wi, xi)) continue;
                      for (StateId zi = 0; zi < S; ++zi) {
                        if (c.equiv(j, link, zh, zi) && same_context(i, j, yi, zi) && !c.R(i, zi, xi)) return true;
                      }
                    }
                  }
                }
              }
            }
          }
      }
  return false;
}

}  // namespace oracles
