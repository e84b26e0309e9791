#pragma once

#include "succession/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace succession;

inline RationalVector axis(std::initializer_list<const char*> levels) {
  RationalVector out;
  for (const char* l : levels) out.push_back(parse_rational(l));
  return out;
}

inline Community make(std::vector<RationalVector> axes, const std::vector<std::pair<std::string, std::string>>& vp,
                      Rational tolerance = Rational(0)) {
  const std::size_t d = axes.size();
  std::vector<AgentSpec> agents;
  for (std::size_t k = 0; k < vp.size(); ++k) {
    agents.push_back({k + 1, parse_expr(vp[k].first, d), parse_expr(vp[k].second, d)});
  }
  return Community(StateGrid(std::move(axes)), std::move(agents), std::move(tolerance));
}

// Four agents on one coordinate: 1 and 3 want x1 low but prefer it high, 2 and 4 the reverse.
inline Community degenerate() {
  return make({axis({"0", "1/4", "1/2", "3/4", "1"})},
              {{"-x1", "x1"}, {"x1", "-x1"}, {"-x1", "x1"}, {"x1", "-x1"}});
}

// p1 = 2 v1 - v2, p2 = 2 v2 - v1 on the unit square.
inline Community antagonistic(std::vector<RationalVector> axes = {axis({"0", "1"}), axis({"0", "1"})}) {
  return make(std::move(axes), {{"x1", "2*x1 - x2"}, {"x2", "2*x2 - x1"}});
}

// v_i = x_i, p_i = min(x_i/2, x_j, x_k).
inline Community min_utility(std::initializer_list<const char*> levels = {"0", "1", "2", "3", "7"}) {
  return make({axis(levels), axis(levels), axis(levels)},
              {{"x1", "min(x1/2, x2, x3)"}, {"x2", "min(x2/2, x1, x3)"}, {"x3", "min(x3/2, x1, x2)"}});
}

inline State st(std::initializer_list<int> coords) {
  State s;
  for (int c : coords) s.coords.emplace_back(c);
  return s;
}

}  // namespace fixtures
