#include "succession/cone.hpp"

#include "succession/linalg.hpp"

#include <optional>
#include <stdexcept>

namespace succession {

ConeCertificate cone_membership(const RationalVector& target, const std::vector<RationalVector>& generators) {
  const std::size_t m = target.size();
  const std::size_t g = generators.size();
  for (const auto& gen : generators) {
    if (gen.size() != m) throw std::invalid_argument("generator length differs from target length");
  }

  // Rows are flipped so the right-hand side is nonnegative; one artificial per row.
  std::vector<int> sign(m, 1);
  const std::size_t cols = g + m;
  RationalMatrix tab(m, RationalVector(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (target[r] < 0) sign[r] = -1;
    for (std::size_t j = 0; j < g; ++j) tab[r][j] = sign[r] * generators[j][r];
    tab[r][g + r] = 1;
    tab[r][cols] = sign[r] * target[r];
    basis[r] = g + r;
  }
  const auto cost = [&](std::size_t j) { return j >= g ? Rational(1) : Rational(0); };

  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols && !entering; ++j) {
      Rational reduced = cost(j);
      for (std::size_t r = 0; r < m; ++r) reduced -= cost(basis[r]) * tab[r][j];
      if (reduced < 0) entering = j;
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][e] <= 0) continue;
      const Rational ratio = tab[r][cols] / tab[r][e];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase 1 is bounded below by zero, so some row always limits the step.
    if (!leave) throw std::logic_error("unbounded phase-1 objective");

    const std::size_t pr = *leave;
    const Rational pivot = tab[pr][e];
    for (auto& v : tab[pr]) v /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr || tab[r][e] == 0) continue;
      const Rational factor = tab[r][e];
      for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= factor * tab[pr][c];
    }
    basis[pr] = e;
  }

  Rational objective = 0;
  for (std::size_t r = 0; r < m; ++r) objective += cost(basis[r]) * tab[r][cols];

  ConeCertificate cert;
  if (objective == 0) {
    cert.feasible = true;
    cert.weights.assign(g, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < g) cert.weights[basis[r]] = tab[r][cols];
    }
    return cert;
  }
  // Artificial columns hold the basis inverse, so y = c_B B^-1 is read off them.
  cert.separator.assign(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    Rational y = 0;
    for (std::size_t r = 0; r < m; ++r) y += cost(basis[r]) * tab[r][g + k];
    cert.separator[k] = sign[k] * y;
  }
  return cert;
}

bool verify_certificate(const ConeCertificate& cert, const RationalVector& target,
                        const std::vector<RationalVector>& generators) {
  if (cert.feasible) {
    if (cert.weights.size() != generators.size()) return false;
    RationalVector sum(target.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (cert.weights[j] < 0) return false;
      for (std::size_t k = 0; k < target.size(); ++k) sum[k] += cert.weights[j] * generators[j][k];
    }
    return sum == target;
  }
  if (cert.separator.size() != target.size()) return false;
  for (const auto& gen : generators) {
    if (dot(cert.separator, gen) > 0) return false;
  }
  return dot(cert.separator, target) > 0;
}

}  // namespace succession
