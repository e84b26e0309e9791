#include "succession/generators.hpp"

#include "succession/linalg.hpp"
#include "succession/random.hpp"

namespace succession {

namespace {

Rational draw_int(std::mt19937_64& rng, int lo, int hi) {
  return Rational(lo + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1))));
}

Rational draw_fraction(std::mt19937_64& rng) {
  const Rational num = draw_int(rng, -4, 4);
  return num / draw_int(rng, 1, 3);
}

bool strictly_dominant(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational off(0);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != i) off += abs(m[i][j]);
    }
    if (m[i][i] <= off) return false;
  }
  return true;
}

}  // namespace

StateGrid integer_grid(std::size_t n, std::size_t levels) {
  RationalVector axis;
  for (std::size_t l = 0; l < levels; ++l) axis.emplace_back(static_cast<long>(l));
  return StateGrid(std::vector<RationalVector>(n, axis));
}

std::vector<Expr> coordinate_interests(std::size_t n) {
  std::vector<Expr> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Expr::coordinate(i));
  return out;
}

AffineRepresentation random_certifiable_representation(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    RationalMatrix m(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 2;
      const std::size_t pick = uniform_index(rng, n);  // pick == i leaves the row diagonal
      if (pick != i) m[i][pick] = -1;
    }
    const RationalMatrix base = inverse(m);
    if (!strictly_dominant(base)) continue;
    AffineRepresentation repr;
    repr.A = base;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scale = draw_int(rng, 1, 6) / draw_int(rng, 1, 2);
      for (auto& entry : repr.A[i]) entry *= scale;
      repr.kappa.push_back(draw_int(rng, -2, 2));
    }
    return repr;
  }
}

AffineRepresentation random_nonsingular_representation(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    AffineRepresentation repr;
    repr.A.assign(n, RationalVector(n));
    for (auto& row : repr.A) {
      for (auto& entry : row) entry = draw_fraction(rng);
    }
    for (std::size_t i = 0; i < n; ++i) repr.kappa.push_back(draw_fraction(rng));
    try {
      derive_coefficients(repr);
      return repr;
    } catch (const DerivationError&) {
    }
  }
}

ConeProblem random_cone_problem(std::mt19937_64& rng) {
  const std::size_t n = 1 + uniform_index(rng, 3);
  const std::size_t count = uniform_index(rng, 5);
  ConeProblem out;
  for (std::size_t g = 0; g < count; ++g) {
    RationalVector v(n);
    for (auto& e : v) e = draw_int(rng, -2, 2);
    out.generators.push_back(std::move(v));
  }
  out.target.assign(n, Rational(0));
  if (uniform_index(rng, 2) == 0) {
    for (const auto& g : out.generators) {
      const Rational w = draw_int(rng, 0, 3);
      for (std::size_t k = 0; k < n; ++k) out.target[k] += w * g[k];
    }
  } else {
    for (auto& e : out.target) e = draw_int(rng, -3, 3);
  }
  return out;
}

}  // namespace succession
