#pragma once

#include "succession/representation.hpp"

#include <random>

namespace succession {

/// Grid {0, ..., levels-1}^n.
StateGrid integer_grid(std::size_t n, std::size_t levels);

/// v_i = x_i.
std::vector<Expr> coordinate_interests(std::size_t n);

/// A = diag(r) M^{-1} for a random diagonally dominant Z-matrix M with entries
/// in {2, -1, 0}, redrawn until M^{-1} is strictly diagonally dominant by rows.
/// The result has positive diagonal, nonnegative off-diagonal entries, strict
/// diagonal dominance, and its explicit form passes the sign checks. kappa is
/// drawn from the integers -2..2.
AffineRepresentation random_certifiable_representation(std::mt19937_64& rng, std::size_t n);

/// Entries k/q with k in -4..4 and q in 1..3, redrawn until A is nonsingular
/// and every gamma_ii differs from 1. kappa entries are drawn the same way.
AffineRepresentation random_nonsingular_representation(std::mt19937_64& rng, std::size_t n);

struct ConeProblem {
  RationalVector target;
  std::vector<RationalVector> generators;
};

/// Dimension 1..3, 0..4 generators with integer entries in -2..2. Half the
/// targets are built as nonnegative combinations of the generators.
ConeProblem random_cone_problem(std::mt19937_64& rng);

}  // namespace succession
