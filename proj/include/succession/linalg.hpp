#pragma once

#include "succession/rational.hpp"

#include <stdexcept>

namespace succession {

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector multiply(const RationalMatrix& a, const RationalVector& x);
RationalMatrix transpose(const RationalMatrix& a);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Gauss-Jordan elimination in exact arithmetic. Throws SingularMatrixError.
RationalMatrix inverse(const RationalMatrix& a);

/// Solves a x = b for square nonsingular a. Throws SingularMatrixError.
RationalVector solve(const RationalMatrix& a, const RationalVector& b);

/// Row rank of an arbitrary (possibly non-square) matrix.
std::size_t rank(RationalMatrix a);

/// Throws std::invalid_argument unless every row has `cols` entries.
void require_shape(const RationalMatrix& a, std::size_t rows, std::size_t cols, const char* what);

}  // namespace succession
