#include "succession/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace succession;

namespace {

RationalMatrix ints(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m;
  for (auto row : rows) {
    m.emplace_back();
    for (int v : row) m.back().emplace_back(v);
  }
  return m;
}

}  // namespace

TEST_CASE("inverse of small matrices") {
  const RationalMatrix b = inverse(ints({{2, -1}, {-1, 2}}));
  CHECK(b == RationalMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}});
  const RationalMatrix t = inverse(ints({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
  CHECK(t[0][0] == Rational(3, 4));
  CHECK(t[0][2] == Rational(1, 4));
  CHECK(t[1][1] == 1);
  CHECK(t[0][1] == Rational(-1, 2));
  CHECK_THROWS_AS(inverse(ints({{1, 1}, {1, 1}})), SingularMatrixError);
  CHECK_THROWS_AS(inverse(ints({{1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("random inverses multiply to the identity") {
  std::mt19937_64 rng(5);
  int nonsingular = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracles::uniform(rng, 1, 4));
    RationalMatrix a(n, RationalVector(n));
    for (auto& row : a) {
      for (auto& v : row) v = Rational(oracles::uniform(rng, -3, 3), oracles::uniform(rng, 1, 3));
    }
    if (rank(a) < n) {
      CHECK_THROWS_AS(inverse(a), SingularMatrixError);
      continue;
    }
    ++nonsingular;
    const RationalMatrix b = inverse(a);
    CHECK(multiply(a, b) == identity_matrix(n));
    CHECK(multiply(b, a) == identity_matrix(n));
    RationalVector rhs(n);
    for (auto& v : rhs) v = oracles::uniform(rng, -5, 5);
    CHECK(multiply(a, solve(a, rhs)) == rhs);
  }
  CHECK(nonsingular > 100);
}

TEST_CASE("rank") {
  CHECK(rank(ints({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(ints({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
  CHECK(rank(ints({{0, 0}})) == 0);
  CHECK(rank(identity_matrix(4)) == 4);
}
