#include "succession/cone.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace succession;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("standard basis") {
  const std::vector<RationalVector> gens{vec({1, 0}), vec({0, 1})};
  const auto cert = cone_membership(vec({1, 1}), gens);
  CHECK(cert.feasible);
  CHECK(cert.weights == vec({1, 1}));
  CHECK(verify_certificate(cert, vec({1, 1}), gens));
}

TEST_CASE("outsider preference outside the coalition cone") {
  // p2 = (-1,2) against v2 = (0,1) and p1 = (2,-1).
  const std::vector<RationalVector> gens{vec({0, 1}), vec({2, -1})};
  const auto cert = cone_membership(vec({-1, 2}), gens);
  CHECK_FALSE(cert.feasible);
  CHECK(verify_certificate(cert, vec({-1, 2}), gens));
  CHECK(cert.separator == vec({-1, 0}));
}

TEST_CASE("zero target and empty generator sets") {
  CHECK(cone_membership(vec({0, 0}), {vec({1, 2}), vec({-3, 1})}).weights == vec({0, 0}));
  CHECK(cone_membership(vec({0, 0, 0}), {}).feasible);
  const auto cert = cone_membership(vec({1, -2}), {});
  CHECK_FALSE(cert.feasible);
  CHECK(verify_certificate(cert, vec({1, -2}), {}));
  CHECK_THROWS_AS(cone_membership(vec({1, 2}), {vec({1})}), std::invalid_argument);
}

TEST_CASE("tampered certificates are rejected") {
  const std::vector<RationalVector> gens{vec({1, 0}), vec({0, 1})};
  ConeCertificate bad{true, vec({2, 1}), {}};
  CHECK_FALSE(verify_certificate(bad, vec({1, 1}), gens));
  ConeCertificate neg{true, vec({-1, 1}), {}};
  CHECK_FALSE(verify_certificate(neg, vec({-1, 1}), gens));
  ConeCertificate sep{false, {}, vec({1, 1})};
  CHECK_FALSE(verify_certificate(sep, vec({1, 1}), gens));
}

TEST_CASE("agrees with basic-solution enumeration") {
  std::mt19937_64 rng(11);
  int feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = static_cast<std::size_t>(oracles::uniform(rng, 1, 3));
    const auto g = static_cast<std::size_t>(oracles::uniform(rng, 0, 5));
    RationalVector target(m);
    for (auto& v : target) v = oracles::uniform(rng, -3, 3);
    std::vector<RationalVector> gens(g, RationalVector(m));
    for (auto& gen : gens) {
      for (auto& v : gen) v = oracles::uniform(rng, -2, 2);
    }
    const auto cert = cone_membership(target, gens);
    CHECK(verify_certificate(cert, target, gens));
    CHECK(cert.feasible == oracles::cone_by_basic_solutions(target, gens).has_value());
    feasible += cert.feasible;
  }
  CHECK(feasible > 100);
  CHECK(feasible < 450);
}
