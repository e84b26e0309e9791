#pragma once

#include "succession/axioms.hpp"
#include "succession/cone.hpp"
#include "succession/core.hpp"
#include "succession/relations.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace succession {

/// p(x) = A v(x) + kappa.
struct AffineRepresentation {
  RationalMatrix A;
  RationalVector kappa;

  std::size_t size() const noexcept { return A.size(); }
};

/// Builds the community whose preference of agent i is sum_j A[i][j] v_j + kappa[i].
/// Agent ids are 1..n. Throws std::invalid_argument on shape mismatch.
Community synthesize_from_matrix(const StateGrid& grid, const std::vector<Expr>& interests,
                                 const AffineRepresentation& repr);

/// The affine combination as an expression tree, zero terms dropped.
Expr affine_expression(const RationalVector& coefficients, const std::vector<Expr>& terms, const Rational& constant);

class DerivationError : public std::runtime_error {
 public:
  enum class Reason { SingularMatrix, UnitGamma };
  DerivationError(Reason reason, std::size_t agent, const std::string& what)
      : std::runtime_error(what), reason_(reason), agent_(agent) {}
  Reason reason() const noexcept { return reason_; }
  std::size_t agent() const noexcept { return agent_; }

 private:
  Reason reason_;
  std::size_t agent_;
};

/// Each preference written through its own interest and the other preferences:
/// p_i = delta_ii v_i + sum_{k != i} delta_ik p_k + mu_i.
struct DerivedCoefficients {
  RationalMatrix B;      // inverse of A
  RationalMatrix gamma;  // gamma_ik = sum_{j != i} alpha_ij beta_jk
  RationalMatrix delta;
  RationalVector mu;
  RationalVector lambda;  // constant of the implicit form, before dividing by 1 - gamma_ii
};

/// Throws DerivationError when A is singular or some gamma_ii equals 1.
DerivedCoefficients derive_coefficients(const AffineRepresentation& repr);

/// Largest |rhs - p_i| over agents and states, zero when the explicit form is an identity on the grid.
Rational back_substitution_residual(const Community& c, const DerivedCoefficients& d);

struct SignCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // (i, k), first in row-major order
  Rational value;                                                // delta at the offending entry
};

/// delta_ii > 0 and delta_ik >= 0.
SignCheck lemma_sign_checks(const DerivedCoefficients& d);

/// The n single-axis moves from the first grid state change v by linearly
/// independent vectors, so the interest image is full-dimensional.
struct InterestRank {
  bool full = false;
  std::size_t rank = 0;
  std::size_t agents = 0;
  RationalMatrix moves;  // one row of v-differences per grid axis
};

InterestRank interest_rank(const Community& c);

/// One cone query: is p_k a nonnegative combination of the outsiders'
/// interests and the coalition's preferences (in v-coordinates, constants dropped)?
struct ConeQuery {
  Coalition coalition;
  std::size_t agent = 0;
  ConeCertificate certificate;
};

struct CertificationReport {
  enum class Stage { Preconditions, SignChecks, ConeQueries, Coincidence, Certified };

  Stage stage = Stage::Preconditions;  // first stage that failed, or Certified
  std::vector<CheckResult> preconditions;
  std::optional<SignCheck> signs;
  std::optional<std::string> derivation_error;
  std::vector<ConeQuery> queries;
  std::optional<CoincidenceReport> coincidence;

  bool certified() const noexcept { return stage == Stage::Certified; }
  bool preconditions_met() const;
  bool cones_contained() const;
  /// Sign checks passing implies every query is feasible implies no divergence.
  bool consistent() const;
};

const char* stage_name(CertificationReport::Stage stage);

/// Checks the four existence conditions, derives the explicit form and its sign pattern, runs every
/// cone query for J a proper subset of I and k outside J, and scans the grid for
/// pairs where the two succession relations differ. The sign pattern is always
/// reported; cone queries and the scan are skipped when a precondition fails.
CertificationReport theorem1_certify(const Community& c, const AffineRepresentation& repr,
                                     const CheckOptions& options = {});

struct NonmalevolenceEquivalence {
  bool coefficients_nonnegative = true;
  std::optional<std::pair<std::size_t, std::size_t>> negative_entry;
  CheckResult grid;

  bool agree() const noexcept { return coefficients_nonnegative == grid.holds; }
};

NonmalevolenceEquivalence nonmalevolence_equivalence(const Community& c, const AffineRepresentation& repr,
                                                     const CheckOptions& options = {});

class FitError : public std::runtime_error {
 public:
  FitError(std::size_t agent, const std::string& what) : std::runtime_error(what), agent_(agent) {}
  std::size_t agent() const noexcept { return agent_; }

 private:
  std::size_t agent_;
};

/// p_i approximated by sum_j u_ij(level of v_j) + nu_i. Each table has one entry
/// per interest level of v_j, the lowest anchored at 0.
struct AgentFit {
  std::size_t agent = 0;
  std::vector<std::size_t> support;  // factors whose table is not constant
  std::vector<RationalVector> tables;
  Rational offset;
  Rational residual;  // max |p_i - fitted| over the grid
  Rational squared_error;
};

struct AdditiveFit {
  std::vector<AgentFit> agents;

  Rational max_residual() const;
};

/// Exact least squares through the normal equations. Throws FitError when they are singular.
AdditiveFit fit_additive(const Community& c);

struct CommonFactor {
  bool holds = false;
  Rational sigma;
  Rational tau;
  std::vector<std::size_t> witness_levels;  // three levels no affine map fits, when it fails
};

/// Is target = sigma * base + tau on every level?
CommonFactor affine_relation(const RationalVector& target, const RationalVector& base);

/// u_hj as an affine image of u_ij.
CommonFactor common_factor_check(const AgentFit& h, const AgentFit& i, std::size_t j);

class CommonFactorError : public std::runtime_error {
 public:
  CommonFactorError(std::size_t h, std::size_t i, std::size_t j, const std::string& what)
      : std::runtime_error(what), h_(h), i_(i), j_(j) {}
  std::size_t h() const noexcept { return h_; }
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t h_, i_, j_;
};

/// The representation rebuilt from fitted tables: v_j is the table of the first
/// agent whose support contains j, A and kappa follow from the affine relations.
struct CanonicalFactors {
  AffineRepresentation repr;
  std::vector<std::optional<std::size_t>> first_agent;  // iota(j)
  std::vector<RationalVector> interest_tables;         // v_j per interest level of j

  /// sum_j A[i][j] v_j(level) + kappa_i at a grid state.
  Rational predict(const Community& c, std::size_t agent, StateId s) const;
  /// Largest |p_i - predict| over the grid.
  Rational residual(const Community& c) const;
};

/// Throws CommonFactorError naming the first failing (h, iota(j), j), and
/// FitError if some fit has nonzero residual.
CanonicalFactors canonical_common_factors(const AdditiveFit& fit);

}  // namespace succession
