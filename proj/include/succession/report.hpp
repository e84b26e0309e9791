#pragma once

#include "succession/axioms.hpp"
#include "succession/harness.hpp"
#include "succession/relations.hpp"
#include "succession/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace succession {

enum class Format { Text, Json };

/// "i=1 J={1} w=(1,2,2) x=(2,2,2)" with 1-based agent ids.
std::string describe(const Witness& w);

std::string render_checks(const std::vector<CheckResult>& results, Format format);

std::string render_pair(const Community& c, StateId x, StateId y, Format format);

/// At most `limit` divergent pairs are listed; the count line is always exact.
std::string render_coincidence(const Community& c, const CoincidenceReport& report, std::size_t limit, Format format);

struct RepresentationSummary {
  AffineRepresentation repr;
  Rational reproduction_residual;  // max |p - (A v + kappa)| over the grid
  std::optional<DerivedCoefficients> derived;
  std::optional<std::string> derivation_error;
  std::optional<SignCheck> signs;
  InterestRank rank;
  NonmalevolenceEquivalence nonmalevolence;
  std::optional<CertificationReport> certification;
};

/// Runs everything but certification.
RepresentationSummary summarize_representation(const Community& c, const AffineRepresentation& repr);

std::string render_representation(const RepresentationSummary& s, Format format);

std::string render_fit(const AdditiveFit& fit, const std::optional<CanonicalFactors>& canonical,
                       const std::optional<std::string>& canonical_error, Format format);

std::string render_suite(const SuiteReport& report, Format format);

}  // namespace succession
