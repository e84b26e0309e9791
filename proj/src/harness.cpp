#include "succession/harness.hpp"

#include <algorithm>

namespace succession {

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.passed; }));
}

std::vector<AffineRepresentation> random_representation_batch(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<AffineRepresentation> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_nonsingular_representation(rng, 1 + k % 4));
  return out;
}

SuiteReport theorem1_suite(std::uint64_t seed, std::size_t trials, std::size_t agents, std::size_t levels) {
  SuiteReport report{"theorem1", seed, {}};
  std::mt19937_64 rng(seed);
  const StateGrid grid = integer_grid(agents, levels);
  const auto interests = coordinate_interests(agents);
  for (std::size_t t = 0; t < trials; ++t) {
    const AffineRepresentation repr = random_certifiable_representation(rng, agents);
    const Community c = synthesize_from_matrix(grid, interests, repr);
    const CertificationReport cert = theorem1_certify(c, repr);
    TrialOutcome out{t, cert.certified(), stage_name(cert.stage)};
    if (cert.coincidence) out.detail += ", divergent pairs " + std::to_string(cert.coincidence->divergences.size());
    report.trials.push_back(std::move(out));
  }
  return report;
}

SuiteReport roundtrip_suite(const std::vector<AffineRepresentation>& batch, std::uint64_t seed) {
  SuiteReport report{"roundtrip", seed, {}};
  for (std::size_t t = 0; t < batch.size(); ++t) {
    const AffineRepresentation& repr = batch[t];
    const std::size_t n = repr.size();
    const Community c = synthesize_from_matrix(integer_grid(n, 3), coordinate_interests(n), repr);
    TrialOutcome out{t, false, "n=" + std::to_string(n)};
    try {
      const AdditiveFit fit = fit_additive(c);
      const CanonicalFactors cf = canonical_common_factors(fit);
      const Rational rebuilt = cf.residual(c);
      const Rational explicit_form = back_substitution_residual(c, derive_coefficients(repr));
      out.passed = fit.max_residual() == 0 && rebuilt == 0 && explicit_form == 0;
      out.detail += ", fit residual " + format_rational(fit.max_residual()) + ", rebuilt residual " +
                    format_rational(rebuilt) + ", explicit-form residual " + format_rational(explicit_form);
    } catch (const std::exception& e) {
      out.detail += std::string(", error: ") + e.what();
    }
    report.trials.push_back(std::move(out));
  }
  return report;
}

SuiteReport nonmalevolence_suite(const std::vector<AffineRepresentation>& batch, std::uint64_t seed) {
  SuiteReport report{"nonmalevolence", seed, {}};
  for (std::size_t t = 0; t < batch.size(); ++t) {
    const AffineRepresentation& repr = batch[t];
    const std::size_t n = repr.size();
    const Community c = synthesize_from_matrix(integer_grid(n, 3), coordinate_interests(n), repr);
    const NonmalevolenceEquivalence eq = nonmalevolence_equivalence(c, repr);
    report.trials.push_back({t, eq.agree(),
                             std::string("coefficients ") + (eq.coefficients_nonnegative ? "nonnegative" : "mixed") +
                                 ", grid " + (eq.grid.holds ? "holds" : "fails")});
  }
  return report;
}

}  // namespace succession
