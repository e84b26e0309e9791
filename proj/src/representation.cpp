#include "succession/representation.hpp"

#include "succession/linalg.hpp"

#include <algorithm>

namespace succession {

namespace {

void require_square(const AffineRepresentation& repr) {
  require_shape(repr.A, repr.A.size(), repr.A.size(), "coefficient matrix");
  if (repr.kappa.size() != repr.A.size()) throw std::invalid_argument("kappa length differs from matrix size");
}

}  // namespace

Expr affine_expression(const RationalVector& coefficients, const std::vector<Expr>& terms, const Rational& constant) {
  std::optional<Expr> out;
  const auto append = [&](const Rational& coef, const std::optional<Expr>& term) {
    if (coef == 0) return;
    const Rational mag = abs(coef);
    Expr piece = !term ? Expr::literal(mag) : mag == 1 ? *term : Expr::binary(Expr::Kind::Multiply, Expr::literal(mag), *term);
    if (!out) {
      out = coef < 0 ? Expr::negate(piece) : piece;
    } else {
      out = Expr::binary(coef < 0 ? Expr::Kind::Subtract : Expr::Kind::Add, *out, piece);
    }
  };
  for (std::size_t j = 0; j < terms.size(); ++j) append(coefficients[j], terms[j]);
  append(constant, std::nullopt);
  return out ? *out : Expr::literal(Rational(0));
}

Community synthesize_from_matrix(const StateGrid& grid, const std::vector<Expr>& interests,
                                 const AffineRepresentation& repr) {
  require_square(repr);
  if (interests.size() != repr.size()) throw std::invalid_argument("one interest expression per matrix row expected");
  std::vector<AgentSpec> agents;
  for (std::size_t i = 0; i < repr.size(); ++i) {
    if (interests[i].max_coordinate() > grid.dimension()) throw std::invalid_argument("interest refers past grid dimension");
    agents.push_back({i + 1, interests[i], affine_expression(repr.A[i], interests, repr.kappa[i])});
  }
  return Community(grid, std::move(agents));
}

DerivedCoefficients derive_coefficients(const AffineRepresentation& repr) {
  require_square(repr);
  const std::size_t n = repr.size();
  const auto& A = repr.A;
  DerivedCoefficients d;
  try {
    d.B = inverse(A);
  } catch (const SingularMatrixError&) {
    throw DerivationError(DerivationError::Reason::SingularMatrix, 0, "coefficient matrix is singular");
  }
  d.gamma.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) d.gamma[i][k] += A[i][j] * d.B[j][k];
      }
    }
  }
  d.delta.assign(n, RationalVector(n));
  d.mu.assign(n, Rational(0));
  d.lambda.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational denom = 1 - d.gamma[i][i];
    if (denom == 0) {
      throw DerivationError(DerivationError::Reason::UnitGamma, i,
                            "gamma_" + std::to_string(i + 1) + std::to_string(i + 1) + " = 1; agent " +
                                std::to_string(i + 1) + "'s preference cannot be isolated");
    }
    d.lambda[i] = repr.kappa[i];
    for (std::size_t k = 0; k < n; ++k) d.lambda[i] -= d.gamma[i][k] * repr.kappa[k];
    for (std::size_t k = 0; k < n; ++k) d.delta[i][k] = (k == i ? A[i][i] : d.gamma[i][k]) / denom;
    d.mu[i] = d.lambda[i] / denom;
  }
  return d;
}

Rational back_substitution_residual(const Community& c, const DerivedCoefficients& d) {
  const std::size_t n = d.delta.size();
  if (c.agent_count() != n) throw std::invalid_argument("community and coefficients differ in agent count");
  Rational worst(0);
  for (StateId s = 0; s < c.state_count(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational rhs = d.delta[i][i] * c.utility(i, Role::Interest, s) + d.mu[i];
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rhs += d.delta[i][k] * c.utility(k, Role::Preference, s);
      }
      worst = std::max(worst, abs(Rational(rhs - c.utility(i, Role::Preference, s))));
    }
  }
  return worst;
}

SignCheck lemma_sign_checks(const DerivedCoefficients& d) {
  SignCheck out;
  for (std::size_t i = 0; i < d.delta.size(); ++i) {
    for (std::size_t k = 0; k < d.delta[i].size(); ++k) {
      const Rational& v = d.delta[i][k];
      if (i == k ? v <= 0 : v < 0) {
        out.holds = false;
        out.offending = {i, k};
        out.value = v;
        return out;
      }
    }
  }
  return out;
}

InterestRank interest_rank(const Community& c) {
  InterestRank out;
  out.agents = c.agent_count();
  const StateGrid& grid = c.grid();
  const State base = grid.state(0);
  for (std::size_t a = 0; a < grid.dimension(); ++a) {
    if (grid.axes()[a].size() < 2) continue;
    State moved = base;
    moved.coords[a] = grid.axes()[a][1];
    const StateId s = grid.id_of(moved);
    RationalVector row(c.agent_count());
    for (std::size_t i = 0; i < c.agent_count(); ++i) {
      row[i] = c.utility(i, Role::Interest, s) - c.utility(i, Role::Interest, 0);
    }
    out.moves.push_back(std::move(row));
  }
  out.rank = out.moves.empty() ? 0 : rank(out.moves);
  out.full = out.rank == out.agents;
  return out;
}

bool CertificationReport::preconditions_met() const {
  return std::all_of(preconditions.begin(), preconditions.end(), [](const CheckResult& r) { return r.holds; });
}

bool CertificationReport::cones_contained() const {
  return std::all_of(queries.begin(), queries.end(), [](const ConeQuery& q) { return q.certificate.feasible; });
}

bool CertificationReport::consistent() const {
  if (!signs || !signs->holds) return true;
  if (!cones_contained()) return false;
  return !coincidence || coincidence->coincide();
}

const char* stage_name(CertificationReport::Stage stage) {
  switch (stage) {
    case CertificationReport::Stage::Preconditions: return "preconditions";
    case CertificationReport::Stage::SignChecks: return "sign-checks";
    case CertificationReport::Stage::ConeQueries: return "cone-queries";
    case CertificationReport::Stage::Coincidence: return "coincidence";
    case CertificationReport::Stage::Certified: return "certified";
  }
  return "unknown";
}

CertificationReport theorem1_certify(const Community& c, const AffineRepresentation& repr,
                                     const CheckOptions& options) {
  require_square(repr);
  const std::size_t n = repr.size();
  if (c.agent_count() != n) throw std::invalid_argument("community and representation differ in agent count");
  if (n > kMaxCoalitionAgents) throw BudgetExceeded("certification enumerates coalitions; at most 20 agents");

  CertificationReport report;
  for (Condition cond : {Condition::ProductStructure, Condition::IdiosyncraticInterest,
                         Condition::IdiosyncraticPreference, Condition::UnambiguousImprovement}) {
    report.preconditions.push_back(run_check(c, cond, options));
  }
  std::optional<CertificationReport::Stage> failed;
  try {
    report.signs = lemma_sign_checks(derive_coefficients(repr));
    if (!report.signs->holds) failed = CertificationReport::Stage::SignChecks;
  } catch (const DerivationError& e) {
    report.derivation_error = e.what();
    failed = CertificationReport::Stage::SignChecks;
  }
  if (!report.preconditions_met()) return report;

  const AgentMask all = (AgentMask{1} << n) - 1;
  for (AgentMask j : coalition_order(n)) {
    if (j == all) continue;
    std::vector<RationalVector> generators;
    for (std::size_t a = 0; a < n; ++a) {
      if ((j >> a) & 1u) {
        generators.push_back(repr.A[a]);
      } else {
        RationalVector unit(n);
        unit[a] = 1;
        generators.push_back(std::move(unit));
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if ((j >> k) & 1u) continue;
      report.queries.push_back({Coalition::from_mask(j), k, cone_membership(repr.A[k], generators)});
    }
  }
  if (!failed && !report.cones_contained()) failed = CertificationReport::Stage::ConeQueries;

  report.coincidence = coincidence_report(c);
  if (!failed && !report.coincidence->coincide()) failed = CertificationReport::Stage::Coincidence;
  report.stage = failed.value_or(CertificationReport::Stage::Certified);
  return report;
}

NonmalevolenceEquivalence nonmalevolence_equivalence(const Community& c, const AffineRepresentation& repr,
                                                     const CheckOptions& options) {
  require_square(repr);
  NonmalevolenceEquivalence out;
  for (std::size_t i = 0; i < repr.size() && out.coefficients_nonnegative; ++i) {
    for (std::size_t j = 0; j < repr.size(); ++j) {
      if (repr.A[i][j] < 0) {
        out.coefficients_nonnegative = false;
        out.negative_entry = {i, j};
        break;
      }
    }
  }
  out.grid = check_nonmalevolence(c, options);
  return out;
}

Rational AdditiveFit::max_residual() const {
  Rational worst(0);
  for (const auto& a : agents) worst = std::max(worst, a.residual);
  return worst;
}

AdditiveFit fit_additive(const Community& c) {
  const std::size_t n = c.agent_count();
  // Column layout: 0 is the offset, then levels 1..L_j-1 of each factor j.
  std::vector<std::size_t> first_column(n);
  std::size_t columns = 1;
  for (std::size_t j = 0; j < n; ++j) {
    first_column[j] = columns;
    columns += c.level_count(j, Role::Interest) - 1;
  }
  const auto active = [&](StateId s) {
    std::vector<std::size_t> cols{0};
    for (std::size_t j = 0; j < n; ++j) {
      const auto l = c.level(j, Role::Interest, s);
      if (l > 0) cols.push_back(first_column[j] + l - 1);
    }
    return cols;
  };

  RationalMatrix gram(columns, RationalVector(columns));
  std::vector<std::vector<std::size_t>> rows(c.state_count());
  for (StateId s = 0; s < c.state_count(); ++s) {
    rows[s] = active(s);
    for (std::size_t a : rows[s]) {
      for (std::size_t b : rows[s]) gram[a][b] += 1;
    }
  }
  RationalMatrix gram_inverse;
  try {
    gram_inverse = inverse(gram);
  } catch (const SingularMatrixError&) {
    throw FitError(0, "normal equations are singular: interest levels do not separate the additive tables");
  }

  AdditiveFit fit;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector rhs(columns);
    for (StateId s = 0; s < c.state_count(); ++s) {
      for (std::size_t a : rows[s]) rhs[a] += c.utility(i, Role::Preference, s);
    }
    const RationalVector theta = multiply(gram_inverse, rhs);
    AgentFit af;
    af.agent = i;
    af.offset = theta[0];
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector table(c.level_count(j, Role::Interest));
      for (std::size_t l = 1; l < table.size(); ++l) table[l] = theta[first_column[j] + l - 1];
      if (std::any_of(table.begin(), table.end(), [](const Rational& v) { return v != 0; })) af.support.push_back(j);
      af.tables.push_back(std::move(table));
    }
    for (StateId s = 0; s < c.state_count(); ++s) {
      Rational predicted = af.offset;
      for (std::size_t j = 0; j < n; ++j) predicted += af.tables[j][c.level(j, Role::Interest, s)];
      const Rational err = c.utility(i, Role::Preference, s) - predicted;
      af.residual = std::max(af.residual, abs(err));
      af.squared_error += err * err;
    }
    fit.agents.push_back(std::move(af));
  }
  return fit;
}

CommonFactor affine_relation(const RationalVector& target, const RationalVector& base) {
  if (target.size() != base.size() || base.empty()) throw std::invalid_argument("tables must have equal nonzero length");
  CommonFactor out;
  std::size_t pivot = 0;
  for (std::size_t l = 1; l < base.size() && pivot == 0; ++l) {
    if (base[l] != base[0]) pivot = l;
  }
  if (pivot == 0) {
    out.sigma = 0;
    out.tau = target[0];
    for (std::size_t l = 1; l < target.size(); ++l) {
      if (target[l] != target[0]) {
        out.witness_levels = {0, l};
        return out;
      }
    }
    out.holds = true;
    return out;
  }
  out.sigma = (target[pivot] - target[0]) / (base[pivot] - base[0]);
  out.tau = target[0] - out.sigma * base[0];
  for (std::size_t l = 1; l < base.size(); ++l) {
    if (target[l] != out.sigma * base[l] + out.tau) {
      out.witness_levels = {0, pivot, l};
      return out;
    }
  }
  out.holds = true;
  return out;
}

CommonFactor common_factor_check(const AgentFit& h, const AgentFit& i, std::size_t j) {
  if (j >= h.tables.size() || j >= i.tables.size()) throw std::out_of_range("factor index out of range");
  return affine_relation(h.tables[j], i.tables[j]);
}

Rational CanonicalFactors::predict(const Community& c, std::size_t agent, StateId s) const {
  Rational out = repr.kappa[agent];
  for (std::size_t j = 0; j < interest_tables.size(); ++j) {
    if (!interest_tables[j].empty()) out += repr.A[agent][j] * interest_tables[j][c.level(j, Role::Interest, s)];
  }
  return out;
}

Rational CanonicalFactors::residual(const Community& c) const {
  Rational worst(0);
  for (StateId s = 0; s < c.state_count(); ++s) {
    for (std::size_t i = 0; i < c.agent_count(); ++i) {
      worst = std::max(worst, abs(Rational(c.utility(i, Role::Preference, s) - predict(c, i, s))));
    }
  }
  return worst;
}

CanonicalFactors canonical_common_factors(const AdditiveFit& fit) {
  const std::size_t n = fit.agents.size();
  for (const auto& a : fit.agents) {
    if (a.residual != 0) {
      throw FitError(a.agent, "agent " + std::to_string(a.agent + 1) + " is not exactly additive (residual " +
                                  format_rational(a.residual) + ")");
    }
  }
  CanonicalFactors out;
  out.repr.A.assign(n, RationalVector(n));
  out.repr.kappa.assign(n, Rational(0));
  out.first_agent.assign(n, std::nullopt);
  out.interest_tables.assign(n, RationalVector{});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n && !out.first_agent[j]; ++i) {
      const auto& s = fit.agents[i].support;
      if (std::find(s.begin(), s.end(), j) != s.end()) out.first_agent[j] = i;
    }
    if (out.first_agent[j]) out.interest_tables[j] = fit.agents[*out.first_agent[j]].tables[j];
  }
  for (std::size_t h = 0; h < n; ++h) {
    const AgentFit& fh = fit.agents[h];
    out.repr.kappa[h] = fh.offset;
    for (std::size_t j : fh.support) {
      const std::size_t i = *out.first_agent[j];
      if (i == h) {
        out.repr.A[h][j] = 1;
        continue;
      }
      const CommonFactor cf = common_factor_check(fh, fit.agents[i], j);
      if (!cf.holds) {
        throw CommonFactorError(h, i, j,
                                "factor " + std::to_string(j + 1) + " enters agents " + std::to_string(h + 1) +
                                    " and " + std::to_string(i + 1) + " through tables that are not affinely related");
      }
      out.repr.A[h][j] = cf.sigma;
      out.repr.kappa[h] += cf.tau;
    }
  }
  return out;
}

}  // namespace succession
