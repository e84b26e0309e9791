#include "succession/report.hpp"

#include "succession/linalg.hpp"

#include <json.hpp>

#include <sstream>

namespace succession {

namespace {

using nlohmann::ordered_json;

std::string id(std::size_t agent) { return std::to_string(agent + 1); }

std::string vec_text(const RationalVector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + format_rational(v[k]);
  return out + "]";
}

void matrix_text(std::ostream& out, const char* label, const RationalMatrix& m) {
  out << label << ":\n";
  for (const auto& row : m) out << "  " << vec_text(row) << "\n";
}

ordered_json vec_json(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v) out.push_back(format_rational(e));
  return out;
}

ordered_json matrix_json(const RationalMatrix& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) out.push_back(vec_json(row));
  return out;
}

ordered_json coalition_json(const Coalition& c) {
  ordered_json out = ordered_json::array();
  for (std::size_t m : c.members) out.push_back(m + 1);
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json out = ordered_json::object();
  if (!w.agents.empty()) {
    out["agents"] = ordered_json::object();
    for (const auto& [name, a] : w.agents) out["agents"][name] = a + 1;
  }
  if (w.coalition) out["coalition"] = coalition_json(*w.coalition);
  if (!w.states.empty()) {
    out["states"] = ordered_json::object();
    for (const auto& [name, s] : w.states) out["states"][name] = to_string(s);
  }
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

ordered_json check_json(const CheckResult& r) {
  ordered_json out;
  out["condition"] = std::string(condition_name(r.condition));
  out["holds"] = r.holds;
  out["vacuous"] = r.vacuous;
  out["exhaustive"] = r.exhaustive;
  out["samples_examined"] = r.samples_examined;
  out["tuples_scanned"] = r.tuples_scanned;
  out["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
  out["witness"] = r.witness.empty() ? ordered_json(nullptr) : witness_json(r.witness);
  out["evidence"] = ordered_json::array();
  for (const auto& e : r.evidence) out["evidence"].push_back(witness_json(e));
  out["notes"] = r.notes;
  return out;
}

std::string verdict(const CheckResult& r) {
  if (!r.holds) return "FAIL";
  return r.vacuous ? "PASS (vacuous)" : "PASS";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_line(const SuccessionWitness& w) {
  if (!w.holds) return "no";
  std::string out = "yes (J=" + to_string(w.coalition);
  if (w.strict_agent) out += ", strict " + id(*w.strict_agent);
  return out + ")";
}

ordered_json succession_json(const SuccessionWitness& w) {
  ordered_json out;
  out["holds"] = w.holds;
  if (w.holds) {
    out["coalition"] = coalition_json(w.coalition);
    out["strict_agent"] = w.strict_agent ? ordered_json(*w.strict_agent + 1) : ordered_json(nullptr);
  }
  return out;
}

std::string certificate_text(const ConeCertificate& cert) {
  return cert.feasible ? "in cone, weights " + vec_text(cert.weights) : "outside, separator " + vec_text(cert.separator);
}

ordered_json certificate_json(const ConeCertificate& cert) {
  ordered_json out;
  out["feasible"] = cert.feasible;
  if (cert.feasible) {
    out["weights"] = vec_json(cert.weights);
  } else {
    out["separator"] = vec_json(cert.separator);
  }
  return out;
}

std::string sign_text(const SignCheck& s) {
  if (s.holds) return "PASS";
  return "FAIL at (" + id(s.offending->first) + "," + id(s.offending->second) + "): delta = " + format_rational(s.value);
}

ordered_json sign_json(const SignCheck& s) {
  ordered_json out;
  out["holds"] = s.holds;
  if (!s.holds) {
    out["offending"] = {s.offending->first + 1, s.offending->second + 1};
    out["value"] = format_rational(s.value);
  }
  return out;
}

}  // namespace

std::string describe(const Witness& w) {
  std::vector<std::string> parts;
  for (const auto& [name, a] : w.agents) parts.push_back(name + "=" + id(a));
  if (w.coalition) parts.push_back("J=" + to_string(*w.coalition));
  for (const auto& [name, s] : w.states) parts.push_back(name + "=" + to_string(s));
  if (!w.note.empty()) parts.push_back("(" + w.note + ")");
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " " : "") + parts[k];
  return out;
}

std::string render_checks(const std::vector<CheckResult>& results, Format format) {
  std::size_t holding = 0;
  for (const auto& r : results) holding += r.holds ? 1 : 0;
  if (format == Format::Json) {
    ordered_json out;
    out["results"] = ordered_json::array();
    for (const auto& r : results) out["results"].push_back(check_json(r));
    out["all_hold"] = holding == results.size();
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& r : results) {
    out << condition_name(r.condition) << ": " << verdict(r) << "\n";
    if (!r.witness.empty()) out << "  witness: " << describe(r.witness) << "\n";
    for (const auto& e : r.evidence) out << "  evidence: " << describe(e) << "\n";
    out << "  examined: " << r.samples_examined << " of " << r.tuples_scanned << " tuples, "
        << (r.exhaustive ? "exhaustive" : "sampled");
    if (r.seed) out << ", seed " << *r.seed;
    out << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
  }
  out << "summary: " << holding << " of " << results.size() << " hold\n";
  return out.str();
}

std::string render_pair(const Community& c, StateId x, StateId y, Format format) {
  const auto pareto = pareto_superior(c, x, y);
  const auto liberal = liberal_successor(c, x, y);
  const auto permissive = liberal_successor_permissive(c, x, y);
  if (format == Format::Json) {
    ordered_json out;
    out["x"] = to_string(c.grid().state(x));
    out["y"] = to_string(c.grid().state(y));
    out["pareto"] = succession_json(pareto);
    out["liberal"] = succession_json(liberal);
    out["permissive"] = succession_json(permissive);
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "x = " << to_string(c.grid().state(x)) << "\n";
  out << "y = " << to_string(c.grid().state(y)) << "\n";
  out << "pareto: " << yes_no(pareto.holds) << "\n";
  out << "liberal: " << witness_line(liberal) << "\n";
  out << "permissive: " << witness_line(permissive) << "\n";
  return out.str();
}

std::string render_coincidence(const Community& c, const CoincidenceReport& report, std::size_t limit, Format format) {
  const std::size_t shown = std::min(limit, report.divergences.size());
  if (format == Format::Json) {
    ordered_json out;
    out["states"] = c.state_count();
    out["pairs_examined"] = report.pairs_examined;
    out["pareto"] = report.pareto_count;
    out["liberal"] = report.liberal_count;
    out["permissive"] = report.permissive_count;
    out["divergent_pairs"] = report.divergences.size();
    out["divergences"] = ordered_json::array();
    for (std::size_t k = 0; k < shown; ++k) {
      const auto& d = report.divergences[k];
      out["divergences"].push_back({{"x", to_string(c.grid().state(d.x))},
                                    {"y", to_string(c.grid().state(d.y))},
                                    {"pareto", d.pareto},
                                    {"liberal", d.liberal},
                                    {"coalition", coalition_json(d.coalition)}});
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "states: " << c.state_count() << "\n";
  out << "pairs examined: " << report.pairs_examined << "\n";
  out << "pareto: " << report.pareto_count << "\n";
  out << "liberal: " << report.liberal_count << "\n";
  out << "permissive: " << report.permissive_count << "\n";
  out << "divergent pairs: " << report.divergences.size() << "\n";
  for (std::size_t k = 0; k < shown; ++k) {
    const auto& d = report.divergences[k];
    out << "  x=" << to_string(c.grid().state(d.x)) << " y=" << to_string(c.grid().state(d.y));
    if (d.liberal) out << " liberal via J=" << to_string(d.coalition);
    if (d.pareto) out << " pareto only";
    out << "\n";
  }
  if (shown < report.divergences.size()) out << "  ... " << report.divergences.size() - shown << " more\n";
  return out.str();
}

RepresentationSummary summarize_representation(const Community& c, const AffineRepresentation& repr) {
  RepresentationSummary s;
  s.repr = repr;
  for (StateId st = 0; st < c.state_count(); ++st) {
    for (std::size_t i = 0; i < c.agent_count(); ++i) {
      Rational predicted = repr.kappa[i];
      for (std::size_t j = 0; j < c.agent_count(); ++j) predicted += repr.A[i][j] * c.utility(j, Role::Interest, st);
      s.reproduction_residual = std::max(s.reproduction_residual, abs(Rational(predicted - c.utility(i, Role::Preference, st))));
    }
  }
  try {
    s.derived = derive_coefficients(repr);
    s.signs = lemma_sign_checks(*s.derived);
  } catch (const DerivationError& e) {
    s.derivation_error = e.what();
  }
  s.rank = interest_rank(c);
  s.nonmalevolence = nonmalevolence_equivalence(c, repr);
  return s;
}

std::string render_representation(const RepresentationSummary& s, Format format) {
  const auto& nm = s.nonmalevolence;
  if (format == Format::Json) {
    ordered_json out;
    out["A"] = matrix_json(s.repr.A);
    out["kappa"] = vec_json(s.repr.kappa);
    out["reproduction_residual"] = format_rational(s.reproduction_residual);
    out["interest_rank"] = {{"rank", s.rank.rank}, {"agents", s.rank.agents}, {"full", s.rank.full}};
    if (s.derived) {
      out["B"] = matrix_json(s.derived->B);
      out["gamma"] = matrix_json(s.derived->gamma);
      out["delta"] = matrix_json(s.derived->delta);
      out["mu"] = vec_json(s.derived->mu);
      out["sign_checks"] = sign_json(*s.signs);
    } else {
      out["derivation_error"] = *s.derivation_error;
    }
    ordered_json eq;
    eq["coefficients_nonnegative"] = nm.coefficients_nonnegative;
    if (nm.negative_entry) eq["negative_entry"] = {nm.negative_entry->first + 1, nm.negative_entry->second + 1};
    eq["grid"] = check_json(nm.grid);
    eq["agree"] = nm.agree();
    out["nonmalevolence"] = eq;
    if (s.certification) {
      const auto& cert = *s.certification;
      ordered_json cj;
      cj["certified"] = cert.certified();
      cj["stage"] = stage_name(cert.stage);
      cj["consistent"] = cert.consistent();
      cj["preconditions"] = ordered_json::array();
      for (const auto& p : cert.preconditions) cj["preconditions"].push_back(check_json(p));
      if (cert.signs) cj["sign_checks"] = sign_json(*cert.signs);
      if (cert.derivation_error) cj["derivation_error"] = *cert.derivation_error;
      cj["cone_queries"] = ordered_json::array();
      for (const auto& q : cert.queries) {
        cj["cone_queries"].push_back(
            {{"coalition", coalition_json(q.coalition)}, {"agent", q.agent + 1}, {"certificate", certificate_json(q.certificate)}});
      }
      if (cert.coincidence) cj["divergent_pairs"] = cert.coincidence->divergences.size();
      out["certification"] = cj;
    }
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  matrix_text(out, "A", s.repr.A);
  out << "kappa: " << vec_text(s.repr.kappa) << "\n";
  out << "reproduces preferences: " << yes_no(s.reproduction_residual == 0) << " (residual "
      << format_rational(s.reproduction_residual) << ")\n";
  out << "interest rank: " << s.rank.rank << " of " << s.rank.agents << (s.rank.full ? " (full)" : " (deficient)") << "\n";
  if (s.derived) {
    matrix_text(out, "delta", s.derived->delta);
    out << "mu: " << vec_text(s.derived->mu) << "\n";
    out << "sign checks: " << sign_text(*s.signs) << "\n";
  } else {
    out << "derivation: " << *s.derivation_error << "\n";
  }
  out << "nonmalevolence: coefficients nonnegative " << yes_no(nm.coefficients_nonnegative);
  if (nm.negative_entry) out << " (alpha_" << id(nm.negative_entry->first) << id(nm.negative_entry->second) << " < 0)";
  out << ", grid check " << (nm.grid.holds ? "holds" : "fails") << ", agree " << yes_no(nm.agree()) << "\n";
  if (!nm.grid.holds) out << "  witness: " << describe(nm.grid.witness) << "\n";
  if (s.certification) {
    const auto& cert = *s.certification;
    out << "certification: " << (cert.certified() ? "certified" : std::string("refused at ") + stage_name(cert.stage)) << "\n";
    for (const auto& p : cert.preconditions) {
      out << "  " << condition_name(p.condition) << ": " << verdict(p) << "\n";
      if (!p.witness.empty()) out << "    witness: " << describe(p.witness) << "\n";
    }
    if (cert.signs) out << "  sign checks: " << sign_text(*cert.signs) << "\n";
    if (cert.derivation_error) out << "  derivation: " << *cert.derivation_error << "\n";
    if (!cert.queries.empty()) {
      std::size_t inside = 0;
      for (const auto& q : cert.queries) inside += q.certificate.feasible ? 1 : 0;
      out << "  cone queries: " << inside << " of " << cert.queries.size() << " in cone\n";
      for (const auto& q : cert.queries) {
        out << "    J=" << to_string(q.coalition) << " k=" << id(q.agent) << ": " << certificate_text(q.certificate) << "\n";
      }
    }
    if (cert.coincidence) out << "  divergent pairs: " << cert.coincidence->divergences.size() << "\n";
    out << "  consistent: " << yes_no(cert.consistent()) << "\n";
  }
  return out.str();
}

std::string render_fit(const AdditiveFit& fit, const std::optional<CanonicalFactors>& canonical,
                       const std::optional<std::string>& canonical_error, Format format) {
  if (format == Format::Json) {
    ordered_json out;
    out["agents"] = ordered_json::array();
    for (const auto& a : fit.agents) {
      ordered_json aj;
      aj["agent"] = a.agent + 1;
      aj["support"] = ordered_json::array();
      for (std::size_t j : a.support) aj["support"].push_back(j + 1);
      aj["tables"] = matrix_json(a.tables);
      aj["offset"] = format_rational(a.offset);
      aj["residual"] = format_rational(a.residual);
      aj["squared_error"] = format_rational(a.squared_error);
      out["agents"].push_back(aj);
    }
    if (canonical) {
      out["canonical"] = {{"A", matrix_json(canonical->repr.A)}, {"kappa", vec_json(canonical->repr.kappa)}};
    }
    if (canonical_error) out["canonical_error"] = *canonical_error;
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& a : fit.agents) {
    out << "agent " << id(a.agent) << ": support {";
    for (std::size_t k = 0; k < a.support.size(); ++k) out << (k ? "," : "") << id(a.support[k]);
    out << "}, offset " << format_rational(a.offset) << ", residual " << format_rational(a.residual)
        << ", squared error " << format_rational(a.squared_error) << "\n";
    for (std::size_t j = 0; j < a.tables.size(); ++j) out << "  u_" << id(a.agent) << id(j) << " = " << vec_text(a.tables[j]) << "\n";
  }
  if (canonical) {
    out << "canonical common factors:\n";
    matrix_text(out, "A", canonical->repr.A);
    out << "kappa: " << vec_text(canonical->repr.kappa) << "\n";
  }
  if (canonical_error) out << "canonical common factors: " << *canonical_error << "\n";
  return out.str();
}

std::string render_suite(const SuiteReport& report, Format format) {
  if (format == Format::Json) {
    ordered_json out;
    out["suite"] = report.name;
    out["seed"] = report.seed;
    out["trials"] = ordered_json::array();
    for (const auto& t : report.trials) out["trials"].push_back({{"trial", t.trial}, {"passed", t.passed}, {"detail", t.detail}});
    out["passed"] = report.passed();
    out["total"] = report.trials.size();
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& t : report.trials) {
    out << "trial " << t.trial + 1 << ": " << (t.passed ? "pass" : "FAIL") << " (" << t.detail << ")\n";
  }
  out << report.name << ": " << report.passed() << "/" << report.trials.size() << " passed (seed " << report.seed << ")\n";
  return out.str();
}

}  // namespace succession
