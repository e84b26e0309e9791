#include "succession/document.hpp"
#include "succession/harness.hpp"
#include "succession/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace succession;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CommunityDocument load(const std::string& source) {
  constexpr std::string_view prefix = "example:";
  if (source.rfind(prefix, 0) == 0) return example_document(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw InputError("cannot open " + source);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

State parse_state(std::string text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty state");
  text = text.substr(first, last - first + 1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw InputError("state must look like (1,2,3): " + text);
  State s;
  std::stringstream body(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    try {
      s.coords.push_back(parse_rational(item));
    } catch (const NumberFormatError& e) {
      throw InputError(e.what());
    }
  }
  return s;
}

StateId find_state(const Community& c, const State& s) {
  const auto found = c.grid().find(s);
  if (!found) throw InputError("state " + to_string(s) + " is not on the grid");
  return *found;
}

Format parse_format(const std::string& name) { return name == "json" ? Format::Json : Format::Text; }

struct CheckArgs {
  std::string file;
  std::string axioms = "all";
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::size_t samples = 10'000;
  std::size_t budget = 50'000'000;
  bool no_hints = false;
  std::string format = "text";
};

int run_check_command(const CheckArgs& a) {
  const CommunityDocument doc = load(a.file);
  const Community c = build_community(doc);
  std::vector<Condition> selected;
  if (a.axioms == "all") {
    selected.assign(std::begin(kAllConditions), std::end(kAllConditions));
  } else {
    std::stringstream list(a.axioms);
    std::string name;
    while (std::getline(list, name, ',')) {
      const auto cond = condition_from_name(name);
      if (!cond) throw InputError("unknown condition \"" + name + "\"");
      selected.push_back(*cond);
    }
  }
  CheckOptions options;
  options.budget = a.budget;
  options.mode = a.mode == "sampled" ? CheckMode::sampled(a.samples, a.seed) : CheckMode::exhaustive();
  if (!a.no_hints) options.hints = build_hints(doc);
  std::vector<CheckResult> results;
  for (Condition cond : selected) results.push_back(run_check(c, cond, options));
  std::cout << render_checks(results, parse_format(a.format));
  for (const auto& r : results) {
    if (!r.holds) return kFail;
  }
  return kPass;
}

struct RelationsArgs {
  std::string file;
  std::string pair;
  bool all = false;
  std::size_t limit = 50;
  std::string format = "text";
};

int run_relations_command(const RelationsArgs& a) {
  const Community c = build_community(load(a.file));
  const Format format = parse_format(a.format);
  if (!a.pair.empty()) {
    const auto bar = a.pair.find('|');
    if (bar == std::string::npos) throw InputError("--pair expects \"x|y\"");
    const StateId x = find_state(c, parse_state(a.pair.substr(0, bar)));
    const StateId y = find_state(c, parse_state(a.pair.substr(bar + 1)));
    std::cout << render_pair(c, x, y, format);
    return kPass;
  }
  if (!a.all) throw InputError("relations needs --pair or --all");
  std::cout << render_coincidence(c, coincidence_report(c), a.limit, format);
  return kPass;
}

struct ReprArgs {
  std::string file;
  bool certify = false;
  std::string format = "text";
};

int run_repr_command(const ReprArgs& a) {
  const CommunityDocument doc = load(a.file);
  const Community c = build_community(doc);
  const Format format = parse_format(a.format);
  const auto repr = build_representation(doc);
  if (!repr) {
    if (a.certify) throw InputError("certification needs a matrix block in the document");
    const AdditiveFit fit = fit_additive(c);
    std::optional<CanonicalFactors> canonical;
    std::optional<std::string> error;
    try {
      canonical = canonical_common_factors(fit);
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::cout << render_fit(fit, canonical, error, format);
    return canonical ? kPass : kFail;
  }
  RepresentationSummary s = summarize_representation(c, *repr);
  if (a.certify && s.reproduction_residual == 0) s.certification = theorem1_certify(c, *repr);
  std::cout << render_representation(s, format);
  if (s.reproduction_residual != 0 || !s.signs || !s.signs->holds) return kFail;
  if (s.certification && !s.certification->certified()) return kFail;
  return kPass;
}

struct ExampleArgs {
  std::string name;
  std::size_t levels = 5;
  std::string output;
};

int run_example_command(const ExampleArgs& a) {
  const std::string text = to_json(example_document(a.name, a.levels));
  if (a.output.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream out(a.output);
  if (!out) throw InputError("cannot write " + a.output);
  out << text;
  return kPass;
}

struct RandomArgs {
  std::string suite = "theorem1";
  std::size_t trials = 50;
  std::uint64_t seed = 7;
  std::size_t agents = 3;
  std::size_t levels = 3;
  std::string format = "text";
};

int run_random_command(const RandomArgs& a) {
  SuiteReport report;
  if (a.suite == "theorem1") {
    report = theorem1_suite(a.seed, a.trials, a.agents, a.levels);
  } else if (a.suite == "roundtrip") {
    report = roundtrip_suite(random_representation_batch(a.seed, a.trials), a.seed);
  } else {
    report = nonmalevolence_suite(random_representation_batch(a.seed, a.trials), a.seed);
  }
  std::cout << render_suite(report, parse_format(a.format));
  return report.all_passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto and liberal succession on finite communities"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run axiom checkers");
  check_cmd->add_option("file", check.file, "Community JSON or example:NAME")->required();
  check_cmd->add_option("--axioms", check.axioms, "Comma-separated condition names, or all");
  check_cmd->add_option("--mode", check.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--samples", check.samples);
  check_cmd->add_option("--budget", check.budget, "Tuple budget for exhaustive scans");
  check_cmd->add_flag("--no-hints", check.no_hints, "Ignore witness_hints in the document");
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember(formats));

  RelationsArgs rel;
  auto* rel_cmd = app.add_subcommand("relations", "Pareto and liberal succession");
  rel_cmd->add_option("file", rel.file)->required();
  rel_cmd->add_option("--pair", rel.pair, "\"(x1,...)|(y1,...)\"");
  rel_cmd->add_flag("--all", rel.all, "Scan every ordered pair");
  rel_cmd->add_option("--limit", rel.limit, "Divergent pairs to list");
  rel_cmd->add_option("--format", rel.format)->check(CLI::IsMember(formats));

  ReprArgs repr;
  auto* repr_cmd = app.add_subcommand("repr", "Affine representation, explicit form and certification");
  repr_cmd->add_option("file", repr.file)->required();
  repr_cmd->add_flag("--certify", repr.certify);
  repr_cmd->add_option("--format", repr.format)->check(CLI::IsMember(formats));

  ExampleArgs ex;
  auto* ex_cmd = app.add_subcommand("example", "Write a built-in community document");
  ex_cmd->add_option("name", ex.name)->required()->check(CLI::IsMember(example_names()));
  ex_cmd->add_option("--levels", ex.levels, "Axis levels for sec-c");
  ex_cmd->add_option("--output,-o", ex.output);

  RandomArgs rnd;
  auto* rnd_cmd = app.add_subcommand("random", "Seeded property suites");
  rnd_cmd->add_option("--suite", rnd.suite)->check(CLI::IsMember({"theorem1", "roundtrip", "nonmalevolence"}));
  rnd_cmd->add_option("--trials", rnd.trials);
  rnd_cmd->add_option("--seed", rnd.seed);
  rnd_cmd->add_option("--agents", rnd.agents, "theorem1 suite only")->check(CLI::Range(1, 8));
  rnd_cmd->add_option("--levels", rnd.levels, "theorem1 suite only")->check(CLI::Range(2, 6));
  rnd_cmd->add_option("--format", rnd.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check_cmd) return run_check_command(check);
    if (*rel_cmd) return run_relations_command(rel);
    if (*repr_cmd) return run_repr_command(repr);
    if (*ex_cmd) return run_example_command(ex);
    return run_random_command(rnd);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const FitError& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
