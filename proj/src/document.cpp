#include "succession/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace succession {

namespace {

using nlohmann::ordered_json;

std::string number_text(const ordered_json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw DocumentError(where + ": expected a number written as a string or an integer");
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw DocumentError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::vector<std::string> number_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(number_text(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Rational parse_number(const std::string& text, const std::string& where) {
  try {
    return parse_rational(text);
  } catch (const NumberFormatError& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

RationalVector parse_numbers(const std::vector<std::string>& texts, const std::string& where) {
  RationalVector out;
  for (std::size_t k = 0; k < texts.size(); ++k) out.push_back(parse_number(texts[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

std::size_t positive_index(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw DocumentError(where + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

CommunityDocument parse_document(std::string_view json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("document must be a JSON object");

  CommunityDocument doc;
  if (root.contains("name")) doc.name = root.at("name").get<std::string>();
  const auto& dim = field(root, "dimension", "document");
  doc.dimension = positive_index(dim, "dimension");

  const auto& axes = field(root, "axes", "document");
  if (!axes.is_array() || axes.size() != doc.dimension) throw DocumentError("axes: expected one list per dimension");
  for (std::size_t k = 0; k < axes.size(); ++k) doc.axes.push_back(number_list(axes[k], "axes[" + std::to_string(k) + "]"));

  const auto& agents = field(root, "agents", "document");
  if (!agents.is_array() || agents.empty()) throw DocumentError("agents: expected a nonempty array");
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const std::string where = "agents[" + std::to_string(k) + "]";
    CommunityDocument::Agent a;
    a.id = positive_index(field(agents[k], "id", where), where + ".id");
    if (!seen.insert(a.id).second) throw DocumentError(where + ": duplicate agent id " + std::to_string(a.id));
    const auto& v = field(agents[k], "v", where);
    const auto& p = field(agents[k], "p", where);
    if (!v.is_string() || !p.is_string()) throw DocumentError(where + ": v and p must be expression strings");
    a.v = v.get<std::string>();
    a.p = p.get<std::string>();
    doc.agents.push_back(std::move(a));
  }
  std::sort(doc.agents.begin(), doc.agents.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  if (doc.agents.back().id != doc.agents.size()) throw DocumentError("agents: ids must be 1..n");

  if (root.contains("tolerance")) doc.tolerance = number_text(root.at("tolerance"), "tolerance");

  if (root.contains("matrix") && !root.at("matrix").is_null()) {
    const auto& m = root.at("matrix");
    CommunityDocument::Matrix mat;
    const auto& rows = field(m, "A", "matrix");
    if (!rows.is_array()) throw DocumentError("matrix.A: expected an array of rows");
    for (std::size_t r = 0; r < rows.size(); ++r) mat.A.push_back(number_list(rows[r], "matrix.A[" + std::to_string(r) + "]"));
    if (m.contains("kappa")) {
      mat.kappa = number_list(m.at("kappa"), "matrix.kappa");
    } else {
      mat.kappa.assign(mat.A.size(), "0");
    }
    doc.matrix = std::move(mat);
  }

  if (root.contains("witness_hints")) {
    const auto& hints = root.at("witness_hints");
    if (!hints.is_array()) throw DocumentError("witness_hints: expected an array");
    for (std::size_t k = 0; k < hints.size(); ++k) {
      const std::string where = "witness_hints[" + std::to_string(k) + "]";
      CommunityDocument::Hint h;
      h.condition = field(hints[k], "condition", where).get<std::string>();
      if (hints[k].contains("agents")) {
        for (const auto& [name, id] : hints[k].at("agents").items()) {
          h.agents.emplace_back(name, positive_index(id, where + ".agents." + name));
        }
      }
      if (hints[k].contains("coalition")) {
        std::vector<std::size_t> members;
        for (const auto& id : hints[k].at("coalition")) members.push_back(positive_index(id, where + ".coalition"));
        h.coalition = std::move(members);
      }
      if (hints[k].contains("states")) {
        for (const auto& [name, coords] : hints[k].at("states").items()) {
          h.states.emplace_back(name, number_list(coords, where + ".states." + name));
        }
      }
      doc.witness_hints.push_back(std::move(h));
    }
  }
  return doc;
}

std::string to_json(const CommunityDocument& doc) {
  ordered_json root;
  if (!doc.name.empty()) root["name"] = doc.name;
  root["dimension"] = doc.dimension;
  root["axes"] = doc.axes;
  root["agents"] = ordered_json::array();
  for (const auto& a : doc.agents) root["agents"].push_back({{"id", a.id}, {"v", a.v}, {"p", a.p}});
  root["tolerance"] = doc.tolerance;
  if (doc.matrix) root["matrix"] = {{"A", doc.matrix->A}, {"kappa", doc.matrix->kappa}};
  if (!doc.witness_hints.empty()) {
    root["witness_hints"] = ordered_json::array();
    for (const auto& h : doc.witness_hints) {
      ordered_json j;
      j["condition"] = h.condition;
      if (!h.agents.empty()) {
        j["agents"] = ordered_json::object();
        for (const auto& [name, id] : h.agents) j["agents"][name] = id;
      }
      if (h.coalition) j["coalition"] = *h.coalition;
      j["states"] = ordered_json::object();
      for (const auto& [name, coords] : h.states) j["states"][name] = coords;
      root["witness_hints"].push_back(std::move(j));
    }
  }
  return root.dump(2) + "\n";
}

Community build_community(const CommunityDocument& doc) {
  std::vector<RationalVector> axes;
  for (std::size_t k = 0; k < doc.axes.size(); ++k) axes.push_back(parse_numbers(doc.axes[k], "axes[" + std::to_string(k) + "]"));
  std::vector<AgentSpec> agents;
  for (const auto& a : doc.agents) {
    const std::string where = "agent " + std::to_string(a.id);
    try {
      agents.push_back({a.id, parse_expr(a.v, doc.dimension), parse_expr(a.p, doc.dimension)});
    } catch (const ParseError& e) {
      throw DocumentError(where + ": " + e.what());
    }
  }
  try {
    return Community(StateGrid(std::move(axes)), std::move(agents), parse_number(doc.tolerance, "tolerance"));
  } catch (const EvaluationError& e) {
    throw DocumentError(e.what());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

std::optional<AffineRepresentation> build_representation(const CommunityDocument& doc) {
  if (!doc.matrix) return std::nullopt;
  const std::size_t n = doc.agents.size();
  if (doc.matrix->A.size() != n || doc.matrix->kappa.size() != n) {
    throw DocumentError("matrix: expected " + std::to_string(n) + " rows and kappa entries");
  }
  AffineRepresentation repr;
  for (std::size_t r = 0; r < n; ++r) {
    if (doc.matrix->A[r].size() != n) throw DocumentError("matrix.A: row " + std::to_string(r + 1) + " has wrong length");
    repr.A.push_back(parse_numbers(doc.matrix->A[r], "matrix.A[" + std::to_string(r) + "]"));
  }
  repr.kappa = parse_numbers(doc.matrix->kappa, "matrix.kappa");
  return repr;
}

std::vector<WitnessHint> build_hints(const CommunityDocument& doc) {
  std::vector<WitnessHint> out;
  for (std::size_t k = 0; k < doc.witness_hints.size(); ++k) {
    const auto& h = doc.witness_hints[k];
    const std::string where = "witness_hints[" + std::to_string(k) + "]";
    const auto cond = condition_from_name(h.condition);
    if (!cond) throw DocumentError(where + ": unknown condition \"" + h.condition + "\"");
    WitnessHint hint{*cond, {}};
    for (const auto& [name, id] : h.agents) {
      if (id > doc.agents.size()) throw DocumentError(where + ": agent " + std::to_string(id) + " does not exist");
      hint.witness.agents.emplace_back(name, id - 1);
    }
    if (h.coalition) {
      Coalition coalition;
      for (std::size_t id : *h.coalition) {
        if (id > doc.agents.size()) throw DocumentError(where + ": agent " + std::to_string(id) + " does not exist");
        coalition.members.push_back(id - 1);
      }
      std::sort(coalition.members.begin(), coalition.members.end());
      hint.witness.coalition = std::move(coalition);
    }
    for (const auto& [name, coords] : h.states) {
      if (coords.size() != doc.dimension) throw DocumentError(where + ": state " + name + " has wrong dimension");
      hint.witness.states.emplace_back(name, State{parse_numbers(coords, where + ".states." + name)});
    }
    out.push_back(std::move(hint));
  }
  return out;
}

std::vector<std::string> example_names() { return {"sec-c", "sec-f", "sec-j"}; }

CommunityDocument example_document(std::string_view name, std::size_t levels) {
  CommunityDocument doc;
  doc.name = std::string(name);
  if (name == "sec-c") {
    if (levels < 2) throw DocumentError("sec-c needs at least two levels");
    doc.dimension = 1;
    std::vector<std::string> axis;
    for (std::size_t k = 0; k < levels; ++k) {
      axis.push_back(format_rational(Rational(static_cast<long>(k)) / Rational(static_cast<long>(levels - 1))));
    }
    doc.axes = {axis};
    doc.agents = {{1, "-x1", "x1"}, {2, "x1", "-x1"}, {3, "-x1", "x1"}, {4, "x1", "-x1"}};
    return doc;
  }
  if (name == "sec-f") {
    doc.dimension = 2;
    doc.axes = {{"0", "1"}, {"0", "1"}};
    doc.agents = {{1, "x1", "2*x1 - x2"}, {2, "x2", "2*x2 - x1"}};
    doc.matrix = CommunityDocument::Matrix{{{"2", "-1"}, {"-1", "2"}}, {"0", "0"}};
    doc.witness_hints.push_back({"nonmalevolence", {{"j", 2}}, std::nullopt, {{"x", {"1", "0"}}, {"y", {"0", "0"}}}});
    return doc;
  }
  if (name == "sec-j") {
    doc.dimension = 3;
    const std::vector<std::string> axis{"0", "1", "2", "3", "7"};
    doc.axes = {axis, axis, axis};
    doc.agents = {{1, "x1", "min(x1/2, x2, x3)"}, {2, "x2", "min(x2/2, x1, x3)"}, {3, "x3", "min(x3/2, x1, x2)"}};
    doc.witness_hints.push_back({"separability",
                                 {{"i", 1}},
                                 std::vector<std::size_t>{1},
                                 {{"w", {"1", "2", "2"}}, {"x", {"2", "2", "2"}}, {"y", {"1", "0", "0"}}, {"z", {"2", "0", "0"}}}});
    const std::vector<std::string> lo{"2", "2", "2"}, hi{"3", "2", "2"};
    doc.witness_hints.push_back({"interest-cardinality",
                                 {{"h", 2}, {"i", 1}, {"j", 1}},
                                 std::nullopt,
                                 {{"w_h", lo}, {"x_h", hi}, {"y_h", hi}, {"z_h", lo}, {"w_i", lo}, {"x_i", hi}, {"y_i", hi}, {"z_i", lo}}});
    const std::vector<std::string> h_lo{"2", "3", "3"}, h_hi{"3", "3", "3"}, i_lo{"2", "3", "7"}, i_hi{"3", "3", "7"};
    doc.witness_hints.push_back({"preference-cardinality",
                                 {{"h", 2}, {"i", 3}, {"j", 1}},
                                 std::nullopt,
                                 {{"w_h", h_lo}, {"x_h", h_hi}, {"y_h", h_hi}, {"z_h", h_lo},
                                  {"w_i", i_lo}, {"x_i", i_hi}, {"y_i", i_hi}, {"z_i", i_lo}}});
    return doc;
  }
  throw DocumentError("unknown example \"" + std::string(name) + "\" (expected sec-c, sec-f or sec-j)");
}

}  // namespace succession
