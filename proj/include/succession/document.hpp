#pragma once

#include "succession/axioms.hpp"
#include "succession/representation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace succession {

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// JSON community description. Numbers are kept as the strings written in the
/// file ("0.25", "3/4") and parsed to exact rationals on load.
struct CommunityDocument {
  struct Agent {
    std::size_t id = 0;  // 1..n
    std::string v;
    std::string p;
  };
  struct Matrix {
    std::vector<std::vector<std::string>> A;
    std::vector<std::string> kappa;
  };
  struct Hint {
    std::string condition;
    std::vector<std::pair<std::string, std::size_t>> agents;  // 1-based
    std::optional<std::vector<std::size_t>> coalition;       // 1-based
    std::vector<std::pair<std::string, std::vector<std::string>>> states;
  };

  std::string name;
  std::size_t dimension = 0;
  std::vector<std::vector<std::string>> axes;
  std::vector<Agent> agents;
  std::string tolerance = "0";
  std::optional<Matrix> matrix;
  std::vector<Hint> witness_hints;
};

/// Throws DocumentError for malformed JSON, missing fields, or ids that are not
/// a permutation of 1..n. Agents come back sorted by id.
CommunityDocument parse_document(std::string_view json_text);
std::string to_json(const CommunityDocument& doc);

/// Throws DocumentError when an expression or number does not parse.
Community build_community(const CommunityDocument& doc);
std::optional<AffineRepresentation> build_representation(const CommunityDocument& doc);
std::vector<WitnessHint> build_hints(const CommunityDocument& doc);

/// "sec-c", "sec-f", "sec-j". `levels` applies to the single axis of sec-c.
CommunityDocument example_document(std::string_view name, std::size_t levels = 5);
std::vector<std::string> example_names();

}  // namespace succession
