#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace succession {

/// Exact rational scalar used for grid levels, utility values and matrix entries.
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

class NumberFormatError : public std::runtime_error {
 public:
  explicit NumberFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "12", "-0.25", "3/4" or "-7/2" exactly. Leading/trailing blanks are
/// rejected so that fixture files stay canonical.
Rational parse_rational(std::string_view text);

/// Exact decimal rendering when the denominator is 2^a 5^b, otherwise "p/q".
std::string format_rational(const Rational& value);

/// True when `value` has a terminating decimal expansion.
bool has_terminating_decimal(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace succession
