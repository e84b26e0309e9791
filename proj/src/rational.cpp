#include "succession/rational.hpp"

#include <cctype>

namespace succession {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view digits) {
  // The string constructor treats a leading zero as an octal prefix.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return boost::multiprecision::mpz_int(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw NumberFormatError("malformed rational '" + original + "'");
    }
    auto d = parse_integer(den);
    if (d == 0) throw NumberFormatError("zero denominator in '" + original + "'");
    value = Rational(parse_integer(num), d);
  } else {
    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac))) {
      throw NumberFormatError("malformed decimal '" + original + "'");
    }
    boost::multiprecision::mpz_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const std::string digits = std::string(whole) + std::string(frac);
    value = Rational(parse_integer(digits), scale);
  }
  return negative ? Rational(-value) : value;
}

bool has_terminating_decimal(const Rational& value) {
  boost::multiprecision::mpz_int den = boost::multiprecision::denominator(value);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

std::string format_rational(const Rational& value) {
  using boost::multiprecision::mpz_int;
  const mpz_int num = boost::multiprecision::numerator(value);
  const mpz_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  if (!has_terminating_decimal(value)) return num.str() + "/" + den.str();

  // Scale to an integer over 10^k, then splice in the decimal point.
  mpz_int scaled_den = 1;
  std::size_t places = 0;
  while (scaled_den % den != 0) {
    scaled_den *= 10;
    ++places;
  }
  mpz_int magnitude = num < 0 ? mpz_int(-num) : num;
  mpz_int scaled = magnitude * (scaled_den / den);
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (num < 0 ? "-" : "") + digits;
}

}  // namespace succession
