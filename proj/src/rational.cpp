#include "helly/rational.hpp"

#include <cctype>
#include <charconv>
#include <string_view>

#include "helly/errors.hpp"

namespace helly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix, so strip it first.
BigInt decimal_int(std::string_view digits) {
  const std::size_t nz = digits.find_first_not_of('0');
  return BigInt(std::string(nz == std::string_view::npos ? "0" : digits.substr(nz)));
}

BigInt pow10(unsigned n) {
  BigInt p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 10;
  return p;
}

Rational parse_decimal(std::string_view s, const std::string& original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) throw MalformedInput("bad number '" + original + "'");
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) || (int_part.empty() && frac_part.empty())) {
      throw MalformedInput("bad number '" + original + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw MalformedInput("bad number '" + original + "'");
    digits = std::string(s);
  }
  const long shift = exponent - fraction_digits;
  Rational value{decimal_int(digits)};
  if (shift > 0) value *= pow10(static_cast<unsigned>(shift));
  if (shift < 0) value /= pow10(static_cast<unsigned>(-shift));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw MalformedInput("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw MalformedInput("bad rational '" + text + "'");
    }
    BigInt q = decimal_int(den);
    if (q == 0) throw MalformedInput("zero denominator in '" + text + "'");
    BigInt p = decimal_int(num_digits);
    if (num.front() == '-') p = -p;
    return Rational(p, q);
  }
  return parse_decimal(s, text);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
    return parse_rational(std::string(buf, res.ptr));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw MalformedInput("expected a number or a rational string, got " + j.dump());
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace helly
