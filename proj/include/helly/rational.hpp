#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace helly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", integer, or exact decimal ("-1.25", "3e-2"); MalformedInput otherwise.
Rational parse_rational(const std::string& text);
// JSON integer, JSON float (through its shortest round-trip decimal), or a
// string accepted by parse_rational.
Rational rational_from_json(const nlohmann::json& j);
// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

}  // namespace helly
