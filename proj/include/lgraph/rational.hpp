#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lgraph {

/// Exact rational scalar used for every coordinate and length.
using Rational = boost::multiprecision::mpq_rational;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Serializes as "numerator/denominator", always with an explicit denominator.
std::string to_string(const Rational& q);

/// Accepts "p/q" or a plain integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace lgraph
