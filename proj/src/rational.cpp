#include "lgraph/rational.hpp"

#include <stdexcept>

namespace lgraph {

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  using Int = boost::multiprecision::mpz_int;
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
    Int num(std::string(text.substr(0, slash)));
    Int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace lgraph
