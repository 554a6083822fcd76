#include "hivecomb/rational.hpp"

#include <regex>
#include <stdexcept>

namespace hivecomb {

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) throw std::invalid_argument("not a rational: '" + text + "'");
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den(1);
  if (m[2].matched) den = Integer(m[2].str());
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(num, den);
}

std::int64_t to_int64(const Rational& q) {
  return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

}  // namespace hivecomb
