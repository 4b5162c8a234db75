#include "dyckdiv/rational.hpp"

#include <ostream>
#include <regex>
#include <stdexcept>

namespace dyckdiv {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0)
    throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  return Rational(numerator, denominator);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.sign() == 0)
    throw std::domain_error("rational division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

Rational Rational::parse(std::string_view text) {
  static const std::regex fraction(R"((-?[0-9]+)(?:/([1-9][0-9]*))?)");
  static const std::regex decimal(R"((-?)([0-9]+)\.([0-9]+))");

  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    BigInt num(m[1].str(), 10);
    BigInt den = m[2].matched ? BigInt(m[2].str(), 10) : BigInt(1);
    return Rational(num, den);
  }
  if (std::regex_match(s, m, decimal)) {
    const std::string digits = m[2].str() + m[3].str();
    BigInt num(digits, 10);
    if (m[1].length() != 0) num = -num;
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
    return Rational(num, den);
  }
  throw std::invalid_argument("not a rational literal: '" + s + "'");
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dyckdiv
