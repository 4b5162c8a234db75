#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace dyckdiv {

using BigInt = mpz_class;

/**
 * Exact arbitrary-precision fraction.
 *
 * Always held in canonical form: the denominator is positive and coprime to
 * the numerator, zero is 0/1. Value type; every operation returns a fresh
 * canonical Rational.
 */
class Rational {
public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {
    static_assert(sizeof(I) <= sizeof(long), "use the BigInt constructor");
    if constexpr (std::is_signed_v<I>)
      value_ = static_cast<long>(value);
    else
      value_ = static_cast<unsigned long>(value);
  }

  explicit Rational(const BigInt& integer) : value_(integer) {}

  // Throws std::invalid_argument when the denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts `-?[0-9]+(/[1-9][0-9]*)?` and finite decimals `-?[0-9]+\.[0-9]+`.
  // Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Approximate, for display only.
  double to_double() const { return value_.get_d(); }

  // `p/q` in lowest terms, or `p` when q = 1.
  std::string to_string() const;

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }
  // Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) <=> 0;
  }

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

// Canonical Rational equal to numerator/denominator; throws on a zero denominator.
Rational make_rational(const BigInt& numerator, const BigInt& denominator);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dyckdiv
