#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pdnet {

/// Exact rational number in canonical form (positive denominator, reduced).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  /// Parses "[+-]p" or "[+-]p/q". Throws ParseError with the offset of the
  /// first bad character.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const noexcept { return sgn(value_); }

  /// "p" when the denominator is 1, else "p/q".
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_{0};
};

}  // namespace pdnet
