#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "pdnet/rational.hpp"

namespace pdnet {

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "p/q", "a/b+c/di", "a/b-c/di", "c/di", "i", "-i" (denominators
  /// optional everywhere). Leading/trailing blanks are ignored.
  static GaussianRational parse(std::string_view text);

  [[nodiscard]] const Rational& re() const noexcept { return re_; }
  [[nodiscard]] const Rational& im() const noexcept { return im_; }

  [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }
  [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  /// Sign of a real value; nullopt when the imaginary part is nonzero.
  [[nodiscard]] std::optional<int> sign() const noexcept;
  /// True iff real and strictly positive.
  [[nodiscard]] bool is_positive_real() const noexcept { return is_real() && re_.sign() > 0; }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as a rational.
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

  /// "p/q" when real, otherwise "a/b+c/di" (re always printed).
  [[nodiscard]] std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace pdnet
