#include "pdnet/rational.hpp"

#include <cctype>
#include <utility>

#include "pdnet/errors.hpp"

namespace pdnet {

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t num_begin = pos;
  pos = scan_digits(text, pos);
  if (pos == num_begin) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  mpz_class num(std::string(text.substr(num_begin, pos - num_begin)), 10);
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == den_begin) throw ParseError("expected denominator digits in '" + std::string(text) + "'", pos);
    den = mpz_class(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", den_begin);
  }
  if (pos != text.size()) throw ParseError("unexpected character in rational '" + std::string(text) + "'", pos);
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace pdnet
