#include "pdnet/gaussian.hpp"

#include <cctype>

#include "pdnet/errors.hpp"

namespace pdnet {

namespace {

// Parses an unsigned "p" or "p/q" starting at pos; an empty term (e.g. the
// coefficient in "+i") yields 1. Returns the end offset.
std::size_t parse_unsigned_term(std::string_view s, std::size_t pos, Rational& out) {
  std::size_t end = pos;
  while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
  if (end == pos) {
    out = Rational(1);
    return end;
  }
  try {
    out = Rational::parse(s.substr(pos, end - pos));
  } catch (const ParseError& e) {
    throw ParseError("malformed number in '" + std::string(s) + "'", pos + e.position());
  }
  return end;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::size_t first = 0;
  std::size_t last = text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  const std::string_view s = text.substr(first, last - first);
  if (s.empty()) throw ParseError("empty scalar", first);

  auto fail = [&](const std::string& msg, std::size_t pos) -> ParseError {
    return ParseError(msg + " in '" + std::string(s) + "'", first + pos);
  };

  std::size_t pos = 0;
  int lead_sign = 1;
  if (s[pos] == '+' || s[pos] == '-') {
    lead_sign = s[pos] == '-' ? -1 : 1;
    ++pos;
  }
  const bool lead_has_digits = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  Rational lead;
  std::size_t end;
  try {
    end = parse_unsigned_term(s, pos, lead);
  } catch (const ParseError& e) {
    throw fail("malformed number", e.position());
  }
  if (lead_sign < 0) lead = -lead;

  if (end == s.size()) {
    if (!lead_has_digits) throw fail("expected digits", pos);
    return GaussianRational(lead);
  }
  if (s[end] == 'i') {
    if (end + 1 != s.size()) throw fail("trailing characters after 'i'", end + 1);
    return GaussianRational(Rational(0), lead);
  }
  if (!lead_has_digits) throw fail("expected digits", pos);
  if (s[end] != '+' && s[end] != '-') throw fail("unexpected character", end);

  const int im_sign = s[end] == '-' ? -1 : 1;
  Rational im;
  std::size_t im_end;
  try {
    im_end = parse_unsigned_term(s, end + 1, im);
  } catch (const ParseError& e) {
    throw fail("malformed imaginary part", e.position());
  }
  if (im_end >= s.size() || s[im_end] != 'i') throw fail("expected 'i'", im_end);
  if (im_end + 1 != s.size()) throw fail("trailing characters after 'i'", im_end + 1);
  if (im_sign < 0) im = -im;
  return {lead, im};
}

std::optional<int> GaussianRational::sign() const noexcept {
  if (!is_real()) return std::nullopt;
  return re_.sign();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.to_string();
  std::string out = re_.to_string();
  if (im_.sign() < 0) {
    out += "-" + (-im_).to_string();
  } else {
    out += "+" + im_.to_string();
  }
  out += "i";
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational n = rhs.norm();
  Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
  Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace pdnet
