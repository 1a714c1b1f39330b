#include "su3sb/scalar.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace su3sb {

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::normalize(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::normalize(long num, long den) { return normalize(mpz_class(num), mpz_class(den)); }

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("malformed integer literal");
  }
  for (std::size_t k = start; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  return normalize(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

bool ExtScalar::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool ExtScalar::is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

ExtScalar& ExtScalar::operator+=(const ExtScalar& other) {
  for (std::size_t k = 0; k < 4; ++k) {
    c_[k] += other.c_[k];
  }
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& other) {
  for (std::size_t k = 0; k < 4; ++k) {
    c_[k] -= other.c_[k];
  }
  return *this;
}

// Basis {1, i, s, is} with i² = −1, s² = 3.
ExtScalar& ExtScalar::operator*=(const ExtScalar& other) {
  const auto& [w1, x1, y1, z1] = c_;
  const auto& [w2, x2, y2, z2] = other.c_;
  Rational w = w1 * w2 - x1 * x2 + 3 * (y1 * y2) - 3 * (z1 * z2);
  Rational x = w1 * x2 + x1 * w2 + 3 * (y1 * z2 + z1 * y2);
  Rational y = w1 * y2 + y1 * w2 - (x1 * z2 + z1 * x2);
  Rational z = w1 * z2 + z1 * w2 + x1 * y2 + y1 * x2;
  c_ = {std::move(w), std::move(x), std::move(y), std::move(z)};
  return *this;
}

// Write the element as u + v·i with u = w + y√3, v = x + z√3 in Q(√3).
// Then 1/(u + v i) = (u − v i)/(u² + v²), and u² + v² = p + q√3 is inverted
// through its Q(√3)-conjugate p − q√3 (norm p² − 3q² ≠ 0 since √3 ∉ Q).
ExtScalar ExtScalar::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  const auto& [w, x, y, z] = c_;
  Rational p = w * w + 3 * (y * y) + x * x + 3 * (z * z);
  Rational q = 2 * (w * y) + 2 * (x * z);
  Rational norm = p * p - 3 * (q * q);
  ExtScalar inv_norm(p / norm, 0, -q / norm, 0);
  return conjugate() * inv_norm;
}

std::string ExtScalar::to_string() const {
  return "[" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ", " +
         c_[3].to_string() + "]";
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.to_string(); }

ExtScalar ext_mul(const ExtScalar& a, const ExtScalar& b) { return a * b; }

mpz_class factorial(unsigned n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace su3sb
