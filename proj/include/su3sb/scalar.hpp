#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace su3sb {

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1 after every operation.
class Rational {
public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(to_mpz(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}
  explicit Rational(mpq_class value);

  /// Throws std::domain_error when `den` is zero.
  static Rational normalize(const mpz_class& num, const mpz_class& den);
  static Rational normalize(long num, long den);

  /// Accepts "p" or "p/q" with an optional leading minus sign.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.value_ < rhs.value_; }
  friend bool operator>(const Rational& lhs, const Rational& rhs) { return rhs < lhs; }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) { return !(lhs < rhs); }

private:
  template <std::integral T>
  static mpz_class to_mpz(T value) {
    if constexpr (std::is_signed_v<T>) {
      return mpz_class(static_cast<long>(value));
    } else {
      return mpz_class(static_cast<unsigned long>(value));
    }
  }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

inline Rational conj(const Rational& x) { return x; }

/// Element w + x·i + y·√3 + z·i√3 of the field Q(i, √3).
class ExtScalar {
public:
  ExtScalar() = default;
  ExtScalar(const Rational& w) : c_{w, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  ExtScalar(int w) : c_{Rational(w), 0, 0, 0} {}    // NOLINT(google-explicit-constructor)
  ExtScalar(Rational w, Rational x, Rational y, Rational z)
      : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  static ExtScalar i() { return {0, 1, 0, 0}; }
  static ExtScalar sqrt3() { return {0, 0, 1, 0}; }

  const Rational& real() const { return c_[0]; }
  const Rational& imag() const { return c_[1]; }
  const Rational& sqrt3_part() const { return c_[2]; }
  const Rational& imag_sqrt3_part() const { return c_[3]; }
  const std::array<Rational, 4>& components() const { return c_; }

  bool is_zero() const;
  /// True when x = y = z = 0.
  bool is_rational() const;

  /// Complex conjugation: i ↦ −i, √3 fixed.
  ExtScalar conjugate() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

  /// Throws std::domain_error on zero.
  ExtScalar inverse() const;

  /// "[w, x, y, z]" with each component in Rational string form.
  std::string to_string() const;

  ExtScalar& operator+=(const ExtScalar& other);
  ExtScalar& operator-=(const ExtScalar& other);
  ExtScalar& operator*=(const ExtScalar& other);
  ExtScalar& operator/=(const ExtScalar& other) { return *this *= other.inverse(); }

  friend ExtScalar operator+(ExtScalar lhs, const ExtScalar& rhs) { return lhs += rhs; }
  friend ExtScalar operator-(ExtScalar lhs, const ExtScalar& rhs) { return lhs -= rhs; }
  friend ExtScalar operator*(ExtScalar lhs, const ExtScalar& rhs) { return lhs *= rhs; }
  friend ExtScalar operator/(ExtScalar lhs, const ExtScalar& rhs) { return lhs /= rhs; }
  friend ExtScalar operator-(const ExtScalar& x) { return {-x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]}; }

  friend bool operator==(const ExtScalar& lhs, const ExtScalar& rhs) { return lhs.c_ == rhs.c_; }

private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& x);

inline ExtScalar conj(const ExtScalar& x) { return x.conjugate(); }

/// Free product; same as `a * b`.
ExtScalar ext_mul(const ExtScalar& a, const ExtScalar& b);

/// Coefficient field of a StateVector.
template <class S>
concept Scalar = std::regular<S> && requires(const S& x, const Rational& q) {
  { x + x } -> std::convertible_to<S>;
  { x - x } -> std::convertible_to<S>;
  { x * x } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.to_string() } -> std::convertible_to<std::string>;
  { conj(x) } -> std::convertible_to<S>;
  S(q);
};

/// n! as an exact integer.
mpz_class factorial(unsigned n);

}  // namespace su3sb
