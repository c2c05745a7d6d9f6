#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Text form is "p/q"; `parse` also
/// accepts integers, finite decimals ("0.125", "1e-6") and powers of two
/// ("2^-64").
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  static Rational parse(std::string_view text);
  static Rational pow2(long exponent);

  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] Integer numerator() const { return value_.get_num(); }
  [[nodiscard]] Integer denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", denominator always written.
  [[nodiscard]] std::string str() const;
  /// Fixed-point decimal with `digits` places, rounded half away from zero.
  [[nodiscard]] std::string to_decimal(int digits) const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// Natural log for positive values, accurate for huge numerators/denominators.
  [[nodiscard]] double log() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

[[nodiscard]] Rational pow(const Rational& base, std::size_t exponent);
[[nodiscard]] Integer floor(const Rational& value);
[[nodiscard]] Rational abs(const Rational& value);
[[nodiscard]] const Rational& min(const Rational& a, const Rational& b);
[[nodiscard]] const Rational& max(const Rational& a, const Rational& b);

std::size_t hash_value(const Rational& value);

}  // namespace cantor

template <>
struct std::hash<cantor::Rational> {
  std::size_t operator()(const cantor::Rational& r) const { return cantor::hash_value(r); }
};
