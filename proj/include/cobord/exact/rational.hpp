#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cobord::exact {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);
  explicit Rational(const mpz_class& value) : value_(value) {}

  /// Accepts "p", "-p" or "p/q"; the result is reduced.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// "p/q", with "/q" omitted when q = 1.
  std::string to_string() const;

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

/// Exponent of the prime p in |z| (z != 0).
unsigned long valuation(const mpz_class& z, unsigned long p);

}  // namespace cobord::exact

template <>
struct std::hash<cobord::exact::Rational> {
  std::size_t operator()(const cobord::exact::Rational& r) const noexcept { return r.hash(); }
};
