#include "cobord/exact/rational.hpp"

#include <stdexcept>

namespace cobord::exact {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i == part.size()) throw std::invalid_argument("malformed rational literal '" + s + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
      }
    }
  };
  if (slash == std::string::npos) {
    check_int(s, true);
    return Rational(mpz_class(s, 10));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("rational literal with zero denominator '" + s + "'");
  return Rational(mpq_class(mpz_class(num, 10), d));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    mpq_class inv = 1 / value_;
    return Rational(inv).pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
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
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Low limbs of numerator and denominator are enough to spread small values.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    if (mpz_size(z.get_mpz_t()) == 0) return 0;
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * (sgn(z) < 0 ? 31 : 1);
  };
  std::size_t h = limb(value_.get_num());
  h ^= limb(value_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

unsigned long valuation(const mpz_class& z, unsigned long p) {
  if (z == 0) throw std::domain_error("valuation of zero");
  mpz_class rest = abs(z);
  unsigned long count = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++count;
  }
  return count;
}

}  // namespace cobord::exact
