#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kreg {

using Int = mpz_class;

/// Arbitrary-precision rational scalar.  Always stored in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : v_(n) {}    // NOLINT(google-explicit-constructor)
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  /// Parses "a", "-a" or "a/b".  Throws ParseError on malformed input.
  static Rational parse(const std::string& text);

  const Int& num() const { return v_.get_num(); }
  const Int& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical form: "a" for integers, otherwise "a/b" in lowest terms.
  std::string str() const;

  /// Residue num * den^-1 mod p.  Throws BadPrimeError when p divides den.
  std::uint64_t mod_p(std::uint64_t p) const;

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;  // kept canonical by construction
};

}  // namespace kreg
