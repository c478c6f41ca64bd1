#include "kreg/rational.hpp"

#include <cctype>

#include "kreg/errors.hpp"
#include "kreg/numeric.hpp"

namespace kreg {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(text)) throw ParseError(0, "expected integer or a/b: '" + text + "'");
    return Rational(Int(text));
  }
  std::string n = text.substr(0, slash), d = text.substr(slash + 1);
  if (!is_int(n) || !is_int(d)) throw ParseError(slash, "expected integer or a/b: '" + text + "'");
  Int den(d);
  if (sgn(den) == 0) throw ParseError(slash, "zero denominator");
  return Rational(Int(n), den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  v_ /= b.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rational::mod_p(std::uint64_t p) const {
  // mpz_fdiv_ui returns a nonnegative residue even for negative operands.
  std::uint64_t d = mpz_fdiv_ui(v_.get_den().get_mpz_t(), p);
  if (d == 0) throw BadPrimeError("denominator vanishes mod " + std::to_string(p));
  std::uint64_t n = mpz_fdiv_ui(v_.get_num().get_mpz_t(), p);
  return mulmod(n, invmod(d, p), p);
}

}  // namespace kreg
