#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kreg/rational.hpp"

namespace kreg {

/// Exponent vector of a monomial; one entry per variable.
using Exponents = std::vector<unsigned>;

/// Total-degree-then-lexicographic order (earlier variables weigh more).
bool deglex_less(const Exponents& a, const Exponents& b);
unsigned total_degree(const Exponents& e);

struct DeglexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return deglex_less(b, a);
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept deglex-descending; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, DeglexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars);

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial monomial(std::size_t num_vars, const Exponents& exps,
                             const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponents& exps, const Rational& c);

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

inline bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.num_vars() == b.num_vars() && a.terms() == b.terms();
}

/// Exact value of f at a rational point.
Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

/// Apolarity action: `op`, read as a polynomial in the partial-derivative
/// operators, applied to f.  Bilinear; contract(1, f) = f.
Polynomial contract(const Polynomial& op, const Polynomial& f);

/// Canonical text form: deglex-descending terms, lowest-term coefficients.
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

/// Parses the polynomial grammar (terms joined by +/-, coefficients "a" or
/// "a/b", powers "v^e").  Inverse of to_string.  Throws ParseError.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& names);

/// "t1", ..., "tm".
std::vector<std::string> default_var_names(std::size_t m);

/// All exponent vectors of the given total degree (resp. up to the degree),
/// lex-descending within a degree, degrees ascending.
std::vector<Exponents> exponents_of_degree(std::size_t num_vars, unsigned degree);
std::vector<Exponents> exponents_up_to_degree(std::size_t num_vars, unsigned degree);

}  // namespace kreg
