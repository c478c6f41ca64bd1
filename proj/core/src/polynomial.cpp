#include "kreg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kreg/errors.hpp"

namespace kreg {

bool deglex_less(const Exponents& a, const Exponents& b) {
  unsigned ta = 0, tb = 0;
  for (unsigned e : a) ta += e;
  for (unsigned e : b) tb += e;
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

unsigned total_degree(const Exponents& e) {
  unsigned t = 0;
  for (unsigned x : e) t += x;
  return t;
}

Polynomial::Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  if (!c.is_zero()) p.terms_.emplace(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(std::size_t num_vars, const Exponents& exps,
                                const Rational& c) {
  if (exps.size() != num_vars) throw ArityError("exponent vector length mismatch");
  Polynomial p(num_vars);
  if (!c.is_zero()) p.terms_.emplace(exps, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(num_vars, e, Rational(1));
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != num_vars_) throw ArityError("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars()) throw ArityError("variable count mismatch");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars()) throw ArityError("variable count mismatch");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial r(a.num_vars());
  if (c.is_zero()) return r;
  for (const auto& [e, q] : a.terms()) r.add_term(e, c * q);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars()) throw ArityError("variable count mismatch");
  Polynomial r(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(a.num_vars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
  if (point.size() != f.num_vars()) throw ArityError("point length mismatch");
  // Powers are cached per variable up to the largest exponent used.
  std::vector<unsigned> max_exp(f.num_vars(), 0);
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  std::vector<std::vector<Rational>> pow(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    pow[i].resize(max_exp[i] + 1, Rational(1));
    for (unsigned j = 1; j <= max_exp[i]; ++j) pow[i][j] = pow[i][j - 1] * point[i];
  }
  Rational acc(0);
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= pow[i][e[i]];
    acc += t;
  }
  return acc;
}

Polynomial contract(const Polynomial& op, const Polynomial& f) {
  if (op.num_vars() != f.num_vars()) throw ArityError("variable count mismatch");
  Polynomial r(f.num_vars());
  for (const auto& [a, ca] : op.terms()) {
    for (const auto& [b, cb] : f.terms()) {
      bool divides = true;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) { divides = false; break; }
      if (!divides) continue;
      // Falling factorial from repeated differentiation of x_i^{b_i}.
      Int scale = 1;
      Exponents e(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        e[i] = b[i] - a[i];
        for (unsigned j = 0; j < a[i]; ++j) scale *= Int(b[i] - j);
      }
      r.add_term(e, ca * cb * Rational(scale));
    }
  }
  return r;
}

// --- text format -----------------------------------------------------------

std::vector<std::string> default_var_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
  if (names.size() != f.num_vars()) throw ArityError("variable name list length mismatch");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // The term map is ordered deglex-descending, so iteration order is canonical.
  for (const auto& [e, c] : f.terms()) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out << a.str();
    } else if (a == Rational(1)) {
      out << vars;
    } else {
      out << a.str() << "*" << vars;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& names;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected digits");
    return Int(s.substr(start, pos - start));
  }

  std::size_t variable() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw ParseError(start, "unknown variable '" + name + "'");
  }

  // term := coefficient ['*' powers] | powers;  powers := var['^'e]('*'var['^'e])*
  void term(Polynomial& acc, int sign) {
    Rational coef(sign);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int n = integer();
      if (peek() == '/') {
        ++pos;
        Int d = integer();
        if (sgn(d) == 0) throw ParseError(pos, "zero denominator");
        coef = coef * Rational(n, d);
      } else {
        coef = coef * Rational(n);
      }
      saw_coef = true;
    }
    Exponents e(names.size(), 0);
    bool saw_var = false;
    for (;;) {
      if (saw_coef || saw_var) {
        if (peek() != '*') break;
        ++pos;
      } else if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
        throw ParseError(pos, "expected coefficient or variable");
      }
      std::size_t v = variable();
      unsigned exp = 1;
      if (peek() == '^') {
        ++pos;
        Int n = integer();
        if (n < 1 || n > 1000000) throw ParseError(pos, "exponent out of range");
        exp = static_cast<unsigned>(n.get_ui());
      }
      e[v] += exp;
      saw_var = true;
    }
    acc.add_term(e, coef);
  }

  Polynomial run() {
    Polynomial acc(names.size());
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    }
    term(acc, sign);
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos, "expected '+' or '-'");
      ++pos;
      term(acc, c == '-' ? -1 : 1);
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& names) {
  Parser p{text, names};
  if (p.eof()) throw ParseError(0, "empty input");
  return p.run();
}

std::vector<Exponents> exponents_of_degree(std::size_t num_vars, unsigned degree) {
  // Enumerated lex-descending, matching the deglex component order.
  std::vector<Exponents> out;
  Exponents cur(num_vars, 0);
  // Recursive descent assigning exponents left to right, largest first.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == num_vars) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = static_cast<int>(remaining); e >= 0; --e) {
      cur[i] = static_cast<unsigned>(e);
      self(self, i + 1, remaining - static_cast<unsigned>(e));
    }
  };
  if (num_vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::vector<Exponents> exponents_up_to_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Exponents> out;
  for (unsigned d = 0; d <= degree; ++d) {
    auto layer = exponents_of_degree(num_vars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace kreg
