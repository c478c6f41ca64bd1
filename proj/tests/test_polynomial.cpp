#include <doctest.h>

#include <set>

#include "kreg/errors.hpp"
#include "kreg/polymap.hpp"
#include "kreg/polynomial.hpp"
#include "kreg/rng.hpp"

using namespace kreg;

namespace {

const std::vector<std::string> kST{"s", "t"};
const std::vector<std::string> kXY{"x", "y"};

Polynomial parse2(const std::string& text) { return parse_polynomial(text, kST); }

Polynomial random_poly(Rng& rng, std::size_t vars, unsigned maxdeg, int terms) {
  Polynomial f(vars);
  for (int i = 0; i < terms; ++i) {
    Exponents e(vars);
    for (auto& x : e) x = static_cast<unsigned>(rng.below(maxdeg + 1));
    f.add_term(e, Rational(rng.range(-9, 9), rng.range(1, 5)));
  }
  return f;
}

}  // namespace

TEST_CASE("parse basics") {
  Polynomial f = parse_polynomial("1 + t1^2 - 3/2*t2^3", default_var_names(2));
  CHECK(f.terms().size() == 3);
  CHECK(f.degree() == 3);

  Polynomial zero = parse2("0");
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
  CHECK(zero.degree() == -1);

  Polynomial g = parse2("t^2 - s^3");
  CHECK(g.terms().size() == 2);
  CHECK(evaluate(g, {Rational(1), Rational(2)}) == Rational(3));

  CHECK_THROWS_AS(parse2(""), ParseError);
  CHECK_THROWS_AS(parse2("s +"), ParseError);
  CHECK_THROWS_AS(parse2("q^2"), ParseError);
  CHECK_THROWS_AS(parse2("2/0*s"), ParseError);
  CHECK_THROWS_AS(parse2("s^0"), ParseError);
}

TEST_CASE("evaluate") {
  Polynomial t2 = parse_polynomial("t^2", {"t"});
  CHECK(evaluate(t2, {Rational(3)}) == Rational(9));
  Polynomial one = parse_polynomial("1", {"t"});
  CHECK(evaluate(one, {Rational(17, 5)}) == Rational(1));
  CHECK_THROWS_AS(evaluate(t2, {Rational(1), Rational(2)}), ArityError);

  // Ring homomorphism: (f*g)(p) = f(p) * g(p).
  Rng rng(99);
  for (int it = 0; it < 50; ++it) {
    Polynomial f = random_poly(rng, 2, 3, 4), g = random_poly(rng, 2, 3, 4);
    std::vector<Rational> p{Rational(rng.range(-5, 5), rng.range(1, 4)),
                            Rational(rng.range(-5, 5), rng.range(1, 4))};
    CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
    CHECK(evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p));
  }
}

TEST_CASE("contract matches the worked examples") {
  // d/dx d/dy applied to x^2*y^3 gives 6*x*y^2
  Polynomial op = parse_polynomial("x*y", kXY);
  Polynomial f = parse_polynomial("x^2*y^3", kXY);
  CHECK(to_string(contract(op, f), kXY) == "6*x*y^2");

  // (d/dz)^2 kills x*y*z
  auto xyz = std::vector<std::string>{"x", "y", "z"};
  Polynomial op2 = parse_polynomial("z^2", xyz);
  Polynomial f2 = parse_polynomial("x*y*z", xyz);
  CHECK(contract(op2, f2).is_zero());

  // The identity operator.
  Polynomial one = Polynomial::constant(2, Rational(1));
  Polynomial g = parse2("s^2 - 7/3*t");
  CHECK(contract(one, g) == g);
}

TEST_CASE("contract is bilinear and composes") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    Polynomial a = random_poly(rng, 2, 2, 3);
    Polynomial b = random_poly(rng, 2, 2, 3);
    Polynomial f = random_poly(rng, 2, 4, 4);
    Rational c(rng.range(-5, 5), rng.range(1, 3));

    Polynomial lhs = contract(c * a + b, f);
    Polynomial rhs = c * contract(a, f) + contract(b, f);
    CHECK(lhs == rhs);

    // Module action: contracting by a then b equals contracting by a*b.
    CHECK(contract(a, contract(b, f)) == contract(a * b, f));
  }
}

TEST_CASE("to_string round-trips") {
  Rng rng(31337);
  for (int it = 0; it < 200; ++it) {
    Polynomial f = random_poly(rng, 2, 4, 5);
    CHECK(parse2(to_string(f, kST)) == f);
  }
  CHECK(to_string(Polynomial(2), kST) == "0");
  CHECK(parse2("0") == Polynomial(2));
  // Canonical order is deglex-descending.
  CHECK(to_string(parse2("t^2 - s^3"), kST) == "-s^3 + t^2");
  CHECK(to_string(parse2("1/2 + s*t - t"), kST) == "s*t - t + 1/2");
}

TEST_CASE("parser rejects garbage without crashing") {
  Rng rng(2718);
  const std::string alphabet = "st12/^*+- ().q";
  std::uint64_t parsed = 0;
  for (int it = 0; it < 5000; ++it) {
    std::string text;
    std::size_t len = 1 + rng.below(16);
    for (std::size_t i = 0; i < len; ++i)
      text += alphabet[rng.below(alphabet.size())];
    try {
      Polynomial f = parse_polynomial(text, kST);
      ++parsed;
      // Anything accepted must round-trip through the formatter.
      CHECK(parse2(to_string(f, kST)) == f);
    } catch (const ParseError&) {
      // expected for most random strings
    }
  }
  CHECK(parsed > 0);  // the alphabet does produce some valid inputs
}

TEST_CASE("veronese affine components") {
  // m=1, degree k-1: the classical moment curve.
  PolyMap v = veronese_map(1, 4, MapKind::affine);
  REQUIRE(v.size() == 5);
  CHECK(to_string(v.components[0], {"t"}) == "1");
  CHECK(to_string(v.components[4], {"t"}) == "t^4");

  PolyMap w = veronese_map(2, 2, MapKind::affine);
  REQUIRE(w.size() == 6);
  std::vector<std::string> got;
  for (const auto& c : w.components) got.push_back(to_string(c, kST));
  CHECK(got == std::vector<std::string>{"1", "s", "t", "s^2", "s*t", "t^2"});
}

TEST_CASE("veronese projective components") {
  PolyMap v = veronese_map(2, 1, MapKind::projective);
  REQUIRE(v.size() == 3);
  CHECK(v.num_vars == 3);
  CHECK(v.homogeneous_of_equal_degree());

  PolyMap w = veronese_map(2, 3, MapKind::projective);
  CHECK(w.size() == 10);  // C(5,3)
  CHECK(w.homogeneous_of_equal_degree());
  // Every degree-3 monomial appears exactly once with coefficient 1.
  std::set<Exponents> seen;
  for (const auto& c : w.components) {
    REQUIRE(c.terms().size() == 1);
    CHECK(c.terms().begin()->second == Rational(1));
    CHECK(total_degree(c.terms().begin()->first) == 3);
    seen.insert(c.terms().begin()->first);
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("map kind conversions") {
  // affine (t, t^2) -> linear (1, t, t^2)
  PolyMap aff;
  aff.num_vars = 1;
  aff.kind = MapKind::affine;
  aff.var_names = {"t"};
  aff.components = {parse_polynomial("t", {"t"}), parse_polynomial("t^2", {"t"})};

  PolyMap lin = convert_map(aff, MapKind::linear);
  REQUIRE(lin.size() == 3);
  CHECK(lin.kind == MapKind::linear);
  CHECK(to_string(lin.components[0], {"t"}) == "1");
  CHECK(lin.components_independent());

  PolyMap proj = convert_map(lin, MapKind::projective);
  CHECK(proj.kind == MapKind::projective);
  CHECK(proj.size() == 3);

  // projective (1 : t : t^2) with divisor index 0 -> affine (t, t^2)
  PolyMap back = convert_map(proj, MapKind::affine, 0);
  REQUIRE(back.size() == 2);
  CHECK(back.kind == MapKind::affine);
  CHECK(to_string(back.components[0], {"t"}) == "t");
  CHECK(to_string(back.components[1], {"t"}) == "t^2");

  // Dehomogenisation by a coordinate that vanishes on the domain is refused.
  CHECK_THROWS_AS(convert_map(proj, MapKind::affine, 1, {{Rational(0)}}),
                  ConversionError);
  // Unsupported direction.
  CHECK_THROWS_AS(convert_map(lin, MapKind::affine), ConversionError);
}
