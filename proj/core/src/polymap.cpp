#include "kreg/polymap.hpp"

#include <map>
#include <optional>

#include "kreg/errors.hpp"
#include "kreg/matrix.hpp"

namespace kreg {

std::string kind_name(MapKind k) {
  switch (k) {
    case MapKind::affine: return "affine";
    case MapKind::linear: return "linear";
    case MapKind::projective: return "projective";
  }
  return "?";
}

MapKind kind_from_name(const std::string& s) {
  if (s == "affine") return MapKind::affine;
  if (s == "linear") return MapKind::linear;
  if (s == "projective") return MapKind::projective;
  throw ConversionError("unknown map kind '" + s + "'");
}

std::vector<Rational> PolyMap::apply(const std::vector<Rational>& point) const {
  if (point.size() != num_vars) throw ArityError("point length mismatch");
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& f : components) out.push_back(evaluate(f, point));
  return out;
}

bool PolyMap::components_independent() const {
  // Coefficient matrix over the union of monomials.
  std::map<Exponents, std::size_t, DeglexGreater> cols;
  for (const auto& f : components)
    for (const auto& [e, c] : f.terms())
      cols.emplace(e, 0);
  std::size_t idx = 0;
  for (auto& [e, i] : cols) i = idx++;
  RationalMatrix m(components.size(), cols.size());
  for (std::size_t i = 0; i < components.size(); ++i)
    for (const auto& [e, c] : components[i].terms())
      m.at(i, cols.at(e)) = c;
  return rank(m) == components.size();
}

bool PolyMap::homogeneous_of_equal_degree() const {
  int d = -1;
  for (const auto& f : components) {
    if (!f.is_homogeneous()) return false;
    if (f.is_zero()) continue;
    if (d == -1) d = f.degree();
    else if (f.degree() != d) return false;
  }
  return true;
}

PolyMap veronese_map(std::size_t m, unsigned d, MapKind kind) {
  if (m < 1 || d < 1) throw DomainError("veronese parameters must be positive");
  PolyMap map;
  map.kind = kind;
  if (kind == MapKind::projective) {
    map.num_vars = m + 1;
    map.var_names.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
      map.var_names.push_back("x" + std::to_string(i));
    for (const auto& e : exponents_of_degree(m + 1, d))
      map.components.push_back(Polynomial::monomial(m + 1, e, Rational(1)));
  } else {
    map.num_vars = m;
    map.var_names = default_var_names(m);
    for (const auto& e : exponents_up_to_degree(m, d))
      map.components.push_back(Polynomial::monomial(m, e, Rational(1)));
    map.kind = (kind == MapKind::linear) ? MapKind::linear : MapKind::affine;
  }
  return map;
}

namespace {

// Exact division in the deglex order; nullopt when the divisor does not
// divide f exactly.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return std::nullopt;
  Polynomial r = f;
  Polynomial q(f.num_vars());
  const auto& glead = *g.terms().begin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().begin();
    Exponents e(r.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (rlead.first[i] < glead.first[i]) return std::nullopt;
      e[i] = rlead.first[i] - glead.first[i];
    }
    Polynomial t = Polynomial::monomial(f.num_vars(), e, rlead.second / glead.second);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

}  // namespace

PolyMap convert_map(const PolyMap& f, MapKind to, std::size_t divisor_index,
                    const std::vector<std::vector<Rational>>& domain_samples) {
  PolyMap out = f;
  if (f.kind == MapKind::affine && to == MapKind::linear) {
    out.kind = MapKind::linear;
    out.components.insert(out.components.begin(),
                          Polynomial::constant(f.num_vars, Rational(1)));
    return out;
  }
  if (f.kind == MapKind::affine && to == MapKind::projective) {
    out.kind = MapKind::projective;
    out.components.insert(out.components.begin(),
                          Polynomial::constant(f.num_vars, Rational(1)));
    return out;
  }
  if (f.kind == MapKind::linear && to == MapKind::projective) {
    out.kind = MapKind::projective;
    return out;
  }
  if (f.kind == MapKind::projective && to == MapKind::affine) {
    if (divisor_index >= f.components.size())
      throw ConversionError("divisor index out of range");
    const Polynomial& g = f.components[divisor_index];
    if (g.is_zero()) throw ConversionError("divisor component is identically zero");
    for (const auto& p : domain_samples)
      if (evaluate(g, p).is_zero())
        throw ConversionError("divisor component vanishes on the domain; dehomogenisation unsound");
    out.components.clear();
    for (std::size_t i = 0; i < f.components.size(); ++i) {
      if (i == divisor_index) continue;
      auto q = divide_exact(f.components[i], g);
      if (!q)
        throw ConversionError("component " + std::to_string(i) +
                              " is not divisible by the divisor component");
      out.components.push_back(*q);
    }
    out.kind = MapKind::affine;
    return out;
  }
  throw ConversionError("unsupported conversion " + kind_name(f.kind) + " -> " +
                        kind_name(to));
}

}  // namespace kreg
