#pragma once

#include <string>
#include <vector>

#include "kreg/polynomial.hpp"

namespace kreg {

enum class MapKind { affine, linear, projective };

std::string kind_name(MapKind k);
MapKind kind_from_name(const std::string& s);

/// Ordered list of polynomials in a common set of variables, together with
/// the independence notion its regularity is judged by.
struct PolyMap {
  std::size_t num_vars = 0;
  MapKind kind = MapKind::linear;
  std::vector<Polynomial> components;
  std::vector<std::string> var_names;  // display names, length num_vars

  std::size_t size() const { return components.size(); }

  /// Exact image of a point (one value per component).
  std::vector<Rational> apply(const std::vector<Rational>& point) const;

  /// Linear kind promises linearly independent components; checked on demand.
  bool components_independent() const;

  /// Projective kind reads components as homogeneous coordinates; true when
  /// they are homogeneous of one common degree.
  bool homogeneous_of_equal_degree() const;
};

/// Degree-d Veronese.  Projective: one component per degree-d monomial in
/// m+1 variables.  Affine: one component per monomial of degree <= d in m
/// variables, constant first.  Components are deglex-ordered.
PolyMap veronese_map(std::size_t m, unsigned d, MapKind kind);

/// Kind conversions:
///   affine -> linear      prepends the constant 1
///   affine -> projective  prepends 1, read as homogeneous coordinates
///   linear -> projective  same components, read as homogeneous coordinates
///   projective -> affine  divides by the component at divisor_index
/// Any other pair throws ConversionError.  The projective -> affine direction
/// requires every component to be exactly divisible by the divisor and
/// rejects divisors that vanish at any of the given sample points.
PolyMap convert_map(const PolyMap& f, MapKind to,
                    std::size_t divisor_index = 0,
                    const std::vector<std::vector<Rational>>& domain_samples = {});

}  // namespace kreg
