#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kreg/polynomial.hpp"

namespace kreg {

/// Graded spaces of iterated partial derivatives of a dual generator.
struct PartialsSpace {
  /// bases[n] spans the order-n contractions of f; dims[n] = bases[n].size().
  std::vector<std::vector<Polynomial>> bases;
  std::vector<std::size_t> dims;
};

/// Basis of the span of all order-n contractions of f, for n = 0, 1, ...
/// until the span vanishes.  Throws ZeroPolynomialError on f = 0.
PartialsSpace partials_space(const Polynomial& f);

/// Invariants of the apolar algebra of a dual socle generator.
struct HilbertProfile {
  std::vector<std::size_t> hilbert_function;  // empty when not computed
  std::size_t socle_degree = 0;
  std::size_t length = 0;
  std::size_t embedding_dim = 0;
};

/// Length, socle degree and embedding dimension of the apolar algebra of f;
/// for homogeneous f the full Hilbert function is included (catalecticant
/// ranks).  Requesting the Hilbert function of an inhomogeneous generator
/// throws InhomogeneousHFError.
HilbertProfile apolar_profile(const Polynomial& f, bool want_hilbert_function);

/// Minimal generators of the annihilator ideal of f in degrees <= max_degree:
/// per degree, a basis of the kernel of the contraction pairing, reduced
/// modulo multiples of lower-degree generators.
std::vector<Polynomial> annihilator_generators(const Polynomial& f,
                                               unsigned max_degree);

/// Dimension of the family of curvilinear (alignable) length-k subschemes
/// supported at a point of an m-dimensional ambient space: (k-1)(m-1).
/// This is the benchmark every other family is compared against.
std::size_t expected_dimension(std::size_t k, std::size_t m);

struct CompressedDimension {
  std::size_t length = 0;  // k
  std::size_t dim = 0;     // parameter-set dimension at embedding dimension m
};

/// Parameter dimensions of the compressed families of socle degree 2 or 3:
///   s=2: k = m+2,  dim = C(m+2,2) - (m+2)
///   s=3: k = 2m+2, dim = C(m+3,3) - (2m+2)
/// Throws UnsupportedSocleError otherwise.
CompressedDimension compressed_dimension(unsigned s, std::size_t m);

struct SocleFourDimension {
  std::size_t k = 0, m = 0;
  long dim = 0;
};

/// Upper bound for the socle-degree-4 family with Hilbert-function
/// decomposition (1,a,b,a,1) + (0,c,c,0):
///   k = 2+2a+2c+b, m = a+c, dim <= C(a+3,4) + ac + C(a+c+3,3) - k.
/// Requires a,b >= 1, c >= 0, b <= C(a+1,2) and the admissible growth
/// condition (b > 2, or a = b = 1, or a = b = 2); ConstraintError otherwise.
SocleFourDimension socle_four_dimension(std::size_t a, std::size_t b, std::size_t c);

/// Symmetric decomposition of a Hilbert function: rows Delta_0..Delta_{s-2}
/// of length s+1, Delta_i supported on 0..s-i and symmetric there, Delta_0
/// everywhere positive with Delta_0(0) = 1, and sum(H) = length.
struct SymmetricDecomposition {
  unsigned socle_degree = 0;
  std::vector<std::vector<unsigned>> rows;

  std::vector<unsigned> hilbert_function() const;
  unsigned length() const;
  unsigned embedding_dim() const;  // H(1)
  bool rows_symmetric() const;
};

struct DecompositionFilters {
  unsigned min_socle_degree = 0;
  unsigned min_embdim = 0;
  std::optional<unsigned> max_embdim;
  bool top_row_zero = false;  // Delta_{s-2} identically zero
};

/// All admissible symmetric decompositions of total length k (socle degree
/// >= 2) passing the filters, in deterministic order.  k <= 16.
std::vector<SymmetricDecomposition> enumerate_decompositions(
    std::size_t k, const DecompositionFilters& filters = {});

enum class CaseVerdict { LE, EQ, GT, WITNESS, EMPTY };
std::string case_verdict_name(CaseVerdict v);

struct AuditFinding {
  std::size_t length = 0;           // the scheme length the family lives at
  std::string family;               // case description
  std::string params;
  std::optional<long> dimension;    // in the ambient punctual Hilbert scheme
  long expected = 0;                // (length-1)(m-1)
  CaseVerdict verdict = CaseVerdict::EMPTY;
  std::string note;
};

struct NegligibilityReport {
  std::size_t k = 0, m = 0;
  long expected = 0;  // (k-1)(m-1)
  bool negligible = false;
  std::vector<AuditFinding> findings;

  std::string to_json() const;
  std::string to_text() const;
};

/// Case-by-case dimension audit of the punctual Gorenstein locus for lengths
/// 2..k in an m-dimensional ambient space: compressed socle-degree-2/3
/// families, the socle-degree-4 decompositions, the reduction of top-row
/// decompositions to shorter lengths, and an exhaustive scan for socle
/// degree >= 5 profiles.  NEGLIGIBLE when every family stays within
/// (length-1)(m-1); families without a dimension bound are flagged as
/// witnesses.  k <= 16.
NegligibilityReport negligibility_audit(std::size_t k, std::size_t m);

}  // namespace kreg
