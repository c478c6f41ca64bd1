#include "kreg/gorenstein.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kreg/errors.hpp"
#include "kreg/matrix.hpp"
#include "kreg/numeric.hpp"

namespace kreg {

using ordered_json = nlohmann::ordered_json;

namespace {

// Incremental row space over the rationals with reduced-echelon rows.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t dim() const { return rows_.size(); }

  // Reduces v against the current rows; if a nonzero residue remains it is
  // normalised, inserted, and true is returned.
  bool add(std::vector<Rational> v) {
    reduce(v);
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (!v[j].is_zero()) { lead = j; break; }
    if (lead == width_) return false;
    Rational inv = v[lead].reciprocal();
    for (auto& x : v) x *= inv;
    for (auto& [l, row] : rows_) {
      if (row[lead].is_zero()) continue;
      Rational f = row[lead];
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * v[j];
    }
    rows_.emplace(lead, std::move(v));
    return true;
  }

  void reduce(std::vector<Rational>& v) const {
    for (const auto& [lead, row] : rows_) {
      if (v[lead].is_zero()) continue;
      Rational f = v[lead];
      for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
    }
  }

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<Rational>> rows_;  // keyed by pivot column
};

// Fixed coordinate system on polynomials of degree <= cap.
struct MonomialIndex {
  std::map<Exponents, std::size_t, DeglexGreater> index;
  std::size_t width = 0;

  MonomialIndex(std::size_t num_vars, unsigned cap) {
    for (const auto& e : exponents_up_to_degree(num_vars, cap))
      index.emplace(e, width++);
  }

  std::vector<Rational> coords(const Polynomial& f) const {
    std::vector<Rational> v(width, Rational(0));
    for (const auto& [e, c] : f.terms()) v[index.at(e)] = c;
    return v;
  }
};

}  // namespace

PartialsSpace partials_space(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("zero dual generator");
  const std::size_t e = f.num_vars();
  const unsigned s = static_cast<unsigned>(f.degree());
  MonomialIndex coords(e, s);

  PartialsSpace out;
  for (unsigned n = 0;; ++n) {
    RowSpace space(coords.width);
    std::vector<Polynomial> basis;
    for (const auto& a : exponents_of_degree(e, n)) {
      Polynomial op = Polynomial::monomial(e, a, Rational(1));
      Polynomial g = contract(op, f);
      if (g.is_zero()) continue;
      if (space.add(coords.coords(g))) basis.push_back(std::move(g));
    }
    if (basis.empty()) break;
    out.dims.push_back(basis.size());
    out.bases.push_back(std::move(basis));
  }
  return out;
}

HilbertProfile apolar_profile(const Polynomial& f, bool want_hilbert_function) {
  if (f.is_zero()) throw ZeroPolynomialError("zero dual generator");
  const std::size_t e = f.num_vars();
  const unsigned s = static_cast<unsigned>(f.degree());

  HilbertProfile profile;
  profile.socle_degree = s;

  if (f.is_homogeneous()) {
    PartialsSpace ps = partials_space(f);
    // Homogeneous case: order-n contractions have degree s-n, so the graded
    // pieces are independent and the catalecticant ranks give H directly.
    profile.hilbert_function = ps.dims;
    if (!want_hilbert_function) profile.hilbert_function.clear();
    std::size_t len = 0;
    for (std::size_t d : ps.dims) len += d;
    profile.length = len;
    profile.embedding_dim = ps.dims.size() > 1 ? ps.dims[1] : 0;
    return profile;
  }

  if (want_hilbert_function)
    throw InhomogeneousHFError(
        "the full Hilbert function is computed only for homogeneous dual "
        "generators");

  // Length is the dimension of the span of all contractions; the embedding
  // dimension is the codimension of the order>=2 span inside the order>=1
  // span.
  MonomialIndex coords(e, s);
  RowSpace all(coords.width), ge1(coords.width), ge2(coords.width);
  for (unsigned n = 0; n <= s; ++n) {
    for (const auto& a : exponents_of_degree(e, n)) {
      Polynomial g = contract(Polynomial::monomial(e, a, Rational(1)), f);
      if (g.is_zero()) continue;
      auto v = coords.coords(g);
      all.add(v);
      if (n >= 1) ge1.add(v);
      if (n >= 2) ge2.add(v);
    }
  }
  profile.length = all.dim();
  profile.embedding_dim = ge1.dim() - ge2.dim();
  return profile;
}

std::vector<Polynomial> annihilator_generators(const Polynomial& f,
                                               unsigned max_degree) {
  if (f.is_zero()) throw ZeroPolynomialError("zero dual generator");
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  const std::size_t e = f.num_vars();
  const unsigned s = static_cast<unsigned>(f.degree());
  MonomialIndex coords(e, s);

  std::vector<Polynomial> generators;
  for (unsigned n = 1; n <= max_degree; ++n) {
    const auto ops = exponents_of_degree(e, n);
    // Kernel of the contraction pairing in degree n.
    RationalMatrix pairing(ops.size(), coords.width);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      Polynomial g = contract(Polynomial::monomial(e, ops[i], Rational(1)), f);
      auto v = coords.coords(g);
      for (std::size_t j = 0; j < coords.width; ++j) pairing.at(i, j) = v[j];
    }
    auto kernel = kernel_basis(pairing.transpose());

    // Span of degree-n multiples of the generators found so far.
    std::map<Exponents, std::size_t, DeglexGreater> op_index;
    std::size_t w = 0;
    for (const auto& a : ops) op_index.emplace(a, w++);
    RowSpace known(w);
    for (const auto& g : generators) {
      const unsigned dg = static_cast<unsigned>(g.degree());
      if (dg >= n) continue;
      for (const auto& mu : exponents_of_degree(e, n - dg)) {
        Polynomial prod = Polynomial::monomial(e, mu, Rational(1)) * g;
        std::vector<Rational> v(w, Rational(0));
        for (const auto& [a, c] : prod.terms()) v[op_index.at(a)] = c;
        known.add(std::move(v));
      }
    }
    for (const auto& kv : kernel) {
      if (!known.add(kv)) continue;
      Polynomial g(e);
      std::size_t i = 0;
      for (const auto& a : ops) g.add_term(a, kv[i++]);
      // Scale so the leading coefficient is 1.
      Rational lead = g.terms().begin()->second;
      generators.push_back(lead.reciprocal() * g);
    }
  }
  return generators;
}

std::size_t expected_dimension(std::size_t k, std::size_t m) {
  if (k < 1 || m < 1) throw DomainError("k and m must be >= 1");
  return (k - 1) * (m - 1);
}

CompressedDimension compressed_dimension(unsigned s, std::size_t m) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (s == 2) {
    std::size_t k = m + 2;
    return {k, static_cast<std::size_t>(binomial(m + 2, 2) - (m + 2))};
  }
  if (s == 3) {
    std::size_t k = 2 * m + 2;
    return {k, static_cast<std::size_t>(binomial(m + 3, 3) - (2 * m + 2))};
  }
  throw UnsupportedSocleError("compressed dimensions are tabulated for socle degree 2 and 3 only");
}

SocleFourDimension socle_four_dimension(std::size_t a, std::size_t b, std::size_t c) {
  if (a < 1) throw ConstraintError("a must be >= 1");
  if (b < 1) throw ConstraintError("b must be >= 1");
  if (b > binomial(a + 1, 2))
    throw ConstraintError("b exceeds C(a+1,2), no such quadric part");
  if (!(b > 2 || (a == 1 && b == 1) || (a == 2 && b == 2)))
    throw ConstraintError("growth condition requires b > 2, or a = b = 1, or a = b = 2");
  SocleFourDimension r;
  r.k = 2 + 2 * a + 2 * c + b;
  r.m = a + c;
  r.dim = static_cast<long>(binomial(a + 3, 4)) + static_cast<long>(a * c) +
          static_cast<long>(binomial(a + c + 3, 3)) - static_cast<long>(r.k);
  return r;
}

std::vector<unsigned> SymmetricDecomposition::hilbert_function() const {
  std::vector<unsigned> h(socle_degree + 1, 0);
  for (const auto& row : rows)
    for (std::size_t n = 0; n < h.size(); ++n) h[n] += row[n];
  return h;
}

unsigned SymmetricDecomposition::length() const {
  unsigned t = 0;
  for (const auto& row : rows)
    for (unsigned v : row) t += v;
  return t;
}

unsigned SymmetricDecomposition::embedding_dim() const {
  unsigned t = 0;
  for (const auto& row : rows) t += row[1];
  return t;
}

bool SymmetricDecomposition::rows_symmetric() const {
  const unsigned s = socle_degree;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != s + 1) return false;
    for (unsigned n = s + 1 - i; n <= s; ++n)
      if (row[n] != 0) return false;
    for (unsigned n = 0; n + i <= s; ++n)
      if (row[s - i - n] != row[n]) return false;
  }
  return true;
}

std::vector<SymmetricDecomposition> enumerate_decompositions(
    std::size_t k, const DecompositionFilters& filters) {
  if (k > 16) throw CapExceededError("decomposition enumeration is capped at k <= 16");
  if (k < 2) return {};

  std::vector<SymmetricDecomposition> out;
  const unsigned s_min = std::max(2u, filters.min_socle_degree);
  for (unsigned s = s_min; s + 1 <= k; ++s) {
    // Free parameters: Delta_0 on positions 1..s/2 (mirrored, ends fixed at
    // 1), Delta_i (i >= 1) on positions 1..(s-i)/2 with position 0 forced 0.
    SymmetricDecomposition cur;
    cur.socle_degree = s;
    cur.rows.assign(s - 1, std::vector<unsigned>(s + 1, 0));
    cur.rows[0][0] = cur.rows[0][s] = 1;

    auto row_weight = [&](std::size_t i, unsigned n) -> unsigned {
      // Setting position n also sets its mirror s-i-n; weight counts both.
      return (n == s - i - n) ? 1 : 2;
    };

    auto emit = [&] {
      if (filters.top_row_zero) {
        const auto& top = cur.rows[s - 2];
        for (unsigned v : top)
          if (v != 0) return;
      }
      unsigned emb = cur.embedding_dim();
      if (emb < filters.min_embdim) return;
      if (filters.max_embdim && emb > *filters.max_embdim) return;
      out.push_back(cur);
    };

    // Rows are filled in order; within a row positions 1..(s-i)/2.
    auto rec = [&](auto&& self, std::size_t i, unsigned n, unsigned remaining) -> void {
      if (i == cur.rows.size()) {
        if (remaining == 0) emit();
        return;
      }
      const unsigned half = (static_cast<unsigned>(s - i)) / 2;
      if (n > half) {
        self(self, i + 1, 1, remaining);
        return;
      }
      const unsigned weight = row_weight(i, n);
      const unsigned lo = (i == 0) ? 1 : 0;  // Delta_0 stays positive
      for (unsigned v = lo; v * weight <= remaining; ++v) {
        cur.rows[i][n] = v;
        cur.rows[i][s - i - n] = v;
        self(self, i, n + 1, remaining - v * weight);
      }
    };

    unsigned budget = static_cast<unsigned>(k) - 2;  // ends of Delta_0 already placed
    rec(rec, 0, 1, budget);
  }
  return out;
}

std::string case_verdict_name(CaseVerdict v) {
  switch (v) {
    case CaseVerdict::LE: return "WITHIN";
    case CaseVerdict::EQ: return "EQUALS";
    case CaseVerdict::GT: return "EXCEEDS";
    case CaseVerdict::WITNESS: return "WITNESS";
    case CaseVerdict::EMPTY: return "EMPTY";
  }
  return "?";
}

namespace {

CaseVerdict compare_dim(long dim, long expected) {
  if (dim < expected) return CaseVerdict::LE;
  if (dim == expected) return CaseVerdict::EQ;
  return CaseVerdict::GT;
}

std::string hf_string(const std::vector<unsigned>& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h[i]);
  }
  return s + ")";
}

}  // namespace

NegligibilityReport negligibility_audit(std::size_t k, std::size_t m) {
  if (k > 16) throw CapExceededError("audit is capped at k <= 16");
  if (k < 2 || m < 1) throw DomainError("need k >= 2 and m >= 1");

  NegligibilityReport report;
  report.k = k;
  report.m = m;
  report.expected = static_cast<long>(expected_dimension(k, m));

  bool all_lengths_bounded = true;
  for (std::size_t j = 2; j <= k; ++j) {
    const long expected_j = static_cast<long>(expected_dimension(j, m));
    const bool shorter_ok = all_lengths_bounded;  // lengths < j only
    auto add = [&](AuditFinding f) {
      f.length = j;
      f.expected = expected_j;
      if (f.verdict == CaseVerdict::GT || f.verdict == CaseVerdict::WITNESS)
        all_lengths_bounded = false;
      report.findings.push_back(std::move(f));
    };

    // Length two: the unique local Gorenstein scheme is curvilinear.
    if (j == 2) {
      AuditFinding f;
      f.family = "socle degree 1";
      f.params = "H=(1,1)";
      f.dimension = expected_j;
      f.verdict = CaseVerdict::EQ;
      f.note = "aligned; this family is the benchmark itself";
      add(std::move(f));
      continue;
    }

    // Embedding dimension <= 2 is alignable (curves and surfaces).
    {
      AuditFinding f;
      f.family = "embedding dimension <= 2";
      f.params = "any socle degree";
      f.dimension = expected_j;
      f.verdict = CaseVerdict::EQ;
      f.note = "alignable; dimension matches the curvilinear family";
      add(std::move(f));
    }

    // Socle degree 2: Hilbert function (1, j-2, 1).
    {
      AuditFinding f;
      f.family = "socle degree 2";
      const std::size_t e = j - 2;
      f.params = "H=(1," + std::to_string(e) + ",1)";
      if (e > m) {
        f.verdict = CaseVerdict::EMPTY;
        f.note = "needs embedding dimension " + std::to_string(e) + " > m";
      } else {
        CompressedDimension cd = compressed_dimension(2, e);
        long dim = static_cast<long>(cd.dim) +
                   static_cast<long>((m - e) * (j - 1));
        f.dimension = dim;
        f.verdict = compare_dim(dim, expected_j);
      }
      add(std::move(f));
    }

    // Socle degree 3 with zero top row: H = (1, a, a, 1).
    if (j % 2 == 0) {
      AuditFinding f;
      f.family = "socle degree 3, top row zero";
      const std::size_t a = (j - 2) / 2;
      f.params = "H=(1," + std::to_string(a) + "," + std::to_string(a) + ",1)";
      if (a > m) {
        f.verdict = CaseVerdict::EMPTY;
        f.note = "needs embedding dimension " + std::to_string(a) + " > m";
      } else {
        CompressedDimension cd = compressed_dimension(3, a);
        long dim = static_cast<long>(cd.dim) +
                   static_cast<long>((m - a) * (j - 1));
        f.dimension = dim;
        f.verdict = compare_dim(dim, expected_j);
        // For a = 1 this family is the aligned chain itself; for a >= 2 an
        // equality of dimensions shows a general member is not alignable.
        if (f.verdict == CaseVerdict::EQ && a >= 2)
          f.note = "dimension equals the curvilinear family; a general member "
                   "is not alignable";
      }
      add(std::move(f));
    }

    // Socle degree 4 with zero top row: (1,a,b,a,1) + (0,c,c,0).
    for (std::size_t a = 1; 2 + 2 * a <= j; ++a) {
      for (std::size_t c = 0; 2 + 2 * a + 2 * c < j; ++c) {
        const std::size_t b = j - 2 - 2 * a - 2 * c;
        if (b < 1) continue;
        if (b > binomial(a + 1, 2)) continue;
        if (!(b > 2 || (a == 1 && b == 1) || (a == 2 && b == 2))) continue;
        AuditFinding f;
        f.family = "socle degree 4, top row zero";
        f.params = "a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                   ", c=" + std::to_string(c);
        if (a + c > m) {
          f.verdict = CaseVerdict::EMPTY;
          f.note = "needs embedding dimension " + std::to_string(a + c) + " > m";
        } else {
          SocleFourDimension sd = socle_four_dimension(a, b, c);
          long dim = sd.dim + static_cast<long>((m - sd.m) * (j - 1));
          f.dimension = dim;
          f.verdict = compare_dim(dim, expected_j);
        }
        add(std::move(f));
      }
    }

    // Socle degree >= 5, zero top row, embedding dimension >= 3: these have
    // no dimension formula in the case analysis, so existence is flagged.
    {
      DecompositionFilters filters;
      filters.min_socle_degree = 5;
      filters.min_embdim = 3;
      filters.max_embdim = static_cast<unsigned>(std::min<std::size_t>(m, j));
      filters.top_row_zero = true;
      auto witnesses = enumerate_decompositions(j, filters);
      if (witnesses.empty()) {
        AuditFinding f;
        f.family = "socle degree >= 5, top row zero";
        f.params = "embdim >= 3";
        f.verdict = CaseVerdict::EMPTY;
        f.note = "no admissible symmetric decomposition";
        add(std::move(f));
      } else {
        for (const auto& w : witnesses) {
          AuditFinding f;
          f.family = "socle degree >= 5, top row zero";
          f.params = "H=" + hf_string(w.hilbert_function()) +
                     ", s=" + std::to_string(w.socle_degree);
          f.verdict = CaseVerdict::WITNESS;
          f.note = "no dimension bound available from the case analysis";
          add(std::move(f));
        }
      }
    }

    // Non-zero top row (0,q,0), q >= 1: embedded limits of shorter schemes.
    {
      AuditFinding f;
      f.family = "top row (0,q,0), q >= 1";
      f.params = "socle degree >= 3";
      if (shorter_ok) {
        f.verdict = CaseVerdict::LE;
        f.note = "reduces to lengths < " + std::to_string(j) +
                 ", all bounded above";
      } else {
        f.verdict = CaseVerdict::WITNESS;
        f.note = "reduces to shorter lengths, not all of which are bounded";
      }
      add(std::move(f));
    }
  }

  report.negligible = true;
  for (const auto& f : report.findings)
    if (f.verdict == CaseVerdict::GT || f.verdict == CaseVerdict::WITNESS)
      report.negligible = false;
  return report;
}

std::string NegligibilityReport::to_json() const {
  ordered_json j;
  j["schema"] = 1;
  j["k"] = k;
  j["m"] = m;
  j["expected_dim"] = expected;
  j["verdict"] = negligible ? "NEGLIGIBLE" : "NOT_NEGLIGIBLE";
  j["findings"] = ordered_json::array();
  for (const auto& f : findings) {
    ordered_json fj;
    fj["length"] = f.length;
    fj["family"] = f.family;
    fj["params"] = f.params;
    if (f.dimension) fj["dimension"] = *f.dimension;
    else fj["dimension"] = nullptr;
    fj["expected"] = f.expected;
    fj["verdict"] = case_verdict_name(f.verdict);
    if (!f.note.empty()) fj["note"] = f.note;
    j["findings"].push_back(fj);
  }
  return j.dump(2);
}

std::string NegligibilityReport::to_text() const {
  std::ostringstream out;
  out << "punctual Gorenstein locus audit: k=" << k << ", m=" << m
      << ", curvilinear dimension " << expected << "\n";
  out << std::left << std::setw(4) << "len" << std::setw(36) << "family"
      << std::setw(22) << "params" << std::setw(7) << "dim" << std::setw(9)
      << "expect" << std::setw(9) << "verdict" << "note" << "\n";
  for (const auto& f : findings) {
    out << std::left << std::setw(4) << f.length << std::setw(36) << f.family
        << std::setw(22) << f.params << std::setw(7)
        << (f.dimension ? std::to_string(*f.dimension) : "-") << std::setw(9)
        << f.expected << std::setw(9) << case_verdict_name(f.verdict) << f.note
        << "\n";
  }
  out << "verdict: " << (negligible ? "NEGLIGIBLE" : "NOT_NEGLIGIBLE") << "\n";
  return out.str();
}

}  // namespace kreg
