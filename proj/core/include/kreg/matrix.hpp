#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kreg/rational.hpp"

namespace kreg {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const;

  /// The matrix with `row` appended (row.size() must equal cols()).
  RationalMatrix with_row(const std::vector<Rational>& row) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Exact rank over the rationals via fraction-free (Bareiss) elimination on
/// the denominator-cleared integer matrix.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space.  Each vector is normalised so that its
/// free coordinate equals 1; vectors are ordered by free column.  Empty
/// exactly when rank = cols.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Rank of the reduction mod p (p prime, p < 2^32).  Always a lower bound
/// for the rational rank.  Throws BadPrimeError if an entry's denominator
/// vanishes mod p, NotPrimeError if p is composite.
std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t p);

// --- F_p helpers (shared by the Terracini oracle and the fast rank path) ---

/// Row-major matrix over F_p with entries already reduced.
struct ModMatrix {
  std::uint64_t p = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(std::uint64_t prime, std::size_t r, std::size_t c)
      : p(prime), rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

ModMatrix reduce_mod_p(const RationalMatrix& m, std::uint64_t p);

/// In-place Gaussian elimination rank over F_p.
std::size_t rank_destructive(ModMatrix& m);

}  // namespace kreg
