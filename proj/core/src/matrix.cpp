#include "kreg/matrix.hpp"

#include <utility>

#include "kreg/errors.hpp"
#include "kreg/numeric.hpp"

namespace kreg {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::with_row(const std::vector<Rational>& row) const {
  if (row.size() != cols_) throw ArityError("row length mismatch");
  RationalMatrix r(rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t j = 0; j < cols_; ++j) r.at(rows_, j) = row[j];
  return r;
}

namespace {

// Clears denominators row by row; scaling a row by a positive integer does
// not change the rank.
std::vector<Int> integerize(const RationalMatrix& m) {
  std::vector<Int> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = lcm(l, m.at(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      a[i * m.cols() + j] = q.num() * (l / q.den());
    }
  }
  return a;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<Int> a = integerize(m);
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * cols + j]; };

  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Pivot on the smallest nonzero magnitude to limit entry growth.
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(at(i, c)) == 0) continue;
      if (piv == rows || mpz_cmpabs(at(i, c).get_mpz_t(), at(piv, c).get_mpz_t()) < 0)
        piv = i;
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));

    // Sylvester's identity makes the division by the previous pivot exact.
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Reduced row echelon form over the rationals.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) { piv = i; break; }
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = a[r][c].reciprocal();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

ModMatrix reduce_mod_p(const RationalMatrix& m, std::uint64_t p) {
  ModMatrix r(p, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = m.at(i, j).mod_p(p);
  return r;
}

std::size_t rank_destructive(ModMatrix& m) {
  const std::uint64_t p = m.p;
  const std::size_t cols = m.cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const std::uint64_t inv = invmod(m.at(r, c), p);
    const std::uint64_t* prow = &m.a[r * cols];
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint64_t* irow = &m.a[i * cols];
      if (irow[c] == 0) continue;
      // One reduction per entry: with p < 2^32 the update term stays below
      // 2^64 before the final modulo.
      const std::uint64_t g = p - mulmod(irow[c], inv, p);
      for (std::size_t j = c; j < cols; ++j)
        irow[j] = (irow[j] + g * prow[j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw NotPrimeError("modulus must be a prime below 2^32");
  ModMatrix mm = reduce_mod_p(m, p);
  return rank_destructive(mm);
}

}  // namespace kreg
