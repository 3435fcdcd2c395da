#ifndef M21_INTMATRIX_HPP
#define M21_INTMATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace m21 {

struct IntegerMatrix {
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> a; // row-major

  IntegerMatrix() = default;
  IntegerMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  static IntegerMatrix identity(size_t n);

  mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
  const mpz_class& at(size_t i, size_t j) const { return a[i * cols + j]; }

  IntegerMatrix mul(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const = default;
};

struct SnfResult {
  IntegerMatrix U, D, V; // U*M*V = D, U and V unimodular, diag(D) a divisibility chain
};

/// Smith normal form with smallest-pivot selection (keeps coefficient growth
/// down; everything stays exact).
SnfResult smith_normal_form(const IntegerMatrix& M);

/// Nonzero diagonal entries of an SNF diagonal, in order.
std::vector<mpz_class> invariant_factors(const IntegerMatrix& D);

/// Exact determinant (Bareiss); square input required.
mpz_class det(const IntegerMatrix& M);

} // namespace m21

#endif
