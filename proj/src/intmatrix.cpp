#include "m21/intmatrix.hpp"

#include <algorithm>

#include "m21/error.hpp"
#include "m21/parallel.hpp"

namespace m21 {

IntegerMatrix IntegerMatrix::identity(size_t n) {
  IntegerMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::mul(const IntegerMatrix& o) const {
  if (cols != o.rows) fail(Errc::Internal, "matrix product dimension mismatch");
  IntegerMatrix r(rows, o.cols);
#pragma omp parallel for schedule(static) num_threads(par::max_threads()) \
    if (par::enabled() && rows > 8)
  for (long i = 0; i < static_cast<long>(rows); ++i)
    for (size_t k = 0; k < cols; ++k) {
      const mpz_class& v = at(static_cast<size_t>(i), k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols; ++j)
        r.at(static_cast<size_t>(i), j) += v * o.at(k, j);
    }
  return r;
}

namespace {

void swap_rows(IntegerMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntegerMatrix& m, size_t dst, size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (size_t j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_axpy(IntegerMatrix& m, size_t dst, size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (size_t i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}

} // namespace

SnfResult smith_normal_form(const IntegerMatrix& M) {
  SnfResult r;
  r.D = M;
  r.U = IntegerMatrix::identity(M.rows);
  r.V = IntegerMatrix::identity(M.cols);
  IntegerMatrix& D = r.D;

  size_t n = std::min(M.rows, M.cols);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest-magnitude nonzero pivot in the trailing submatrix
      size_t pi = t, pj = t;
      bool found = false;
      for (size_t i = t; i < D.rows; ++i)
        for (size_t j = t; j < D.cols; ++j) {
          const mpz_class& v = D.at(i, j);
          if (v == 0) continue;
          if (!found || mpz_cmpabs(v.get_mpz_t(), D.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = n; // trailing block is zero, done
        break;
      }
      swap_rows(D, t, pi);
      swap_rows(r.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(r.V, t, pj);

      // Row elimination stays serial: the arithmetic is dominated by mpz
      // growth along a sequential pivot chain and does not split well.
      const mpz_class p = D.at(t, t);
      bool remainder = false;
      for (size_t i = t + 1; i < D.rows; ++i) {
        mpz_class q = D.at(i, t) / p; // truncated
        row_axpy(D, i, t, q);
        row_axpy(r.U, i, t, q);
        if (D.at(i, t) != 0) remainder = true;
      }
      for (size_t j = t + 1; j < D.cols; ++j) {
        mpz_class q = D.at(t, j) / p;
        col_axpy(D, j, t, q);
        col_axpy(r.V, j, t, q);
        if (D.at(t, j) != 0) remainder = true;
      }
      if (remainder) continue;

      // pivot must divide the rest of the submatrix for the invariant chain
      bool fixed = false;
      for (size_t i = t + 1; i < D.rows && !fixed; ++i)
        for (size_t j = t + 1; j < D.cols && !fixed; ++j)
          if (!mpz_divisible_p(D.at(i, j).get_mpz_t(), p.get_mpz_t())) {
            row_axpy(D, t, i, mpz_class(-1));
            row_axpy(r.U, t, i, mpz_class(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t >= n) break;
  }
  for (size_t t = 0; t < n; ++t) {
    if (D.at(t, t) < 0) {
      for (size_t j = 0; j < D.cols; ++j) D.at(t, j) = -D.at(t, j);
      for (size_t j = 0; j < r.U.cols; ++j) r.U.at(t, j) = -r.U.at(t, j);
    }
  }
  for (size_t t = 0; t + 1 < n; ++t) {
    const mpz_class& a = D.at(t, t);
    const mpz_class& b = D.at(t + 1, t + 1);
    if (a == 0 && b != 0) fail(Errc::Internal, "SNF zero before nonzero on the diagonal");
    if (a != 0 && b != 0 && !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
      fail(Errc::Internal, "SNF divisibility chain violated");
  }
  return r;
}

std::vector<mpz_class> invariant_factors(const IntegerMatrix& D) {
  std::vector<mpz_class> out;
  size_t n = std::min(D.rows, D.cols);
  for (size_t t = 0; t < n; ++t)
    if (D.at(t, t) != 0) out.push_back(D.at(t, t));
  return out;
}

mpz_class det(const IntegerMatrix& M) {
  if (M.rows != M.cols) fail(Errc::Internal, "determinant of a non-square matrix");
  size_t n = M.rows;
  if (n == 0) return 1;
  IntegerMatrix A = M;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A.at(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && A.at(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(A, k, s);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        A.at(i, j) = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        mpz_divexact(A.at(i, j).get_mpz_t(), A.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = A.at(k, k);
  }
  return sign * A.at(n - 1, n - 1);
}

} // namespace m21
