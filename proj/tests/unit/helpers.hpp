#ifndef M21_TEST_HELPERS_HPP
#define M21_TEST_HELPERS_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "m21/graded.hpp"
#include "m21/groebner.hpp"
#include "m21/intmatrix.hpp"
#include "m21/parse.hpp"

namespace testutil {

inline m21::Ring ring(const std::string& spec) { return m21::parse_ring(spec); }

inline m21::Polynomial P(const m21::Ring& r, const std::string& text) {
  return m21::parse_poly(text, r);
}

inline m21::IdealPresentation ideal(const m21::Ring& r, std::vector<std::string> gens) {
  std::vector<m21::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return m21::IdealPresentation::make(r, std::move(ps));
}

inline m21::Polynomial random_poly(const m21::Ring& r, std::mt19937& rng, int max_terms,
                                   int max_exp, int cmax) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-cmax, cmax);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::vector<m21::Term> ts;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    m21::Monomial m = m21::Monomial::one(r->nvars());
    for (size_t v = 0; v < r->nvars(); ++v) m.e[v] = expo(rng);
    int c = coeff(rng);
    if (c != 0) ts.push_back(m21::Term{std::move(m), c});
  }
  return m21::Polynomial::from_terms(r, std::move(ts));
}

inline m21::Polynomial random_homog_poly(const m21::Ring& r, std::mt19937& rng, long degree,
                                         int max_terms, int cmax) {
  auto mons = m21::monomials_of_degree(*r, degree);
  if (mons.empty()) return m21::Polynomial::zero(r);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(mons.size()) - 1);
  std::uniform_int_distribution<int> coeff(-cmax, cmax);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::vector<m21::Term> ts;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int c = coeff(rng);
    if (c != 0) ts.push_back(m21::Term{mons[static_cast<size_t>(pick(rng))], c});
  }
  return m21::Polynomial::from_terms(r, std::move(ts));
}

// ---- independent oracles (deliberately naive, no shared code with the
// ---- production kernels beyond plain data types) ----

/// Row-lattice membership by integer triangularization: gcd-eliminates each
/// column in turn, then reduces the target against the pivots.
inline bool lattice_member(std::vector<std::vector<mpz_class>> rows,
                           std::vector<mpz_class> target) {
  size_t ncols = target.size();
  std::vector<std::vector<mpz_class>> pivots;
  for (size_t col = 0; col < ncols; ++col) {
    while (true) {
      int best = -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best < 0 || mpz_cmpabs(rows[i][col].get_mpz_t(),
                                   rows[static_cast<size_t>(best)][col].get_mpz_t()) < 0)
          best = static_cast<int>(i);
      }
      if (best < 0) break;
      bool others = false;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == best || rows[i][col] == 0) continue;
        mpz_class q = rows[i][col] / rows[static_cast<size_t>(best)][col];
        for (size_t j = 0; j < ncols; ++j)
          rows[i][j] -= q * rows[static_cast<size_t>(best)][j];
        if (rows[i][col] != 0) others = true;
      }
      if (!others) {
        pivots.push_back(rows[static_cast<size_t>(best)]);
        rows.erase(rows.begin() + best);
        break;
      }
    }
  }
  for (const auto& piv : pivots) {
    size_t col = 0;
    while (col < ncols && piv[col] == 0) ++col;
    if (col == ncols) continue;
    if (target[col] == 0) continue;
    if (!mpz_divisible_p(target[col].get_mpz_t(), piv[col].get_mpz_t())) return false;
    mpz_class q = target[col] / piv[col];
    for (size_t j = 0; j < ncols; ++j) target[j] -= q * piv[j];
  }
  for (const auto& v : target)
    if (v != 0) return false;
  return true;
}

/// Membership of a homogeneous f in a homogeneous ideal, decided by exact
/// integer linear algebra on the degree-d monomial-multiple lattice.
inline bool oracle_homog_member(const m21::IdealPresentation& I, const m21::Polynomial& f) {
  if (f.is_zero()) return true;
  const m21::GradedRingSpec& R = *I.ring;
  long d = f.weighted_degree().degree;
  auto basis = m21::monomials_of_degree(R, d);
  auto col = [&](const m21::Monomial& m) {
    for (size_t j = 0; j < basis.size(); ++j)
      if (basis[j] == m) return j;
    return basis.size();
  };
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : I.generators) {
    long e = g.weighted_degree().degree;
    if (e > d) continue;
    for (const auto& m : m21::monomials_of_degree(R, d - e)) {
      m21::Polynomial prod = g.shifted(m);
      std::vector<mpz_class> row(basis.size());
      for (const auto& t : prod.terms()) row[col(t.m)] = t.c.get_num();
      rows.push_back(std::move(row));
    }
  }
  std::vector<mpz_class> target(basis.size());
  for (const auto& t : f.terms()) target[col(t.m)] = t.c.get_num();
  return lattice_member(std::move(rows), std::move(target));
}

/// Determinant by cofactor expansion; fine for the tiny oracle matrices.
inline mpz_class naive_det(const std::vector<std::vector<mpz_class>>& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpz_class acc = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    mpz_class term = a[0][j] * naive_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Invariant factors via determinantal divisors: d_k = D_k / D_(k-1) where
/// D_k is the gcd of all k x k minors. Textbook-slow, fully independent of
/// the production SNF.
inline std::vector<mpz_class> oracle_invariant_factors(const m21::IntegerMatrix& M) {
  size_t n = std::min(M.rows, M.cols);
  std::vector<mpz_class> divisors; // D_1, ..., up to first zero
  for (size_t k = 1; k <= n; ++k) {
    std::vector<size_t> ri(k), ci(k);
    mpz_class g = 0;
    // enumerate all k-subsets of rows and columns
    std::vector<size_t> rsel(k), csel(k);
    std::function<void(size_t, size_t)> rows_rec = [&](size_t pos, size_t start) {
      if (pos == k) {
        std::function<void(size_t, size_t)> cols_rec = [&](size_t cpos, size_t cstart) {
          if (cpos == k) {
            std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
            for (size_t i = 0; i < k; ++i)
              for (size_t j = 0; j < k; ++j) sub[i][j] = M.at(rsel[i], csel[j]);
            mpz_class d = naive_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
          }
          for (size_t c = cstart; c < M.cols; ++c) {
            csel[cpos] = c;
            cols_rec(cpos + 1, c + 1);
          }
        };
        cols_rec(0, 0);
        return;
      }
      for (size_t r = start; r < M.rows; ++r) {
        rsel[pos] = r;
        rows_rec(pos + 1, r + 1);
      }
    };
    rows_rec(0, 0);
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> inv;
  mpz_class prev = 1;
  for (const auto& Dk : divisors) {
    inv.push_back(Dk / prev);
    prev = Dk;
  }
  return inv;
}

} // namespace testutil

#endif
