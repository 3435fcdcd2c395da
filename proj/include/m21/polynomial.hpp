#ifndef M21_POLYNOMIAL_HPP
#define M21_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "m21/ring.hpp"

namespace m21 {

struct Term {
  Monomial m;
  mpq_class c;
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

/// Exact multivariate polynomial over the ring's coefficient domain.
/// Terms are kept in canonical form: strictly descending under the ring's
/// default weighted-degrevlex order, no zero coefficients, and (over Z)
/// integral coefficients. Immutable value type; safe to share across threads.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(Ring ring);
  static Polynomial constant(Ring ring, const mpq_class& value);
  static Polynomial variable(Ring ring, size_t index);
  static Polynomial term(Ring ring, const mpq_class& coeff, Monomial m);
  /// Canonicalizes: sorts, merges duplicates, drops zeros, checks integrality.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); } // default order

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const mpq_class& k) const;
  Polynomial shifted(const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  struct DegreeInfo {
    bool zero = false;
    long degree = 0;    // undefined when zero
    bool homogeneous = true;
  };
  DegreeInfo weighted_degree() const;
  bool homogeneous_of(long d) const;
  /// Components sorted by ascending degree; they sum to *this.
  std::vector<std::pair<long, Polynomial>> homogeneous_components() const;

  /// Canonical text form, round-trippable through parse_poly.
  std::string str() const;

private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Three-way compare under the ring's default order.
int default_cmp(const GradedRingSpec& ring, const Monomial& a, const Monomial& b);

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// Variable-level substitution: images[i] replaces variable i; every image
/// must live in `target`. Degree checks are the caller's concern (see
/// chow::RingMap for the validated wrapper).
Polynomial substitute(const Polynomial& p, const Ring& target,
                      const std::vector<Polynomial>& images);

} // namespace m21

#endif
