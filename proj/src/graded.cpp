#include "m21/graded.hpp"

#include <algorithm>

#include "m21/error.hpp"
#include "m21/parallel.hpp"

namespace m21 {

namespace {

void enumerate(const GradedRingSpec& R, size_t var, long remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var == R.nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (var + 1 == R.nvars()) {
    int w = R.weight(var);
    if (remaining % w == 0) {
      cur.e[var] = static_cast<int>(remaining / w);
      out.push_back(cur);
      cur.e[var] = 0;
    }
    return;
  }
  int w = R.weight(var);
  for (long k = 0; k * w <= remaining; ++k) {
    cur.e[var] = static_cast<int>(k);
    enumerate(R, var + 1, remaining - k * w, cur, out);
  }
  cur.e[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const GradedRingSpec& ring, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (ring.nvars() == 0) {
    if (degree == 0) out.push_back(Monomial::one(0));
    return out;
  }
  Monomial cur = Monomial::one(ring.nvars());
  enumerate(ring, 0, degree, cur, out);
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
    return default_cmp(ring, a, b) > 0;
  });
  return out;
}

IntegerMatrix graded_lattice_matrix(const IdealPresentation& I, long degree) {
  const GradedRingSpec& R = *I.ring;
  if (!I.homogeneous)
    fail(Errc::InhomogeneousIdeal, "graded components need homogeneous generators");

  std::vector<Monomial> basis = monomials_of_degree(R, degree);
  std::vector<std::pair<size_t, Monomial>> jobs; // (generator index, multiplier)
  for (size_t gi = 0; gi < I.generators.size(); ++gi) {
    long e = I.generators[gi].weighted_degree().degree;
    if (e > degree) continue;
    for (auto& m : monomials_of_degree(R, degree - e)) jobs.emplace_back(gi, std::move(m));
  }

  IntegerMatrix M(jobs.size(), basis.size());
  auto col_of = [&](const Monomial& m) -> size_t {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [&R](const Monomial& a, const Monomial& b) {
                                 return default_cmp(R, a, b) > 0;
                               });
    if (it == basis.end() || !(*it == m)) fail(Errc::Internal, "monomial outside graded basis");
    return static_cast<size_t>(it - basis.begin());
  };

#pragma omp parallel for schedule(static) num_threads(par::max_threads()) \
    if (par::enabled() && jobs.size() > 8)
  for (long r = 0; r < static_cast<long>(jobs.size()); ++r) {
    const auto& [gi, mult] = jobs[static_cast<size_t>(r)];
    Polynomial prod = I.generators[gi].shifted(mult);
    // Over Q scale the row integral; only the row lattice/rank matters there.
    mpz_class den = 1;
    if (R.domain() == Domain::Rationals) {
      for (const auto& t : prod.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    for (const auto& t : prod.terms()) {
      mpq_class v = t.c * mpq_class(den);
      M.at(static_cast<size_t>(r), col_of(t.m)) = v.get_num();
    }
  }
  return M;
}

GradedComponent graded_component(const IdealPresentation& I, long degree) {
  const GradedRingSpec& R = *I.ring;
  std::vector<Monomial> basis = monomials_of_degree(R, degree);
  GradedComponent out;
  if (basis.empty()) return out;

  IntegerMatrix M = graded_lattice_matrix(I, degree);
  if (M.rows == 0) {
    out.free_rank = static_cast<long>(basis.size());
    return out;
  }
  SnfResult snf = smith_normal_form(M);
  std::vector<mpz_class> inv = invariant_factors(snf.D);
  out.free_rank = static_cast<long>(basis.size()) - static_cast<long>(inv.size());
  if (R.domain() == Domain::Integers) {
    for (auto& d : inv)
      if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

} // namespace m21
