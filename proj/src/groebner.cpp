#include "m21/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>

#include "m21/error.hpp"
#include "m21/parallel.hpp"

namespace m21 {

namespace {
std::atomic<uint64_t> g_default_step_budget{10'000'000};
}

uint64_t GroebnerOptions::default_step_budget() { return g_default_step_budget.load(); }

void GroebnerOptions::set_default_step_budget(uint64_t steps) {
  g_default_step_budget.store(steps);
}

IdealPresentation IdealPresentation::make(Ring ring, std::vector<Polynomial> gens) {
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring))
      fail(Errc::RingMismatch, "ideal generator lives in a different ring");
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  bool homog = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) {
    return g.weighted_degree().homogeneous;
  });
  IdealPresentation I;
  I.ring = std::move(ring);
  I.generators = std::move(gens);
  I.homogeneous = homog;
  return I;
}

namespace {

// Engine-internal polynomial: terms strictly descending under the active order.
struct OPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
};

struct Ctx {
  const GradedRingSpec& R;
  const MonomialOrder& ord;
  bool integers;
  uint64_t budget;

  int cmp(const Monomial& a, const Monomial& b) const { return ord.compare(R, a, b); }
  void step() {
    if (budget == 0) fail(Errc::BudgetExceeded, "reduction step budget exhausted");
    --budget;
  }
};

OPoly to_opoly(const Ctx& ctx, const Polynomial& p) {
  OPoly o;
  o.t = p.terms();
  std::sort(o.t.begin(), o.t.end(),
            [&](const Term& a, const Term& b) { return ctx.cmp(a.m, b.m) > 0; });
  return o;
}

Polynomial to_poly(const Ring& ring, const OPoly& o) {
  return Polynomial::from_terms(ring, o.t);
}

// a + k * x^s * b, merged under the active order.
OPoly add_scaled(const Ctx& ctx, const OPoly& a, const mpq_class& k, const Monomial& s,
                 const OPoly& b) {
  OPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = b.t[j].m * s;
    int c = ctx.cmp(a.t[i].m, bm);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      mpq_class v = k * b.t[j].c;
      if (v != 0) r.t.push_back(Term{std::move(bm), std::move(v)});
      ++j;
    } else {
      mpq_class v = a.t[i].c + k * b.t[j].c;
      if (v != 0) r.t.push_back(Term{a.t[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) {
    mpq_class v = k * b.t[j].c;
    if (v != 0) r.t.push_back(Term{b.t[j].m * s, std::move(v)});
  }
  return r;
}

bool coeff_divides(const Ctx& ctx, const mpq_class& divisor, const mpq_class& dividend) {
  if (!ctx.integers) return true;
  return mpz_divisible_p(dividend.get_num().get_mpz_t(), divisor.get_num().get_mpz_t()) != 0;
}

// Full strong division: every term of h ends up with no (monomial, coefficient)
// divisor among the basis leading terms.
void reduce_full(Ctx& ctx, OPoly& h, const std::vector<OPoly>& basis) {
  size_t k = 0;
  while (k < h.t.size()) {
    bool fired = false;
    for (const OPoly& g : basis) {
      if (g.zero()) continue;
      const Term& glt = g.lt();
      if (glt.m.divides(h.t[k].m) && coeff_divides(ctx, glt.c, h.t[k].c)) {
        ctx.step();
        mpq_class q = h.t[k].c / glt.c;
        h = add_scaled(ctx, h, -q, h.t[k].m / glt.m, g);
        fired = true;
        break;
      }
    }
    if (!fired) ++k;
  }
}

void normalize_lead(const Ctx& ctx, OPoly& h) {
  if (h.zero()) return;
  if (ctx.integers) {
    if (h.lt().c < 0)
      for (auto& t : h.t) t.c = -t.c;
  } else {
    mpq_class inv = 1 / h.lt().c;
    for (auto& t : h.t) t.c *= inv;
  }
}

OPoly s_poly(const Ctx& ctx, const OPoly& f, const OPoly& g) {
  const Term& a = f.lt();
  const Term& b = g.lt();
  Monomial L = Monomial::lcm(a.m, b.m);
  mpq_class ca, cb;
  if (ctx.integers) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.c.get_num().get_mpz_t(), b.c.get_num().get_mpz_t());
    ca = mpq_class(l) / a.c;
    cb = mpq_class(l) / b.c;
  } else {
    ca = 1 / a.c;
    cb = 1 / b.c;
  }
  OPoly z;
  z = add_scaled(ctx, z, ca, L / a.m, f);
  z = add_scaled(ctx, z, -cb, L / b.m, g);
  return z;
}

// Bezout combination exposing gcd(lc f, lc g) on lcm(lm f, lm g); only
// needed when neither leading coefficient divides the other.
OPoly g_poly(const Ctx& ctx, const OPoly& f, const OPoly& g) {
  const Term& a = f.lt();
  const Term& b = g.lt();
  Monomial L = Monomial::lcm(a.m, b.m);
  mpz_class d, u, v;
  mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.c.get_num().get_mpz_t(),
             b.c.get_num().get_mpz_t());
  OPoly z;
  z = add_scaled(ctx, z, mpq_class(u), L / a.m, f);
  z = add_scaled(ctx, z, mpq_class(v), L / b.m, g);
  return z;
}

struct Task {
  long deg;
  uint64_t seq;
  uint32_t i, j;
  bool gcd;
};

struct TaskLater {
  bool operator()(const Task& a, const Task& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.seq > b.seq;
  }
};

bool lc_divides_either_way(const Ctx& ctx, const mpq_class& a, const mpq_class& b) {
  return coeff_divides(ctx, a, b) || coeff_divides(ctx, b, a);
}

std::vector<OPoly> buchberger(Ctx& ctx, std::vector<OPoly> gens) {
  std::vector<OPoly> B;
  for (auto& g : gens) {
    if (g.zero()) continue;
    normalize_lead(ctx, g);
    B.push_back(std::move(g));
  }
  std::vector<Task> heap;
  uint64_t seq = 0;
  auto push_pairs = [&](uint32_t j) {
    for (uint32_t i = 0; i < j; ++i) {
      Monomial L = Monomial::lcm(B[i].lt().m, B[j].lt().m);
      long deg = L.weighted_degree(ctx.R);
      heap.push_back(Task{deg, seq++, i, j, false});
      std::push_heap(heap.begin(), heap.end(), TaskLater{});
      if (ctx.integers && !lc_divides_either_way(ctx, B[i].lt().c, B[j].lt().c)) {
        heap.push_back(Task{deg, seq++, i, j, true});
        std::push_heap(heap.begin(), heap.end(), TaskLater{});
      }
    }
  };
  for (uint32_t j = 0; j < B.size(); ++j) push_pairs(j);

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), TaskLater{});
    Task t = heap.back();
    heap.pop_back();
    OPoly z = t.gcd ? g_poly(ctx, B[t.i], B[t.j]) : s_poly(ctx, B[t.i], B[t.j]);
    reduce_full(ctx, z, B);
    if (z.zero()) continue;
    normalize_lead(ctx, z);
    B.push_back(std::move(z));
    push_pairs(static_cast<uint32_t>(B.size() - 1));
  }
  return B;
}

bool lt_strongly_divides(const Ctx& ctx, const Term& a, const Term& b) {
  return a.m.divides(b.m) && coeff_divides(ctx, a.c, b.c);
}

// Minimalize + tail-reduce + normalize; deterministic presentation.
std::vector<OPoly> interreduce(Ctx& ctx, std::vector<OPoly> B) {
  std::erase_if(B, [](const OPoly& p) { return p.zero(); });
  std::sort(B.begin(), B.end(), [&](const OPoly& a, const OPoly& b) {
    int c = ctx.cmp(a.lt().m, b.lt().m);
    if (c != 0) return c < 0;
    if (a.lt().c != b.lt().c) return a.lt().c < b.lt().c;
    return a.t.size() < b.t.size();
  });
  std::vector<OPoly> kept;
  for (auto& cand : B) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const OPoly& k) {
      return lt_strongly_divides(ctx, k.lt(), cand.lt());
    });
    if (!dominated) kept.push_back(std::move(cand));
  }
  for (size_t i = 0; i < kept.size(); ++i) {
    OPoly h = kept[i];
    std::vector<OPoly> others;
    others.reserve(kept.size() - 1);
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    reduce_full(ctx, h, others);
    if (h.zero()) fail(Errc::Internal, "minimal basis element reduced to zero");
    normalize_lead(ctx, h);
    kept[i] = std::move(h);
  }
  std::sort(kept.begin(), kept.end(), [&](const OPoly& a, const OPoly& b) {
    int c = ctx.cmp(a.lt().m, b.lt().m);
    if (c != 0) return c < 0;
    return a.lt().c < b.lt().c;
  });
  return kept;
}

Ctx make_ctx(const Ring& ring, const MonomialOrder& ord, const GroebnerOptions& opts) {
  return Ctx{*ring, ord, ring->domain() == Domain::Integers, opts.step_budget};
}

std::string fresh_var_name(const std::string& base,
                           const std::function<bool(const std::string&)>& used) {
  if (!used(base)) return base;
  for (int k = 0;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!used(cand)) return cand;
  }
}

} // namespace

GroebnerBasis groebner_basis(const IdealPresentation& ideal, MonomialOrder order,
                             const GroebnerOptions& opts) {
  Ctx ctx = make_ctx(ideal.ring, order, opts);
  std::vector<OPoly> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) gens.push_back(to_opoly(ctx, g));
  std::vector<OPoly> B = interreduce(ctx, buchberger(ctx, std::move(gens)));

  GroebnerBasis G;
  G.ideal = ideal;
  G.order = order;
  G.strength =
      ideal.ring->domain() == Domain::Integers ? BasisStrength::StrongZ : BasisStrength::ReducedQ;
  G.basis.reserve(B.size());
  for (const auto& b : B) G.basis.push_back(to_poly(ideal.ring, b));

  for (const auto& g : ideal.generators) {
    if (!normal_form(g, G, opts).is_zero())
      fail(Errc::Internal, "completed basis does not reduce an input generator to zero");
  }
  return G;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const GroebnerOptions& opts) {
  if (!same_ring(f.ring(), G.ideal.ring))
    fail(Errc::RingMismatch, "polynomial is not over the basis ring");
  Ctx ctx = make_ctx(G.ideal.ring, G.order, opts);
  std::vector<OPoly> basis;
  basis.reserve(G.basis.size());
  for (const auto& b : G.basis) basis.push_back(to_opoly(ctx, b));
  OPoly h = to_opoly(ctx, f);
  reduce_full(ctx, h, basis);
  return to_poly(G.ideal.ring, h);
}

std::vector<Polynomial> normal_forms(std::span<const Polynomial> fs, const GroebnerBasis& G,
                                     const GroebnerOptions& opts) {
  std::vector<Polynomial> out(fs.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(par::max_threads()) \
    if (par::enabled() && fs.size() > 1)
  for (long i = 0; i < static_cast<long>(fs.size()); ++i) {
    try {
      out[static_cast<size_t>(i)] = normal_form(fs[static_cast<size_t>(i)], G, opts);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

bool ideal_contains(const IdealPresentation& I, const Polynomial& f) {
  if (!same_ring(f.ring(), I.ring))
    fail(Errc::RingMismatch, "membership query in a different ring");
  return ideal_contains(groebner_basis(I), f);
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J) {
  if (!same_ring(I.ring, J.ring))
    fail(Errc::RingMismatch, "ideal comparison across different rings");
  GroebnerBasis GI = groebner_basis(I);
  for (const auto& nf : normal_forms(J.generators, GI))
    if (!nf.is_zero()) return false;
  GroebnerBasis GJ = groebner_basis(J);
  for (const auto& nf : normal_forms(I.generators, GJ))
    if (!nf.is_zero()) return false;
  return true;
}

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::string>& keep) {
  const GradedRingSpec& R = *I.ring;
  std::vector<bool> kept(R.nvars(), false);
  for (const auto& name : keep) {
    auto idx = R.index_of(name);
    if (!idx) fail(Errc::UnknownVariable, "'" + name + "' is not a variable of " + R.str());
    kept[*idx] = true;
  }
  std::vector<size_t> perm; // eliminated block first, then kept, both in ring order
  for (size_t i = 0; i < R.nvars(); ++i)
    if (!kept[i]) perm.push_back(i);
  size_t nelim = perm.size();
  for (size_t i = 0; i < R.nvars(); ++i)
    if (kept[i]) perm.push_back(i);

  std::vector<VarDecl> pvars;
  pvars.reserve(R.nvars());
  for (size_t k : perm) pvars.push_back(R.vars()[k]);
  Ring Rp = make_ring(R.domain(), pvars);

  auto permute = [&](const Polynomial& p, const Ring& target,
                     const std::vector<size_t>& map) {
    std::vector<Term> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms()) {
      Monomial m = Monomial::one(map.size());
      for (size_t k = 0; k < map.size(); ++k) m.e[k] = t.m.e[map[k]];
      ts.push_back(Term{std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(ts));
  };

  std::vector<Polynomial> pgens;
  pgens.reserve(I.generators.size());
  for (const auto& g : I.generators) pgens.push_back(permute(g, Rp, perm));

  GroebnerBasis G = groebner_basis(IdealPresentation::make(Rp, std::move(pgens)),
                                   MonomialOrder::elimination(nelim));

  std::vector<VarDecl> kvars;
  std::vector<size_t> kmap; // kept-ring index -> permuted-ring index
  for (size_t i = nelim; i < R.nvars(); ++i) {
    kvars.push_back(pvars[i]);
    kmap.push_back(i);
  }
  Ring Rk = make_ring(R.domain(), kvars);

  std::vector<Polynomial> out;
  for (const auto& b : G.basis) {
    bool pure = std::all_of(b.terms().begin(), b.terms().end(), [&](const Term& t) {
      for (size_t i = 0; i < nelim; ++i)
        if (t.m.e[i] != 0) return false;
      return true;
    });
    if (pure) out.push_back(permute(b, Rk, kmap));
  }
  return IdealPresentation::make(Rk, std::move(out));
}

IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J) {
  if (!same_ring(I.ring, J.ring))
    fail(Errc::RingMismatch, "intersection across different rings");
  const GradedRingSpec& R = *I.ring;
  std::string tname = fresh_var_name(
      "t", [&](const std::string& n) { return R.index_of(n).has_value(); });
  std::vector<VarDecl> tvars;
  tvars.push_back(VarDecl{tname, 1});
  for (const auto& v : R.vars()) tvars.push_back(v);
  Ring Rt = make_ring(R.domain(), tvars);

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms()) {
      Monomial m = Monomial::one(R.nvars() + 1);
      for (size_t k = 0; k < R.nvars(); ++k) m.e[k + 1] = t.m.e[k];
      ts.push_back(Term{std::move(m), t.c});
    }
    return Polynomial::from_terms(Rt, std::move(ts));
  };

  Polynomial t = Polynomial::variable(Rt, 0);
  Polynomial one_minus_t = Polynomial::constant(Rt, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(t * lift(g));
  for (const auto& h : J.generators) gens.push_back(one_minus_t * lift(h));

  std::vector<std::string> keep;
  for (const auto& v : R.vars()) keep.push_back(v.name);
  IdealPresentation K = eliminate(IdealPresentation::make(Rt, std::move(gens)), keep);

  // Back onto the caller's ring object (same variable sequence).
  std::vector<Polynomial> out;
  for (const auto& g : K.generators) out.push_back(Polynomial::from_terms(I.ring, g.terms()));

  if (I.homogeneous && J.homogeneous) {
    std::vector<Polynomial> split;
    for (const auto& g : out)
      for (auto& [d, comp] : g.homogeneous_components()) split.push_back(std::move(comp));
    out = std::move(split);
  }
  std::vector<Polynomial> dedup;
  for (auto& g : out)
    if (std::find(dedup.begin(), dedup.end(), g) == dedup.end()) dedup.push_back(std::move(g));
  return IdealPresentation::make(I.ring, std::move(dedup));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& c) {
  require_same_ring(f, c);
  if (c.is_zero()) fail(Errc::DivisionFailure, "division by the zero polynomial");
  const Ring& ring = f.ring();
  bool integers = ring->domain() == Domain::Integers;
  Polynomial rem = f;
  Polynomial quot = Polynomial::zero(ring);
  const Term& clt = c.leading();
  while (!rem.is_zero()) {
    const Term& rlt = rem.leading();
    if (!clt.m.divides(rlt.m))
      fail(Errc::DivisionFailure, "leading monomial of " + c.str() + " does not divide " +
                                      rem.str());
    mpq_class q = rlt.c / clt.c;
    if (integers && q.get_den() != 1)
      fail(Errc::DivisionFailure, "leading coefficient does not divide exactly");
    Polynomial qt = Polynomial::term(ring, q, rlt.m / clt.m);
    quot = quot + qt;
    rem = rem - qt * c;
  }
  return quot;
}

IdealPresentation ideal_quotient_element(const IdealPresentation& I, const Polynomial& c) {
  if (!same_ring(c.ring(), I.ring))
    fail(Errc::RingMismatch, "quotient element in a different ring");
  if (c.is_zero()) fail(Errc::DivisionFailure, "ideal quotient by zero");
  IdealPresentation principal = IdealPresentation::make(I.ring, {c});
  IdealPresentation K = intersect(I, principal);
  std::vector<Polynomial> out;
  out.reserve(K.generators.size());
  for (const auto& k : K.generators) out.push_back(exact_divide(k, c));
  return IdealPresentation::make(I.ring, std::move(out));
}

IdealPresentation kernel_of_images(const Ring& source, const std::vector<Polynomial>& images,
                                   const Ring& target,
                                   const IdealPresentation& target_relations) {
  const GradedRingSpec& S = *source;
  const GradedRingSpec& T = *target;
  if (S.domain() != T.domain())
    fail(Errc::RingMismatch, "kernel across different coefficient domains");
  if (images.size() != S.nvars())
    fail(Errc::RingMismatch, "one image per source variable required");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target))
      fail(Errc::RingMismatch, "image polynomial is not over the target ring");
  if (!same_ring(target_relations.ring, target))
    fail(Errc::RingMismatch, "target relations are not over the target ring");

  // Combined ring: target block (to eliminate, renamed when clashing) then source.
  std::vector<VarDecl> cvars;
  auto taken = [&](const std::string& n) {
    if (S.index_of(n)) return true;
    return std::any_of(cvars.begin(), cvars.end(),
                       [&](const VarDecl& v) { return v.name == n; });
  };
  for (const auto& v : T.vars()) cvars.push_back(VarDecl{fresh_var_name(v.name, taken), v.weight});
  for (const auto& v : S.vars()) cvars.push_back(v);
  Ring C = make_ring(S.domain(), cvars);
  size_t nT = T.nvars();

  auto lift_target = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = Monomial::one(cvars.size());
      for (size_t k = 0; k < nT; ++k) m.e[k] = t.m.e[k];
      ts.push_back(Term{std::move(m), t.c});
    }
    return Polynomial::from_terms(C, std::move(ts));
  };

  std::vector<Polynomial> gens;
  for (const auto& r : target_relations.generators) gens.push_back(lift_target(r));
  for (size_t k = 0; k < S.nvars(); ++k) {
    Polynomial xk = Polynomial::variable(C, nT + k);
    gens.push_back(xk - lift_target(images[k]));
  }

  std::vector<std::string> keep;
  for (const auto& v : S.vars()) keep.push_back(v.name);
  IdealPresentation K = eliminate(IdealPresentation::make(C, std::move(gens)), keep);

  std::vector<Polynomial> out;
  for (const auto& g : K.generators) out.push_back(Polynomial::from_terms(source, g.terms()));
  IdealPresentation result = IdealPresentation::make(source, std::move(out));

  // Self-check: every emitted generator maps to zero in target/J.
  GroebnerBasis GT = groebner_basis(target_relations);
  for (const auto& g : result.generators) {
    Polynomial img = substitute(g, target, images);
    if (!normal_form(img, GT).is_zero())
      fail(Errc::Internal, "kernel generator does not map to zero: " + g.str());
  }
  return result;
}

} // namespace m21
