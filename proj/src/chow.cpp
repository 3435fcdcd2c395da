#include "m21/chow.hpp"

#include <algorithm>

#include "m21/error.hpp"

namespace m21::chow {

ChowPresentation ChowPresentation::make(std::string name, Ring ring,
                                        std::vector<Polynomial> relations,
                                        std::map<std::string, std::string> docs) {
  IdealPresentation I = IdealPresentation::make(ring, std::move(relations));
  if (!I.homogeneous)
    fail(Errc::InhomogeneousIdeal, "presentation '" + name + "' has inhomogeneous relations");
  ChowPresentation p;
  p.name = std::move(name);
  p.ring = std::move(ring);
  p.relations = std::move(I);
  p.generator_docs = std::move(docs);
  return p;
}

RingMap RingMap::make(std::string name, Ring source, ChowPresentation target,
                      std::vector<Polynomial> images) {
  if (images.size() != source->nvars())
    fail(Errc::DegreeMismatch, "map '" + name + "' needs one image per source variable");
  for (size_t i = 0; i < images.size(); ++i) {
    if (!same_ring(images[i].ring(), target.ring))
      fail(Errc::RingMismatch, "image of '" + source->var_name(i) + "' in map '" + name +
                                   "' is not over the target ring");
    if (!images[i].homogeneous_of(source->weight(i)))
      fail(Errc::DegreeMismatch, "image of '" + source->var_name(i) + "' in map '" + name +
                                     "' is not homogeneous of weight " +
                                     std::to_string(source->weight(i)));
  }
  RingMap m;
  m.name = std::move(name);
  m.source = std::move(source);
  m.target = std::move(target);
  m.images = std::move(images);
  return m;
}

Polynomial apply(const RingMap& m, const Polynomial& p) {
  if (!same_ring(p.ring(), m.source))
    fail(Errc::RingMismatch, "polynomial is not over the source of map '" + m.name + "'");
  return substitute(p, m.target.ring, m.images);
}

MapValidity validate_ringmap(const RingMap& m, const IdealPresentation& source_relations) {
  if (!same_ring(source_relations.ring, m.source))
    fail(Errc::RingMismatch, "source relations are not over the source ring");
  MapValidity v;
  GroebnerBasis G = groebner_basis(m.target.relations);
  std::vector<Polynomial> images;
  images.reserve(source_relations.generators.size());
  for (const auto& r : source_relations.generators) images.push_back(apply(m, r));
  std::vector<Polynomial> residues = normal_forms(images, G);
  for (size_t i = 0; i < residues.size(); ++i) {
    if (!residues[i].is_zero()) {
      v.valid = false;
      v.offending = source_relations.generators[i];
      v.residue = residues[i];
      return v;
    }
  }
  return v;
}

bool nonzerodivisor(const ChowPresentation& A, const Polynomial& c) {
  if (c.is_zero()) return false;
  if (!c.weighted_degree().homogeneous)
    fail(Errc::DegreeMismatch, "non-zero-divisor test needs a homogeneous class");
  IdealPresentation quot = ideal_quotient_element(A.relations, c);
  return ideal_equal(quot, A.relations);
}

IdealPresentation kernel_of_ringmap(const RingMap& m) {
  return kernel_of_images(m.source, m.images, m.target.ring, m.target.relations);
}

IdealPresentation patching_relations(const PatchingProblem& p) {
  if (!same_ring(p.open.source, p.generators) || !same_ring(p.closed.source, p.generators))
    fail(Errc::RingMismatch, "restriction maps must start from the candidate generator ring");
  if (!same_ring(p.top_chern.ring(), p.closed.target.ring))
    fail(Errc::RingMismatch, "top Chern class must live in the closed target");
  if (!p.top_chern.weighted_degree().homogeneous)
    fail(Errc::DegreeMismatch, "top Chern class must be homogeneous");
  if (!nonzerodivisor(p.closed.target, p.top_chern))
    fail(Errc::PreconditionNzd, "top Chern class " + p.top_chern.str() +
                                    " is a zero divisor in " + p.closed.target.name);

  IdealPresentation ker_open = kernel_of_ringmap(p.open);
  IdealPresentation ker_closed = kernel_of_ringmap(p.closed);
  IdealPresentation rel = intersect(ker_open, ker_closed);

  GroebnerBasis g_open = groebner_basis(p.open.target.relations);
  GroebnerBasis g_closed = groebner_basis(p.closed.target.relations);
  for (const auto& g : rel.generators) {
    if (!normal_form(apply(p.open, g), g_open).is_zero() ||
        !normal_form(apply(p.closed, g), g_closed).is_zero())
      fail(Errc::Internal, "patching relation does not vanish on both charts: " + g.str());
  }
  return rel;
}

ChowPresentation excise(const ChowPresentation& A, const std::vector<Polynomial>& classes,
                        std::string new_name) {
  std::vector<Polynomial> gens = A.relations.generators;
  for (const auto& c : classes) {
    if (!same_ring(c.ring(), A.ring))
      fail(Errc::RingMismatch, "excised class is not over the presentation ring");
    if (!c.weighted_degree().homogeneous)
      fail(Errc::InhomogeneousIdeal, "excised class must be homogeneous: " + c.str());
    gens.push_back(c);
  }
  return ChowPresentation::make(std::move(new_name), A.ring, std::move(gens), A.generator_docs);
}

Polynomial weight_class(const Ring& ring, const std::vector<Polynomial>& characters) {
  Polynomial acc = Polynomial::constant(ring, 1);
  for (const auto& ch : characters) {
    if (!same_ring(ch.ring(), ring))
      fail(Errc::RingMismatch, "character class in the wrong ring");
    if (!ch.weighted_degree().homogeneous)
      fail(Errc::DegreeMismatch, "character class must be homogeneous: " + ch.str());
    acc = acc * ch;
  }
  return acc;
}

ChowPresentation projective_bundle_presentation(const ChowPresentation& base,
                                                const std::vector<Polynomial>& chern,
                                                const std::string& h_name) {
  const GradedRingSpec& R = *base.ring;
  if (R.index_of(h_name))
    fail(Errc::ParseError, "'" + h_name + "' already names a base generator");
  for (size_t i = 0; i < chern.size(); ++i) {
    if (!same_ring(chern[i].ring(), base.ring))
      fail(Errc::RingMismatch, "Chern class is not over the base ring");
    if (!chern[i].homogeneous_of(static_cast<long>(i) + 1))
      fail(Errc::DegreeMismatch, "c_" + std::to_string(i + 1) +
                                     " must be homogeneous of degree " + std::to_string(i + 1));
  }
  std::vector<VarDecl> vars = R.vars();
  vars.push_back(VarDecl{h_name, 1});
  Ring ext = make_ring(R.domain(), vars);

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = Monomial::one(vars.size());
      for (size_t k = 0; k < R.nvars(); ++k) m.e[k] = t.m.e[k];
      ts.push_back(Term{std::move(m), t.c});
    }
    return Polynomial::from_terms(ext, std::move(ts));
  };

  Polynomial h = Polynomial::variable(ext, vars.size() - 1);
  unsigned r = static_cast<unsigned>(chern.size());
  Polynomial rel = h.pow(r);
  for (size_t i = 0; i < chern.size(); ++i)
    rel = rel + lift(chern[i]) * h.pow(r - static_cast<unsigned>(i) - 1);

  std::vector<Polynomial> relations;
  for (const auto& g : base.relations.generators) relations.push_back(lift(g));
  relations.push_back(std::move(rel));
  return ChowPresentation::make(base.name + "_P" + std::to_string(r), ext, std::move(relations),
                                base.generator_docs);
}

namespace {

void validate_surjective(const SurjectivePullback& op) {
  if (!same_ring(op.pullback.source, op.into.ring))
    fail(Errc::RingMismatch, "pullback must start from the pushforward codomain ring");
  if (!same_ring(op.unit_image.ring(), op.into.ring))
    fail(Errc::RingMismatch, "unit image must live in the codomain ring");
  const GradedRingSpec& Y = *op.pullback.target.ring;
  if (op.preimages.size() != Y.nvars())
    fail(Errc::LiftFailure, "one declared preimage per upstream generator required");
  GroebnerBasis GY = groebner_basis(op.pullback.target.relations);
  for (size_t i = 0; i < op.preimages.size(); ++i) {
    if (!same_ring(op.preimages[i].ring(), op.into.ring))
      fail(Errc::RingMismatch, "preimage is not over the codomain ring");
    Polynomial back = apply(op.pullback, op.preimages[i]);
    Polynomial diff = back - Polynomial::variable(op.pullback.target.ring, i);
    if (!normal_form(diff, GY).is_zero())
      fail(Errc::LiftFailure, "declared preimage of '" + Y.var_name(i) +
                                  "' does not pull back to it");
  }
  // push(1) must kill ker(pullback): that is exactly well-definedness.
  IdealPresentation ker = kernel_of_ringmap(op.pullback);
  GroebnerBasis GX = groebner_basis(op.into.relations);
  for (const auto& k : ker.generators) {
    if (!normal_form(k * op.unit_image, GX).is_zero())
      fail(Errc::LiftFailure,
           "pushforward is not well-defined: kernel element " + k.str() + " survives");
  }
}

void validate_transfer(const QuadraticTransfer& op) {
  if (!same_ring(op.pullback.source, op.into.ring))
    fail(Errc::RingMismatch, "pullback must start from the downstream ring");
  const GradedRingSpec& up = *op.pullback.target.ring;
  if (up.nvars() != 2 || op.tau == op.cogen || op.tau >= 2 || op.cogen >= 2)
    fail(Errc::NotReducible, "quadratic transfer needs exactly the two generators tau, cogen");
  for (const Polynomial* q :
       {&op.tau_p, &op.tau_q, &op.cogen_a, &op.cogen_b, &op.push_unit, &op.push_tau})
    if (!same_ring(q->ring(), op.into.ring))
      fail(Errc::RingMismatch, "transfer data must live in the downstream ring");

  GroebnerBasis GUp = groebner_basis(op.pullback.target.relations);
  Polynomial tau = Polynomial::variable(op.pullback.target.ring, op.tau);
  Polynomial cog = Polynomial::variable(op.pullback.target.ring, op.cogen);
  Polynomial tau_rel =
      tau * tau - apply(op.pullback, op.tau_p) * tau - apply(op.pullback, op.tau_q);
  if (!normal_form(tau_rel, GUp).is_zero())
    fail(Errc::NotReducible, "declared tau relation does not hold upstream");
  Polynomial cog_rel =
      cog - apply(op.pullback, op.cogen_a) - apply(op.pullback, op.cogen_b) * tau;
  if (!normal_form(cog_rel, GUp).is_zero())
    fail(Errc::NotReducible, "declared co-generator expression does not hold upstream");

  // The a + b*tau coordinates are only defined up to ker(pullback), so the
  // transfer data must kill the kernel; this is also exactly what the
  // projection formula forces.
  IdealPresentation ker = kernel_of_ringmap(op.pullback);
  GroebnerBasis GDown = groebner_basis(op.into.relations);
  for (const auto& k : ker.generators) {
    if (!normal_form(k * op.push_unit, GDown).is_zero() ||
        !normal_form(k * op.push_tau, GDown).is_zero())
      fail(Errc::NotReducible,
           "transfer data does not kill the pullback kernel element " + k.str());
  }
}

struct TransferForm {
  Polynomial a, b; // x = pb(a) + pb(b) tau
};

TransferForm transfer_canonical_form(const QuadraticTransfer& op, const Polynomial& x) {
  const GradedRingSpec& up = *op.pullback.target.ring;
  const GradedRingSpec& down = *op.into.ring;

  // Mixed ring: downstream variables plus a fresh copy of tau.
  std::vector<VarDecl> vars = down.vars();
  std::string tname = up.var_name(op.tau);
  while (std::any_of(vars.begin(), vars.end(),
                     [&](const VarDecl& v) { return v.name == tname; }))
    tname += "_";
  vars.push_back(VarDecl{tname, up.weight(op.tau)});
  Ring mixed = make_ring(down.domain(), vars);
  size_t tidx = vars.size() - 1;

  auto lift_down = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = Monomial::one(vars.size());
      for (size_t k = 0; k < down.nvars(); ++k) m.e[k] = t.m.e[k];
      ts.push_back(Term{std::move(m), t.c});
    }
    return Polynomial::from_terms(mixed, std::move(ts));
  };

  Polynomial tau_m = Polynomial::variable(mixed, tidx);
  std::vector<Polynomial> images(2, Polynomial::zero(mixed));
  images[op.tau] = tau_m;
  images[op.cogen] = lift_down(op.cogen_a) + lift_down(op.cogen_b) * tau_m;
  Polynomial y = substitute(x, mixed, images);

  Polynomial p_m = lift_down(op.tau_p);
  Polynomial q_m = lift_down(op.tau_q);
  while (true) {
    int maxdeg = 0;
    for (const auto& t : y.terms()) maxdeg = std::max(maxdeg, t.m.e[tidx]);
    if (maxdeg < 2) break;
    std::vector<Term> keep;
    Polynomial rewritten = Polynomial::zero(mixed);
    for (const auto& t : y.terms()) {
      if (t.m.e[tidx] < 2) {
        keep.push_back(t);
        continue;
      }
      Monomial m = t.m;
      m.e[tidx] -= 2;
      Polynomial stub = Polynomial::term(mixed, t.c, std::move(m));
      rewritten = rewritten + stub * (p_m * tau_m + q_m);
    }
    y = Polynomial::from_terms(mixed, std::move(keep)) + rewritten;
  }

  std::vector<Term> a_terms, b_terms;
  for (const auto& t : y.terms()) {
    Monomial m = Monomial::one(down.nvars());
    for (size_t k = 0; k < down.nvars(); ++k) m.e[k] = t.m.e[k];
    if (t.m.e[tidx] == 0)
      a_terms.push_back(Term{std::move(m), t.c});
    else
      b_terms.push_back(Term{std::move(m), t.c});
  }
  TransferForm form{Polynomial::from_terms(op.into.ring, std::move(a_terms)),
                    Polynomial::from_terms(op.into.ring, std::move(b_terms))};

  // The canonical form must reproduce x upstream.
  GroebnerBasis GUp = groebner_basis(op.pullback.target.relations);
  Polynomial tau_up = Polynomial::variable(op.pullback.target.ring, op.tau);
  Polynomial back = apply(op.pullback, form.a) + apply(op.pullback, form.b) * tau_up;
  if (!normal_form(back - x, GUp).is_zero())
    fail(Errc::NotReducible, "element does not reduce to the a + b*tau form: " + x.str());
  return form;
}

} // namespace

void validate_operator(const PushforwardOperator& op) {
  if (std::holds_alternative<SurjectivePullback>(op))
    validate_surjective(std::get<SurjectivePullback>(op));
  else
    validate_transfer(std::get<QuadraticTransfer>(op));
}

Polynomial pushforward_apply(const PushforwardOperator& op, const Polynomial& x) {
  if (const auto* s = std::get_if<SurjectivePullback>(&op)) {
    if (!same_ring(x.ring(), s->pullback.target.ring))
      fail(Errc::RingMismatch, "pushforward input is not over the upstream ring");
    Polynomial lift = substitute(x, s->into.ring, s->preimages);
    return lift * s->unit_image;
  }
  const auto& t = std::get<QuadraticTransfer>(op);
  if (!same_ring(x.ring(), t.pullback.target.ring))
    fail(Errc::RingMismatch, "pushforward input is not over the upstream ring");
  TransferForm form = transfer_canonical_form(t, x);
  Polynomial raw = form.a * t.push_unit + form.b * t.push_tau;
  return normal_form(raw, groebner_basis(t.into.relations));
}

ConsistencyReport class_consistency(
    const Polynomial& cls, const std::vector<std::pair<RingMap, Polynomial>>& restrictions) {
  ConsistencyReport rep;
  for (const auto& [map, expected] : restrictions) {
    if (!same_ring(expected.ring(), map.target.ring))
      fail(Errc::RingMismatch, "expected restriction value is not over the target of '" +
                                   map.name + "'");
    Polynomial diff = apply(map, cls) - expected;
    Polynomial residue = normal_form(diff, groebner_basis(map.target.relations));
    bool ok = residue.is_zero();
    rep.rows.push_back(ConsistencyRow{map.name, ok, std::move(residue)});
    rep.all_pass = rep.all_pass && ok;
  }
  return rep;
}

} // namespace m21::chow
