#ifndef M21_GROEBNER_HPP
#define M21_GROEBNER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "m21/ideal.hpp"
#include "m21/polynomial.hpp"

namespace m21 {

enum class BasisStrength { StrongZ, ReducedQ };

struct GroebnerOptions {
  // Reduction-step budget; ad-hoc inputs can be pathological, the bundled
  // corpus stays far below this. The process-wide default (10^7 initially)
  // is adjustable for harnesses that feed untrusted inputs.
  uint64_t step_budget = default_step_budget();

  static uint64_t default_step_budget();
  static void set_default_step_budget(uint64_t steps);
};

/// Over Z: a strong Groebner basis (leading term of every ideal element is
/// divisible, coefficient included, by a basis leading term). Over Q: the
/// reduced monic basis. Basis elements are inter-reduced, sign-normalized
/// and sorted, so the presentation is deterministic for a fixed input.
struct GroebnerBasis {
  IdealPresentation ideal;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  BasisStrength strength = BasisStrength::StrongZ;
};

GroebnerBasis groebner_basis(const IdealPresentation& ideal,
                             MonomialOrder order = MonomialOrder::wdegrevlex(),
                             const GroebnerOptions& opts = {});

/// Remainder of strong division: no term of the result is divisible
/// (monomial and coefficient) by a basis leading term, and f - result lies
/// in the ideal. Deterministic; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       const GroebnerOptions& opts = {});

/// Batch normal forms; runs the reductions in parallel when enabled.
std::vector<Polynomial> normal_forms(std::span<const Polynomial> fs, const GroebnerBasis& G,
                                     const GroebnerOptions& opts = {});

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f);
bool ideal_contains(const IdealPresentation& I, const Polynomial& f);
bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J);

/// Generators of I restricted to the subring on `keep` (names must be
/// variables of I's ring); computed with a block elimination order.
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::string>& keep);

/// I ∩ J via the auxiliary-variable trick: eliminate t from t*I + (1-t)*J.
/// When both inputs are homogeneous the output generators are split into
/// homogeneous components (the intersection ideal is graded).
IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J);

/// (I : c) = { f : c*f in I }, computed as I ∩ (c) with the generators
/// divided exactly by c. A failed division signals an internal fault.
IdealPresentation ideal_quotient_element(const IdealPresentation& I, const Polynomial& c);

/// Exact division q = f / c; DIVISION_FAILURE unless c divides f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& c);

/// Kernel of S -> target/J, x_k |-> images[k], by graph-ideal elimination.
/// Every emitted generator is checked to map to zero.
IdealPresentation kernel_of_images(const Ring& source, const std::vector<Polynomial>& images,
                                   const Ring& target, const IdealPresentation& target_relations);

} // namespace m21

#endif
