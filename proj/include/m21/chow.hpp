#ifndef M21_CHOW_HPP
#define M21_CHOW_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "m21/groebner.hpp"
#include "m21/ideal.hpp"
#include "m21/polynomial.hpp"

namespace m21::chow {

/// A named graded quotient ring Z[gens]/I (or Q[gens]/I) standing for a
/// Chow ring. Relations must be homogeneous.
struct ChowPresentation {
  std::string name;
  Ring ring;
  IdealPresentation relations;
  std::map<std::string, std::string> generator_docs;

  static ChowPresentation make(std::string name, Ring ring, std::vector<Polynomial> relations,
                               std::map<std::string, std::string> docs = {});
};

/// Degree-preserving homomorphism from a free graded ring into a quotient
/// presentation: one homogeneous image (of the variable's weight, or zero)
/// per source variable.
struct RingMap {
  std::string name;
  Ring source;
  ChowPresentation target;
  std::vector<Polynomial> images;

  static RingMap make(std::string name, Ring source, ChowPresentation target,
                      std::vector<Polynomial> images);
};

/// Image of p under the map (no reduction).
Polynomial apply(const RingMap& m, const Polynomial& p);

struct MapValidity {
  bool valid = true;
  std::optional<Polynomial> offending; // source relation whose image escapes the ideal
  std::optional<Polynomial> residue;   // its nonzero normal form in the target
};

/// The map descends to source/relations iff every relation maps into the
/// target ideal; failure carries the witness.
MapValidity validate_ringmap(const RingMap& m, const IdealPresentation& source_relations);

bool nonzerodivisor(const ChowPresentation& A, const Polynomial& c);

/// Kernel of the induced map source -> target/J.
IdealPresentation kernel_of_ringmap(const RingMap& m);

/// The patching-lemma setup at the level of presentations: a candidate
/// generator ring P with its two restriction maps, and the top Chern class
/// of the normal bundle in the closed part.
struct PatchingProblem {
  Ring generators;
  RingMap open;
  RingMap closed;
  Polynomial top_chern; // in the closed target's ring
};

/// Relation ideal of the candidate generators: since the fiber product
/// injects into the product of the two sides, it is ker(open) ∩ ker(closed).
/// Refuses (PRECONDITION_NZD) when the top Chern class is a zero divisor.
IdealPresentation patching_relations(const PatchingProblem& p);

/// Quotient by pushed-forward classes: same ring, relations + classes.
ChowPresentation excise(const ChowPresentation& A, const std::vector<Polynomial>& classes,
                        std::string new_name);

/// Product of the character classes cutting out an invariant linear
/// subspace; the empty product is 1.
Polynomial weight_class(const Ring& ring, const std::vector<Polynomial>& characters);

/// Extends the base by a weight-1 class h with the single relation
/// h^r + c_1 h^(r-1) + ... + c_r = 0 (chern = (c_1, ..., c_r)).
ChowPresentation projective_bundle_presentation(const ChowPresentation& base,
                                                const std::vector<Polynomial>& chern,
                                                const std::string& h_name);

/// Pushforward specified by a surjective pullback: push(x) is a lift of x
/// times the image of 1 (projection formula); well-defined modulo relations.
struct SurjectivePullback {
  ChowPresentation into;             // where pushforwards land (A_X)
  RingMap pullback;                  // A_X -> A_Y
  Polynomial unit_image;             // push(1), in A_X
  std::vector<Polynomial> preimages; // declared lift of each A_Y generator
};

/// Degree-two transfer: the upstream ring is generated by tau and one
/// co-generator over the downstream ring, with tau^2 = pb(p) tau + pb(q);
/// the pushforward is determined by push(1) and push(tau).
struct QuadraticTransfer {
  ChowPresentation into; // A_down
  RingMap pullback;      // A_down -> A_up
  size_t tau;            // up-ring variable index
  size_t cogen;          // up-ring variable index
  Polynomial tau_p, tau_q;     // in the down ring
  Polynomial cogen_a, cogen_b; // cogen = pb(a) + pb(b) tau
  Polynomial push_unit, push_tau;
};

using PushforwardOperator = std::variant<SurjectivePullback, QuadraticTransfer>;

/// Checks the operator's declared data (sections really lift, the transfer
/// relation holds, kernel times unit image dies in the relations).
void validate_operator(const PushforwardOperator& op);

Polynomial pushforward_apply(const PushforwardOperator& op, const Polynomial& x);

struct ConsistencyRow {
  std::string label;
  bool pass = false;
  Polynomial residue;
};
struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  bool all_pass = true;
};

/// Checks substitute(class) - expected ∈ target relations for each
/// restriction; failures carry the residue.
ConsistencyReport class_consistency(const Polynomial& cls,
                                    const std::vector<std::pair<RingMap, Polynomial>>& restrictions);

} // namespace m21::chow

#endif
