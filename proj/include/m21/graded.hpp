#ifndef M21_GRADED_HPP
#define M21_GRADED_HPP

#include <vector>

#include "m21/ideal.hpp"
#include "m21/intmatrix.hpp"
#include "m21/polynomial.hpp"

namespace m21 {

/// Abelian-group structure of one graded piece of ring/ideal.
struct GradedComponent {
  long free_rank = 0;
  std::vector<mpz_class> torsion; // nontrivial invariant factors, in chain order
};

/// All monomials of the given weighted degree, descending under the default order.
std::vector<Monomial> monomials_of_degree(const GradedRingSpec& ring, long degree);

/// The degree-d piece of ring/I as a Z-module (Q-vector space over the
/// rationals, where torsion is empty). Requires homogeneous generators: the
/// degree-d part of the ideal is then spanned by monomial multiples of them.
GradedComponent graded_component(const IdealPresentation& I, long degree);

/// The lattice matrix whose SNF the computation reduces to: rows are the
/// degree-d monomial multiples of the generators in the degree-d monomial
/// basis. Exposed for the independent oracle checks.
IntegerMatrix graded_lattice_matrix(const IdealPresentation& I, long degree);

} // namespace m21

#endif
