#include <doctest.h>

#include "helpers.hpp"
#include "m21/error.hpp"

using namespace m21;
using testutil::ideal;
using testutil::P;
using testutil::ring;

TEST_CASE("monomial enumeration") {
  Ring r = ring("Z[l1:1,mu1:1]");
  auto d2 = monomials_of_degree(*r, 2);
  REQUIRE(d2.size() == 3); // l1^2 > l1*mu1 > mu1^2, descending
  CHECK(d2[0] == Monomial{{2, 0}});
  CHECK(d2[1] == Monomial{{1, 1}});
  CHECK(d2[2] == Monomial{{0, 2}});
  CHECK(monomials_of_degree(*r, 0).size() == 1);

  Ring w = ring("Z[a:2,b:2]");
  CHECK(monomials_of_degree(*w, 3).empty()); // odd degree, even weights
  CHECK(monomials_of_degree(*w, 4).size() == 3);
}

TEST_CASE("two-marking quotient graded pieces") {
  Ring r = ring("Z[l1:1,mu1:1]");
  IdealPresentation I = ideal(r, {"mu1*(l1+mu1)", "24*l1^2"});
  GradedComponent d0 = graded_component(I, 0);
  CHECK(d0.free_rank == 1);
  CHECK(d0.torsion.empty());
  GradedComponent d1 = graded_component(I, 1);
  CHECK(d1.free_rank == 2);
  CHECK(d1.torsion.empty());
  GradedComponent d2 = graded_component(I, 2);
  CHECK(d2.free_rank == 1);
  REQUIRE(d2.torsion.size() == 1);
  CHECK(d2.torsion[0] == 24);
  GradedComponent d3 = graded_component(I, 3);
  CHECK(d3.free_rank == 0);
  CHECK(d3.torsion == std::vector<mpz_class>{24, 24});
}

TEST_CASE("degree-1 piece with no low relations is free") {
  Ring r = ring("Z[l1:1,mu1:1]");
  GradedComponent d1 = graded_component(ideal(r, {"mu1*(l1+mu1)"}), 1);
  CHECK(d1.free_rank == 2);
  CHECK(d1.torsion.empty());
}

TEST_CASE("inhomogeneous ideals are rejected") {
  Ring r = ring("Z[x:1,y:2]");
  CHECK_THROWS_AS(graded_component(ideal(r, {"x+y"}), 2), Error);
  try {
    graded_component(ideal(r, {"x+y"}), 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InhomogeneousIdeal);
  }
}

TEST_CASE("constants in the ideal show up at degree zero") {
  Ring r = ring("Z[x:1]");
  GradedComponent d0 = graded_component(ideal(r, {"2"}), 0);
  CHECK(d0.free_rank == 0);
  CHECK(d0.torsion == std::vector<mpz_class>{2});
}

TEST_CASE("rational rings have no torsion") {
  Ring r = ring("Q[l1:1,mu1:1]");
  IdealPresentation I = ideal(r, {"mu1*(l1+mu1)", "24*l1^2"});
  GradedComponent d2 = graded_component(I, 2);
  CHECK(d2.free_rank == 1);
  CHECK(d2.torsion.empty());
}

TEST_CASE("graded lattice matches the independent membership oracle") {
  Ring r = ring("Z[x:1,y:1,z:2]");
  IdealPresentation I = ideal(r, {"2*x*y", "z-x^2"});
  GroebnerBasis G = groebner_basis(I);
  for (long d = 1; d <= 4; ++d) {
    for (const auto& m : monomials_of_degree(*r, d)) {
      Polynomial f = Polynomial::term(r, 2, m);
      CHECK(ideal_contains(G, f) == testutil::oracle_homog_member(I, f));
    }
  }
}
