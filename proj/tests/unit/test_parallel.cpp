#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "m21/parallel.hpp"
#include "m21/scenario.hpp"

using namespace m21;
using testutil::ideal;
using testutil::P;
using testutil::ring;

#ifndef M21_SOURCE_DIR
#define M21_SOURCE_DIR "."
#endif

TEST_CASE("serial section restores the worker cap") {
  int before = par::max_threads();
  {
    par::SerialSection guard;
    CHECK(par::max_threads() == 1);
    CHECK(!par::enabled());
  }
  CHECK(par::max_threads() == before);
}

TEST_CASE("batch reduction agrees between serial and parallel execution") {
  Ring r = ring("Z[psi1:1,th1:1,l1:1,l2:2,th2:2]");
  IdealPresentation I = ideal(r, {"l2-th2-psi1*(l1-psi1)", "24*l1^2-48*l2", "th1*(l1+th1)",
                                  "20*l1*l2-4*l2*th1", "2*psi1*th2", "th2*(th1+l1-psi1)",
                                  "2*psi1*(l1+th1)*(7*psi1-l1)-24*psi1^3"});
  GroebnerBasis G = groebner_basis(I);
  std::mt19937 rng(83);
  std::vector<Polynomial> batch;
  for (int i = 0; i < 64; ++i) batch.push_back(testutil::random_poly(r, rng, 8, 3, 9));

  std::vector<Polynomial> serial;
  {
    par::SerialSection guard;
    serial = normal_forms(batch, G);
  }
  std::vector<Polynomial> parallel = normal_forms(batch, G);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("smith normal form agrees between serial and parallel execution") {
  std::mt19937 rng(89);
  std::uniform_int_distribution<int> entry(-7, 7);
  IntegerMatrix M(40, 55);
  for (auto& v : M.a) v = entry(rng);
  SnfResult serial;
  {
    par::SerialSection guard;
    serial = smith_normal_form(M);
  }
  SnfResult parallel = smith_normal_form(M);
  CHECK(serial.D == parallel.D);
  CHECK(serial.U == parallel.U);
  CHECK(serial.V == parallel.V);
}

TEST_CASE("graded components agree between serial and parallel execution") {
  Ring r = ring("Z[psi1:1,th1:1,l1:1,l2:2,th2:2]");
  IdealPresentation I = ideal(r, {"l2-th2-psi1*(l1-psi1)", "24*l1^2-48*l2", "th1*(l1+th1)",
                                  "20*l1*l2-4*l2*th1", "2*psi1*th2", "th2*(th1+l1-psi1)",
                                  "2*psi1*(l1+th1)*(7*psi1-l1)-24*psi1^3"});
  for (long d = 0; d <= 6; ++d) {
    GradedComponent s, p;
    {
      par::SerialSection guard;
      s = graded_component(I, d);
    }
    p = graded_component(I, d);
    CHECK(s.free_rank == p.free_rank);
    CHECK(s.torsion == p.torsion);
  }
}

TEST_CASE("check runner agrees between serial and parallel execution") {
  suite::Scenario s = suite::load_scenario(std::string(M21_SOURCE_DIR) + "/corpus/m21.scn");
  suite::Json serial, parallel;
  {
    par::SerialSection guard;
    serial = suite::report_json(suite::run_checks(s));
  }
  parallel = suite::report_json(suite::run_checks(s));
  for (auto& r : serial["results"]) r.erase("ms");
  for (auto& r : parallel["results"]) r.erase("ms");
  CHECK(serial.dump() == parallel.dump());
}
