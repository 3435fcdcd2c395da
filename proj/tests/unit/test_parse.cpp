#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "m21/error.hpp"

using namespace m21;
using testutil::P;
using testutil::ring;

TEST_CASE("grammar basics") {
  Ring r = ring("Z[psi1:1,th2:2]");
  CHECK(P(r, "2*psi1*th2") == P(r, "th2*psi1*2"));
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, " ( psi1 + th2 ) ^ 2 ") == P(r, "psi1^2+2*psi1*th2+th2^2"));
  CHECK(P(r, "-psi1^2") == -P(r, "psi1^2"));
  CHECK(P(r, "psi1^0") == P(r, "1"));
  CHECK(P(r, "7") == Polynomial::constant(r, 7));

  Ring q = ring("Q[l1:1,psi1:1]");
  CHECK(P(q, "1/2*l1^2 - psi1*(l1-psi1)") ==
        P(q, "1/2*l1^2-psi1*l1+psi1^2"));
  CHECK(P(q, "2/4*l1") == P(q, "1/2*l1"));
}

TEST_CASE("parse errors carry positions and codes") {
  Ring r = ring("Z[x:1]");
  CHECK_THROWS_WITH_AS(P(r, "x+"), doctest::Contains("position"), Error);
  try {
    P(r, "x*)");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  try {
    P(r, "x+y");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
  }
  try {
    P(r, "1/2*x");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RationalInIntegerRing);
  }
  CHECK_THROWS_AS(P(r, "x^(2)"), Error);  // exponent must be a literal
  CHECK_THROWS_AS(P(r, "2 x"), Error);    // '*' is mandatory
  CHECK_THROWS_AS(P(r, "1/0"), Error);
  CHECK_NOTHROW(P(r, "4/2*x"));           // normalizes to an integer
  CHECK_NOTHROW(P(ring("Q[x:1]"), "1/2*x"));
}

TEST_CASE("round trip: parse(format(p)) == p") {
  std::mt19937 rng(23);
  Ring rz = ring("Z[psi1:1,th1:1,l2:2]");
  Ring rq = ring("Q[a:1,b:3]");
  for (int it = 0; it < 400; ++it) {
    Polynomial p = testutil::random_poly(rz, rng, 6, 4, 30);
    CHECK(parse_poly(p.str(), rz) == p);
  }
  for (int it = 0; it < 200; ++it) {
    Polynomial p = testutil::random_poly(rq, rng, 5, 3, 9);
    if (!p.is_zero()) p = p.scaled(mpq_class(1, 1 + it % 7));
    CHECK(parse_poly(p.str(), rq) == p);
  }
  CHECK(Polynomial::zero(rz).str() == "0");
}

TEST_CASE("canonical form is descending with explicit signs") {
  Ring r = ring("Z[psi1:1,th1:1,l1:1,l2:2,th2:2]");
  CHECK(P(r, "l2-th2-psi1*(l1-psi1)").str() == "psi1^2-psi1*l1+l2-th2");
  CHECK(P(r, "-3*th1-l2").str() == "-l2-3*th1"); // l2 has weight 2, comes first
  CHECK(P(r, "th2 - l2 + 1").str() == "-l2+th2+1");
}
