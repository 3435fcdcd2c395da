#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace m21;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_snf_contract(const IntegerMatrix& M) {
  SnfResult s = smith_normal_form(M);
  CHECK(s.U.mul(M).mul(s.V) == s.D);
  mpz_class du = det(s.U), dv = det(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // diagonal, nonnegative, divisibility chain
  for (size_t i = 0; i < s.D.rows; ++i)
    for (size_t j = 0; j < s.D.cols; ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  auto inv = invariant_factors(s.D);
  for (size_t i = 0; i + 1 < inv.size(); ++i)
    CHECK(mpz_divisible_p(inv[i + 1].get_mpz_t(), inv[i].get_mpz_t()));
}

} // namespace

TEST_CASE("classical diagonal example") {
  IntegerMatrix M = from_rows({{2, 0}, {0, 3}});
  SnfResult s = smith_normal_form(M);
  CHECK(s.D.at(0, 0) == 1);
  CHECK(s.D.at(1, 1) == 6);
  check_snf_contract(M);
}

TEST_CASE("zero matrix") {
  IntegerMatrix M(3, 2);
  SnfResult s = smith_normal_form(M);
  CHECK(invariant_factors(s.D).empty());
  CHECK(s.U == IntegerMatrix::identity(3));
  CHECK(s.V == IntegerMatrix::identity(2));
}

TEST_CASE("two-marking degree-2 lattice") {
  // rows express {mu1*l1 + mu1^2, 24*l1^2} in the basis (l1^2, l1*mu1, mu1^2)
  IntegerMatrix M = from_rows({{0, 1, 1}, {24, 0, 0}});
  SnfResult s = smith_normal_form(M);
  auto inv = invariant_factors(s.D);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 1);
  CHECK(inv[1] == 24);
  auto oracle = testutil::oracle_invariant_factors(M);
  CHECK(inv == oracle);
  check_snf_contract(M);
}

TEST_CASE("random matrices match the determinantal-divisor oracle") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int it = 0; it < 120; ++it) {
    IntegerMatrix M(static_cast<size_t>(dim(rng)), static_cast<size_t>(dim(rng)));
    for (auto& v : M.a) v = entry(rng);
    auto inv = invariant_factors(smith_normal_form(M).D);
    CHECK(inv == testutil::oracle_invariant_factors(M));
    check_snf_contract(M);
  }
}

TEST_CASE("bareiss determinant") {
  CHECK(det(from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int it = 0; it < 60; ++it) {
    IntegerMatrix M(3, 3);
    std::vector<std::vector<mpz_class>> rows(3, std::vector<mpz_class>(3));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        int v = entry(rng);
        M.at(i, j) = v;
        rows[i][j] = v;
      }
    CHECK(det(M) == testutil::naive_det(rows));
  }
}
