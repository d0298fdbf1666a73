#include "doctest.h"
#include "oracles.hpp"

#include "cork/error.hpp"
#include "cork/intmatrix.hpp"
#include "cork/rational.hpp"

#include <random>

using namespace cork;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("3/-6"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_int64(parse_rational("12")) == 12);
  CHECK_THROWS(to_int64(parse_rational("1/2")));
  CHECK(sign(parse_rational("-1/3")) == -1);
}

TEST_CASE("smith form agrees with the determinantal-divisor oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    const auto snf = smith_normal_form(m);
    CHECK(snf.invariant_factors == oracle::invariant_factors(m));
    const auto [free, torsion] = oracle::cokernel(m);
    CHECK(snf.cokernel().free_rank == free);
    CHECK(snf.cokernel().torsion == torsion);
    CHECK(snf.kernel_rank() == m.cols() - snf.rank());
    for (std::size_t k = 1; k < snf.invariant_factors.size(); ++k)
      CHECK(snf.invariant_factors[k] % snf.invariant_factors[k - 1] == 0);
  }
}

TEST_CASE("determinant is exact") {
  IntMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 2;
  CHECK(determinant(m) == 6);
  m(2, 2) = 1;
  CHECK(determinant(m) == 0);
  CHECK(determinant(identity_matrix(5)) == 1);
}

TEST_CASE("abelian group text and order") {
  AbelianGroup g{1, {2, 6}};
  CHECK(g.order() == 0);
  CHECK(AbelianGroup{0, {3, 3}}.order() == 9);
  CHECK(AbelianGroup{}.is_trivial());
  CHECK(AbelianGroup{0, {5}}.to_string() == "Z/5");
}

TEST_CASE("symplectic inverse") {
  IntMatrix m = identity_matrix(4);
  m(0, 1) = 1;
  m(2, 3) = -2;
  REQUIRE(is_symplectic(m));
  CHECK(is_identity(m * symplectic_inverse(m)));
  CHECK(identity_defect(m) == 3);
}
