#include <catch2/catch_amalgamated.hpp>

#include "hychrom/polynomial.hpp"

using namespace hychrom;

TEST_CASE("arithmetic, trimming and evaluation") {
  IntPolynomial zero;
  REQUIRE(zero.degree() == -1);
  REQUIRE(zero.is_zero());
  REQUIRE(zero(Int(5)) == 0);

  auto x = IntPolynomial::monomial(1);
  auto q = x * x - IntPolynomial::monomial(0, 2);
  REQUIRE(q.degree() == 2);
  REQUIRE(q(Int(3)) == 7);
  REQUIRE(q(Rational(1, 2)) == Rational(-7, 4));

  auto r = q + x;
  REQUIRE(r(Int(1)) == 0);
  REQUIRE((r - r).is_zero());
  REQUIRE(Int(3) * x == IntPolynomial::monomial(1, 3));
  REQUIRE(q.coefficient(0) == -2);
  REQUIRE(q.coefficient(7) == 0);

  IntPolynomial padded(std::vector<Int>{1, 0, 0});
  REQUIRE(padded.degree() == 0);

  IntPolynomial acc;
  acc.add_term(3, 2);
  acc.add_term(3, -2);
  REQUIRE(acc.is_zero());
}

TEST_CASE("stirling triangles match the known rows") {
  auto s1 = stirling_first_signed(4);
  REQUIRE(s1[0] == std::vector<Int>{1});
  REQUIRE(s1[2] == std::vector<Int>{0, -1, 1});
  REQUIRE(s1[4] == std::vector<Int>{0, -6, 11, -6, 1});
  auto s2 = stirling_second(5);
  REQUIRE(s2[4] == std::vector<Int>{0, 1, 7, 6, 1});
  REQUIRE(s2[5] == std::vector<Int>{0, 1, 15, 25, 10, 1});
}

TEST_CASE("falling factorial basis round trips") {
  std::vector<Int> counts = {0, 2, -1, 5, 3};
  REQUIRE(to_falling_factorial(from_falling_factorial(counts)) == counts);

  // x^4 = sum_j S(4,j) x(x-1)..(x-j+1)
  auto x4 = IntPolynomial::monomial(4);
  REQUIRE(to_falling_factorial(x4) == std::vector<Int>{0, 1, 7, 6, 1});
  REQUIRE(from_falling_factorial({0, 1, 7, 6, 1}) == x4);
  REQUIRE(to_falling_factorial(IntPolynomial{}).empty());
}

TEST_CASE("json round trip uses decimal strings") {
  IntPolynomial p(std::vector<Int>{0, 3, -4, 0, 1});
  auto j = polynomial_to_json(p);
  REQUIRE(j.is_array());
  REQUIRE(j[2] == "-4");
  REQUIRE(polynomial_from_json(j) == p);

  Int big = Int(1) << 100;
  IntPolynomial huge(std::vector<Int>{big});
  REQUIRE(polynomial_from_json(polynomial_to_json(huge)) == huge);
}
