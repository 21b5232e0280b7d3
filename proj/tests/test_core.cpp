#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "kmu/error.hpp"
#include "kmu/polynomial.hpp"
#include "kmu/problem_file.hpp"
#include "oracles.hpp"

using namespace kmu;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(s, R); }

}  // namespace

TEST_CASE("weighted degree") {
  auto R11 = make_ring({"x", "y"}, {1, 1});
  auto R12 = make_ring({"x", "y"}, {1, 2});
  CHECK(R11->wdeg(Monomial{2, 1}) == 3);
  CHECK(R12->wdeg(Monomial{2, 1}) == 4);
  CHECK(R12->wdeg(Monomial{0, 0}) == 0);
  CHECK_THROWS_AS(R11->wdeg(Monomial{1, 1, 1}), MathError);
}

TEST_CASE("monomial order") {
  auto R = make_ring({"x", "y", "z"}, {1, 1, 1});
  Monomial m{1, 2, 0};
  CHECK(R->compare(m, m) == Cmp::EQ);
  for (std::size_t i = 0; i < 3; ++i) CHECK(R->compare(m, m * R->variable(i)) == Cmp::LT);
  CHECK(R->compare(Monomial{1, 1, 0}, Monomial{0, 0, 2}) == Cmp::GT);

  // Grevlex in degree 2 ranks by the last variable's exponent, smaller first.
  auto all = monomials_of_degree(*R, 2);
  std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) { return R->compare(a, b) == Cmp::GT; });
  std::vector<Monomial> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  CHECK(all == expected);

  CHECK_THROWS_AS(R->compare(Monomial{1, 0}, Monomial{1, 0, 0}), MathError);
}

TEST_CASE("block elimination order compares the front block first") {
  auto R = make_ring({"S", "x", "y"}, {1, 1, 1}, Field::rationals(), MonomialOrder::elimination(1));
  CHECK(R->compare(Monomial{1, 0, 0}, Monomial{0, 3, 0}) == Cmp::GT);
  CHECK(R->compare(Monomial{0, 2, 0}, Monomial{0, 1, 1}) == Cmp::GT);
}

TEST_CASE("polynomial arithmetic") {
  auto R = make_ring({"x", "y"}, {1, 1});
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  auto f = P(R, "3*x^2 - 1/2*x*y + 7");
  CHECK((f + (-f)).is_zero());
  CHECK(f * Polynomial::constant(R, 1) == f);
  CHECK((x - y) * (x + y) == x * x - y * y);
  CHECK(Scalar(R->field(), 2) * f == f + f);

  auto S = make_ring({"x", "y", "z"}, {1, 1, 1});
  CHECK_THROWS_AS(x + Polynomial::variable(S, 0), MathError);
}

TEST_CASE("homogeneous degree") {
  auto R = make_ring({"x", "y"}, {1, 1});
  CHECK(P(R, "x^2 - y^2").homogeneous_degree() == 2);
  CHECK_FALSE(P(R, "x + y^2").homogeneous_degree().has_value());
  CHECK_THROWS_AS(Polynomial(R).homogeneous_degree(), MathError);

  auto Z = make_ring({"x0", "x1", "x2", "x3", "z"}, {1, 1, 1, 1, 3});
  auto z6 = P(Z, "z^2 + (x1^3 + x0*x1*x2 + x2^3 + x3^3)*z + x0*(x1^5 + x2^5 + x3^5)");
  CHECK(z6.homogeneous_degree() == 6);
}

TEST_CASE("extend ring") {
  auto R = make_ring({"x", "y"}, {1, 1});
  auto RS = extend_ring(R, "S", 1);
  CHECK(RS->names() == std::vector<std::string>{"x", "y", "S"});
  CHECK_THROWS_AS(extend_ring(R, "x", 1), MathError);

  auto Z = make_ring({"x0", "x1", "x2", "x3", "z"}, {1, 1, 1, 1, 3});
  auto ZY = extend_ring(Z, "y", 2);
  CHECK(ZY->weights() == std::vector<int>{1, 1, 1, 1, 3, 2});
  auto f = P(Z, "z*x0 + x1^4");
  auto g = embed(f, ZY);
  CHECK(g.homogeneous_degree() == f.homogeneous_degree());
  CHECK(to_string(g) == to_string(f));
}

TEST_CASE("normalization") {
  auto R = make_ring({"x", "y"}, {1, 1});
  CHECK(P(R, "-2/3*x + 4/9*y").normalized() == P(R, "3*x - 2*y"));
  auto Rp = with_field(R, Field::prime(7));
  CHECK(P(Rp, "3*x + y").normalized() == P(Rp, "x + 5*y"));
}

TEST_CASE("order axioms on random triples") {
  oracle::Random rnd(11);
  auto R = make_ring({"a", "b", "c", "d"}, {1, 2, 1, 3});
  auto mono = [&] {
    return Monomial{rnd.integer(0, 3), rnd.integer(0, 3), rnd.integer(0, 3), rnd.integer(0, 3)};
  };
  const Monomial one{0, 0, 0, 0};
  for (int k = 0; k < 200; ++k) {
    Monomial a = mono(), b = mono(), c = mono();
    CHECK(static_cast<int>(R->compare(a, b)) == -static_cast<int>(R->compare(b, a)));
    if (R->compare(a, b) == Cmp::GT && R->compare(b, c) == Cmp::GT) CHECK(R->compare(a, c) == Cmp::GT);
    if (R->compare(a, b) == Cmp::GT) CHECK(R->compare(a * c, b * c) == Cmp::GT);
    if (!a.is_one()) CHECK(R->compare(a, one) == Cmp::GT);
    CHECK(R->wdeg(a * b) == R->wdeg(a) + R->wdeg(b));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  oracle::Random rnd(12);
  auto R = make_ring({"x", "y", "z"}, {1, 1, 2});
  for (int k = 0; k < 100; ++k) {
    auto f = rnd.any(R, 3, 4), g = rnd.any(R, 3, 4), h = rnd.any(R, 2, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(parse_polynomial(to_string(f), R) == f);
  }
}
