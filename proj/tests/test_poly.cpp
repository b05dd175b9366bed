#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conred/poly.hpp"

using namespace conred;

namespace {

Poly random_poly(std::mt19937_64& rng, int nv, int max_deg, int max_terms = 4) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_deg);
  Poly p(nv);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nv, 0);
    int budget = deg(rng);
    for (int d = 0; d < budget && nv > 0; ++d) e[rng() % nv] += 1;
    p = p + Poly::monomial(nv, e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  CHECK((x1 * x2).partial(0) == x2);
  CHECK((x1 + x2 * x2).substitute_zero({1}) == x1);
  Poly p = x1 * x1 - x2;
  CHECK(p.eval({Rational(2), Rational(1)}) == Rational(3));
}

TEST_CASE("parser round trips the scene syntax") {
  CHECK(parse_poly("x1^2 - x2", 2) == Poly::variable(2, 0).pow(2) - Poly::variable(2, 1));
  CHECK(parse_poly("1/2*x1 + 3", 2) ==
        Poly::variable(2, 0) * Rational(1, 2) + Poly::constant(2, Rational(3)));
  CHECK(parse_poly("(x1+x2)^2", 2) == (Poly::variable(2, 0) + Poly::variable(2, 1)).pow(2));
  CHECK(parse_poly("-x1*(2 - x2)", 2) ==
        -(Poly::variable(2, 0) * (Poly::constant(2, Rational(2)) - Poly::variable(2, 1))));
  CHECK(parse_poly("0", 3).is_zero());
  CHECK_THROWS_WITH_AS(parse_poly("x3", 2), doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(parse_poly("1.5", 1), doctest::Contains("float"), Error);
  CHECK_THROWS_AS(parse_poly("x1 +", 1), Error);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Poly p = random_poly(rng, 3, 4);
    CHECK(parse_poly(p.str(), 3) == p);
  }
}

TEST_CASE("calculus identities") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Poly p = random_poly(rng, 3, 3), q = random_poly(rng, 3, 3);
    int i = rng() % 3, j = rng() % 3;
    CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    CHECK((p * q).partial(i) == p.partial(i) * q + p * q.partial(i));
    CHECK((p + q).substitute_zero({j}) == p.substitute_zero({j}) + q.substitute_zero({j}));
    CHECK((p * q).substitute_zero({j}) == p.substitute_zero({j}) * q.substitute_zero({j}));
  }
}

TEST_CASE("compose and rename") {
  Poly p = parse_poly("x1^2 + x2", 2);
  Poly a = parse_poly("x1 + x2", 2), b = parse_poly("x1*x2", 2);
  CHECK(p.compose({a, b}) == a * a + b);
  Poly q = parse_poly("x2^2", 3);
  CHECK(q.rename_vars(1, {-1, 0, -1}) == parse_poly("x1^2", 1));
  CHECK_THROWS_AS(parse_poly("x1", 3).rename_vars(1, {-1, 0, -1}), Error);
}
