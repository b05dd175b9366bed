#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conred/exact.hpp"

using namespace conred;

namespace {

Mat random_mat(std::mt19937_64& rng, int rows, int cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  CHECK(rref(Mat::from_rows({{2, 0}, {0, 2}})) == Mat::identity(2));
  CHECK(rref(Mat::from_rows({{1, 2}, {2, 4}})) == Mat::from_rows({{1, 2}, {0, 0}}));
  Mat empty(0, 0);
  CHECK(rref(empty) == empty);
}

TEST_CASE("kernel") {
  CHECK(kernel(Mat::identity(2)).dim() == 0);
  CHECK(kernel(Mat::zero(2, 3)) == Subspace::full(3));
  Subspace k = kernel(Mat::from_rows({{1, 1, 0}}));
  CHECK(k.dim() == 2);
  CHECK(k.contains({Rational(1), Rational(-1), Rational(0)}));
  CHECK(k.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("subspace ops on fixed examples") {
  Subspace e12 = Subspace::span(3, Mat::from_rows({{1, 0, 0}, {0, 1, 0}}));
  Subspace e23 = Subspace::span(3, Mat::from_rows({{0, 1, 0}, {0, 0, 1}}));
  Subspace e2 = Subspace::span(3, Mat::from_rows({{0, 1, 0}}));
  CHECK(subspace_intersect(e12, e23) == e2);

  Subspace e1 = Subspace::span(3, Mat::from_rows({{1, 0, 0}}));
  Subspace ann = annihilator(e1);
  CHECK(ann == Subspace::span(3, Mat::from_rows({{0, 1, 0}, {0, 0, 1}})));

  Subspace full2 = Subspace::full(2);
  Subspace s1 = Subspace::span(2, Mat::from_rows({{1, 0}}));
  CHECK(quotient_complement(full2, s1) == Subspace::span(2, Mat::from_rows({{0, 1}})));
  CHECK_THROWS_WITH_AS(quotient_complement(s1, full2), doctest::Contains("NotContained"), Error);
}

TEST_CASE("dimension laws on random subspaces") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Subspace a = row_space(random_mat(rng, 1 + rng() % 3, n));
    Subspace b = row_space(random_mat(rng, 1 + rng() % 3, n));
    CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
    CHECK(annihilator(annihilator(a)) == a);
    Mat m = random_mat(rng, 1 + rng() % 4, n);
    CHECK(rank(m) + kernel(m).dim() == n);
    Subspace big = subspace_sum(a, b);
    Subspace comp = quotient_complement(big, a);
    CHECK(subspace_sum(a, comp) == big);
    CHECK(subspace_intersect(a, comp).dim() == 0);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}
