#include <doctest.h>

#include <random>

#include "dycklat/series.hpp"
#include "oracles.hpp"

using namespace dycklat;

namespace {

constexpr int kOrder = 25;

std::map<int, std::int64_t> poly(std::initializer_list<std::pair<const int, std::int64_t>> terms) { return terms; }

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<YPolynomial> c(static_cast<std::size_t>(order));
  for (int n = 0; n < std::min(order, 6); ++n) {
    YPolynomial p;
    for (int k = 0; k < 3; ++k) p += YPolynomial::monomial(k, Rational(coef(rng), 1 + (rng() % 3)));
    c[static_cast<std::size_t>(n)] = p;
  }
  if (unit) c[0] = YPolynomial(Rational(1 + static_cast<int>(rng() % 4)));
  return TruncatedSeries(order, c);
}

TruncatedSeries one(int order) { return TruncatedSeries::constant(Rational(1), order); }
TruncatedSeries x(int order) { return TruncatedSeries::x(order); }

}  // namespace

TEST_CASE("ring operations") {
  const TruncatedSeries s = one(8) + x(8) * TruncatedSeries::y(8);
  CHECK(s + TruncatedSeries(8) == s);
  CHECK((one(5) + x(5)) * (one(5) - x(5)) == one(5) - x(5).pow(2));
  CHECK((one(6) / (one(6) - x(6))).coeff(5) == YPolynomial(Rational(1)));
  const TruncatedSeries fib = one(10) / (one(10) - x(10) - x(10).pow(2));
  const std::int64_t expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int n = 0; n < 10; ++n) CHECK(integer_total(fib, n) == expected[n]);
  CHECK_THROWS_AS(one(5) / x(5), Error);
  CHECK_THROWS_AS(one(5) / (one(5) + TruncatedSeries::y(5)), Error);
  CHECK_THROWS_AS(fib.coeff(10), Error);
  CHECK((one(5) + one(9)).order() == 5);
}

TEST_CASE("ring axioms on random operands") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncatedSeries a = random_series(rng, 10, false);
    const TruncatedSeries b = random_series(rng, 10, false);
    const TruncatedSeries c = random_series(rng, 10, false);
    const TruncatedSeries u = random_series(rng, 10, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(a + (-a) == TruncatedSeries(10));
    CHECK((a / u) * u == a);
  }
}

TEST_CASE("square roots") {
  CHECK(sqrt(one(kOrder)) == one(kOrder));
  const TruncatedSeries r = one(30) - TruncatedSeries::constant(Rational(4), 30) * x(30);
  CHECK(sqrt(r) * sqrt(r) == r);
  CHECK(sqrt((one(kOrder) + x(kOrder)).pow(2)) == one(kOrder) + x(kOrder));
  CHECK_THROWS_AS(sqrt(x(5)), Error);
  CHECK_THROWS_AS(sqrt(TruncatedSeries::constant(Rational(4), 5)), Error);
}

TEST_CASE("y operations") {
  const TruncatedSeries flat = one(6) + x(6);
  CHECK(deriv_y(flat) == TruncatedSeries(6));
  const TruncatedSeries f2 = gf_F(FamilyParam::finite(2), kOrder);
  const std::int64_t fib[] = {1, 1, 2, 3, 5, 8, 13};
  for (int n = 0; n < 7; ++n) CHECK(integer_total(eval_y(f2, Rational(1)), n) == fib[n]);
  CHECK(integer_coefficients(subst_y_shift(f2), 5) == poly({{0, 8}, {1, 8}, {2, 1}}));
}

TEST_CASE("closed forms against printed expansions") {
  CHECK(integer_coefficients(gf_F(FamilyParam::finite(2)), 5) == poly({{0, 1}, {1, 6}, {2, 1}}));
  CHECK(integer_coefficients(gf_F(FamilyParam::finite(2)), 6) == poly({{0, 1}, {1, 9}, {2, 3}}));
  CHECK(integer_coefficients(gf_F(FamilyParam::finite(3)), 4) == poly({{0, 1}, {1, 5}, {2, 1}}));
  CHECK(integer_coefficients(gf_F(FamilyParam::infinity()), 4) == poly({{0, 1}, {1, 6}, {2, 1}}));
  CHECK(integer_coefficients(gf_B(FamilyParam::finite(2)), 6) == poly({{0, 13}, {1, 15}, {2, 3}}));
  CHECK(integer_coefficients(gf_L(FamilyParam::finite(2)), 4) == poly({{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 1}}));

  const std::int64_t tribonacci[] = {1, 1, 3, 5, 9, 17, 31};
  for (int n = 0; n < 7; ++n) CHECK(integer_total(gf_B(FamilyParam::finite(2)), n) == tribonacci[n]);
  for (int n = 0; n <= 12; ++n) {
    std::int64_t expected = 0;
    for (int k = 0; 2 * k <= n; ++k) expected += static_cast<std::int64_t>(oracle::binomial(n, n - 2 * k)) << k;
    CHECK(integer_total(gf_B(FamilyParam::infinity()), n) == expected);
  }

  const std::int64_t a029907[] = {1, 2, 4, 8, 15, 28, 51, 92};
  const TruncatedSeries cov2 = gf_coverings(FamilyParam::finite(2));
  CHECK(integer_total(cov2, 0) == 0);
  CHECK(integer_total(cov2, 1) == 0);
  for (int n = 2; n <= 9; ++n) CHECK(integer_total(cov2, n) == a029907[n - 2]);
  for (int n = 3; n <= 14; ++n) CHECK(integer_total(gf_coverings(FamilyParam::infinity()), n) == n << (n - 3));

  const std::int64_t a002620[] = {1, 2, 4, 6, 9, 12, 16, 20, 25};
  for (int n = 2; n <= 10; ++n) CHECK(integer_total(gf_meet_irreducible(FamilyParam::finite(2)), n) == a002620[n - 2]);
  CHECK(closed_b(5, FamilyParam::finite(2)) == 6);
  for (int n = 0; n <= 20; ++n) {
    for (int p = 2; p <= 6; ++p) CHECK(closed_b(n, FamilyParam::finite(p)) == oracle::turan_by_pairs(n, p));
    CHECK(closed_b(n, FamilyParam::infinity()) == n * (n - 1) / 2);
  }
  for (int p = 2; p <= 4; ++p) {
    const TruncatedSeries f1 = gf_meet_irreducible(FamilyParam::finite(p));
    for (int n = 0; n < 30; ++n) CHECK(integer_total(f1, n) == oracle::turan_by_pairs(n, p));
  }
}

TEST_CASE("linear interval totals") {
  const TruncatedSeries l2 = gf_L(FamilyParam::finite(2));
  const TruncatedSeries linf = gf_L(FamilyParam::infinity());
  for (int n = 3; n <= 20; ++n) {
    const auto f = [](int k) { return static_cast<std::int64_t>(oracle::fibonacci(k, 2)); };
    CHECK(integer_total(l2, n) == (4 * (n + 5) * f(n) - (2 * n + 27) * f(n - 1)) / 5);
    CHECK(integer_total(linf, n) == (3 * n + 1) * (std::int64_t{1} << (n - 3)));
  }
}

TEST_CASE("interval series") {
  const TruncatedSeries i = gf_I();
  CHECK(integer_total(i, 0) == 1);
  for (int n = 1; n <= 15; ++n) CHECK(integer_total(i, n) == static_cast<std::int64_t>(oracle::binomial(2 * n - 1, n)));
  const std::int64_t j1[] = {1, 1, 3, 6, 15, 35, 86, 210, 520, 1292};
  for (int n = 0; n < 10; ++n) {
    CHECK(integer_total(gf_J_at_one(), n) == j1[n]);
    CHECK(integer_total(gf_J(), n) == j1[n]);
  }
  CHECK(divide_shifted(x(6) * (one(6) + x(6)), x(6)) .coeff(1) == YPolynomial(Rational(1)));
  CHECK_THROWS_AS(divide_shifted(one(6), x(6)), Error);
}

TEST_CASE("identity suite") {
  for (FamilyParam p : {FamilyParam::finite(2), FamilyParam::finite(3), FamilyParam::finite(5), FamilyParam::infinity()}) {
    CAPTURE(p.to_string());
    const TruncatedSeries f = gf_F(p, kOrder);
    CHECK(gf_B(p, kOrder) == subst_y_shift(f));
    CHECK(gf_coverings(p, kOrder) == eval_y(deriv_y(f), Rational(1)));
    if (!p.is_infinite()) {
      TruncatedSeries g = one(kOrder);
      for (int k = 1; k <= p.value(); ++k) g -= x(kOrder).pow(k);
      CHECK(eval_y(f, Rational(1)) == one(kOrder) / g);
      const TruncatedSeries finf = gf_F(FamilyParam::infinity(), kOrder);
      for (int n = 0; n < p.value(); ++n) CHECK(f.coeff(n) == finf.coeff(n));
    }
    for (const TruncatedSeries& s : {f, gf_B(p, kOrder), gf_L(p, kOrder), gf_coverings(p, kOrder)}) {
      for (int n = 0; n < kOrder; ++n) CHECK_NOTHROW(integer_coefficients(s, n));
    }
  }
  CHECK_THROWS_AS(integer_coefficients(TruncatedSeries::constant(Rational(1, 2), 3), 0), Error);
}
