#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asdv/errors.hpp"
#include "asdv/puiseux.hpp"

using namespace asdv;

namespace {

PuiseuxSeries random_series(std::mt19937& rng, i64 ram, i64 trunc, bool unit_lead) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<GaussianRational> c(trunc + 1);
  for (auto& x : c) {
    x = GaussianRational(make_rational(BigInt(num(rng)), BigInt(den(rng))),
                         make_rational(BigInt(num(rng)), BigInt(den(rng))));
  }
  if (unit_lead) c[0] = GaussianRational(1);
  return PuiseuxSeries::from_coeffs(ram, 0, std::move(c));
}

}  // namespace

TEST_CASE("monomial products") {
  auto q15 = PuiseuxSeries::monomial(GaussianRational(1), 1, 5, 10);
  auto prod = q15 * q15;
  CHECK(prod.coeff(2) == GaussianRational(1));
  CHECK(prod.coeff(3).is_zero());
  CHECK(prod.ramification() == 5);
}

TEST_CASE("binomial square") {
  // (1 - 2 q^{1/5})^2 = 1 - 4 q^{1/5} + 4 q^{2/5}
  auto s = PuiseuxSeries::from_coeffs(
      5, 0, {GaussianRational(1), GaussianRational(-2), GaussianRational(0), GaussianRational(0)});
  auto sq = s * s;
  CHECK(sq.coeff(0) == GaussianRational(1));
  CHECK(sq.coeff(1) == GaussianRational(-4));
  CHECK(sq.coeff(2) == GaussianRational(4));
}

TEST_CASE("ramification rescaling aligns mixed grids") {
  auto a = PuiseuxSeries::monomial(GaussianRational(1), 1, 5, 6);   // q^{1/5}
  auto b = PuiseuxSeries::monomial(GaussianRational(1), 1, 3, 6);   // q^{1/3}
  auto sum = a + b;
  CHECK(sum.ramification() == 15);
  CHECK(sum.coeff(3) == GaussianRational(1));  // q^{3/15}
  CHECK(sum.coeff(5) == GaussianRational(1));  // q^{5/15}
  CHECK(sum.coeff(4).is_zero());
}

TEST_CASE("division basics") {
  auto a = PuiseuxSeries::monomial(GaussianRational(1), 2, 15, 12);
  auto b = PuiseuxSeries::monomial(GaussianRational(1), 1, 15, 12);
  auto quot = a / b;
  CHECK(quot.coeff(1) == GaussianRational(1));

  std::mt19937 rng(42);
  auto s = random_series(rng, 7, 25, true);
  auto one = s / s;
  CHECK(one.coeff(0) == GaussianRational(1));
  for (i64 n = 1; n <= one.truncation(); ++n) CHECK(one.coeff(n).is_zero());

  CHECK_THROWS_AS(s / PuiseuxSeries::zero(7, 25), ArgumentError);
}

TEST_CASE("division result carries a negative leading exponent offset") {
  // q^{1/15} / q^{2/15} = q^{-1/15}
  auto a = PuiseuxSeries::monomial(GaussianRational(1), 1, 15, 12);
  auto b = PuiseuxSeries::monomial(GaussianRational(1), 2, 15, 12);
  auto quot = a / b;
  CHECK(quot.lead() == -1);
  CHECK(quot.coeff(-1) == GaussianRational(1));
}

TEST_CASE("nth_root on monomials and known expansions") {
  auto cube = PuiseuxSeries::monomial(GaussianRational(1), 3, 15, 12);
  auto root = cube.nth_root(3);
  CHECK(root.ramification() == 15);
  CHECK(root.coeff(1) == GaussianRational(1));

  // cbrt(1 + 3q) = 1 + q - q^2 + (5/3) q^3 - ...
  auto s = PuiseuxSeries::from_coeffs(
      1, 0,
      {GaussianRational(1), GaussianRational(3), GaussianRational(0), GaussianRational(0),
       GaussianRational(0)});
  auto r = s.nth_root(3);
  CHECK(r.coeff(0) == GaussianRational(1));
  CHECK(r.coeff(1) == GaussianRational(1));
  CHECK(r.coeff(2) == GaussianRational(-1));
  CHECK(r.coeff(3) == GaussianRational(BigRational(5, 3)));
  // round trip
  CHECK(agree_through(r * r * r, s, s.truncation()));
}

TEST_CASE("nth_root extends ramification when the leading exponent requires it") {
  // cbrt(q^{1/5} (1 + q^{1/5})): exponent 1/15 forces ramification 15.
  auto s = PuiseuxSeries::from_coeffs(
      5, 1, {GaussianRational(1), GaussianRational(1), GaussianRational(0), GaussianRational(0)});
  auto r = s.nth_root(3);
  CHECK(r.ramification() == 15);
  CHECK(r.coeff(1) == GaussianRational(1));
  CHECK(agree_through(r.pow(3), s, s.truncation() * 3));
}

TEST_CASE("nth_root branch requires an exact rational root") {
  auto bad = PuiseuxSeries::from_coeffs(1, 0, {GaussianRational(2), GaussianRational(1)});
  CHECK_THROWS_AS(bad.nth_root(3), ArgumentError);
  auto imag = PuiseuxSeries::from_coeffs(1, 0, {GaussianRational(0, 1), GaussianRational(1)});
  CHECK_THROWS_AS(imag.nth_root(2), ArgumentError);
}

TEST_CASE("root round trips on random series") {
  std::mt19937 rng(20240518);
  for (int iter = 0; iter < 200; ++iter) {
    unsigned n = (iter % 2 == 0) ? 2 : 3;
    auto s = random_series(rng, 4, 30, true);
    auto r = s.nth_root(n);
    CHECK(agree_through(r.pow(n), s, s.truncation()));
  }
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(777);
  for (int iter = 0; iter < 50; ++iter) {
    auto a = random_series(rng, 3, 18, false);
    auto b = random_series(rng, 3, 18, false);
    auto c = random_series(rng, 3, 18, false);
    CHECK(agree_through((a * b) * c, a * (b * c), 16));
    CHECK(agree_through(a * (b + c), a * b + a * c, 17));
    CHECK(agree_through(a + b, b + a, 18));
  }
}

TEST_CASE("cube roots of integer series have 3-power denominators") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> num(-20, 20);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<GaussianRational> c(25);
    c[0] = GaussianRational(1);
    for (size_t j = 1; j < c.size(); ++j) c[j] = GaussianRational(BigRational(num(rng)));
    auto s = PuiseuxSeries::from_coeffs(1, 0, std::move(c));
    auto r = s.nth_root(3);
    for (i64 n = 0; n <= r.truncation(); ++n) {
      CHECK(r.coeff(n).is_real());
      CHECK(denominator_power_of(r.coeff(n).re, BigInt(3)));
    }
  }
}

TEST_CASE("coefficients beyond the truncation raise a coverage error") {
  auto s = PuiseuxSeries::one(5, 10);
  CHECK_THROWS_AS(s.coeff(11), CoverageError);
  CHECK(s.coeff(-3).is_zero());
}
