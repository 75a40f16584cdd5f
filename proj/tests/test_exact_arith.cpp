#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asdv/errors.hpp"
#include "asdv/gaussian.hpp"
#include "asdv/valuation.hpp"

using namespace asdv;

TEST_CASE("rational arithmetic is exact") {
  BigRational a(932, 81), b(-25, 3);
  CHECK(bool((a + b) - b == a));
  CHECK(bool(a * b / b == a));
  CHECK(bool(make_rational(BigInt(4), BigInt(6)) == BigRational(2, 3)));
  CHECK(bool(make_rational(BigInt(3), BigInt(-6)) == BigRational(-1, 2)));
}

TEST_CASE("ord_p on rationals") {
  CHECK(ord_p(BigRational(932, 81), 3) == Valuation::of(-4));
  CHECK(ord_p(BigRational(0), 7).is_infinity());
  CHECK(ord_p(BigRational(-25, 3), 5) == Valuation::of(2));
  CHECK_THROWS_AS(ord_p(BigRational(1), 6), ArgumentError);
}

TEST_CASE("places above odd primes") {
  auto five = places_above(5);
  REQUIRE(five.size() == 2);
  CHECK(five[0].split);
  CHECK(five[0].gen_re == 2);
  CHECK(five[0].gen_im == 1);
  CHECK(five[1].gen_im == -1);
  CHECK(five[0].label() == "2+i");
  CHECK(five[1].label() == "2-i");

  auto seven = places_above(7);
  REQUIRE(seven.size() == 1);
  CHECK_FALSE(seven[0].split);
  CHECK(seven[0].label() == "7");

  auto thirteen = places_above(13);
  REQUIRE(thirteen.size() == 2);
  CHECK(thirteen[0].gen_re == 3);
  CHECK(thirteen[0].gen_im == 2);

  CHECK_THROWS_AS(places_above(2), ArgumentError);
  CHECK_THROWS_AS(places_above(9), ArgumentError);
}

TEST_CASE("gaussian valuations at split and inert places") {
  auto five = places_above(5);
  GaussianRational z(BigRational(0), BigRational(-25, 3));
  CHECK(gaussian_valuation(z, five[0]) == Valuation::of(2));
  CHECK(gaussian_valuation(z, five[1]) == Valuation::of(2));

  auto seven = places_above(7);
  GaussianRational w(BigRational(49), BigRational(7));
  CHECK(gaussian_valuation(w, seven[0]) == Valuation::of(1));

  GaussianRational u(BigRational(0), BigRational(3));
  CHECK(gaussian_valuation(u, five[0]) == Valuation::of(0));

  CHECK(gaussian_valuation(GaussianRational(0), five[0]).is_infinity());
}

namespace {

GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-360, 360);
  std::uniform_int_distribution<long> den(1, 360);
  auto part = [&] { return make_rational(BigInt(num(rng)), BigInt(den(rng))); };
  return {part(), part()};
}

}  // namespace

TEST_CASE("valuation axioms hold on random gaussian rationals") {
  std::mt19937 rng(20240517);
  std::vector<PlaceAboveP> places;
  for (i64 p : {5, 7, 13}) {
    auto ps = places_above(p);
    places.insert(places.end(), ps.begin(), ps.end());
  }
  int checked = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    GaussianRational x = random_gaussian(rng);
    GaussianRational y = random_gaussian(rng);
    for (const auto& place : places) {
      Valuation vx = gaussian_valuation(x, place);
      Valuation vy = gaussian_valuation(y, place);
      CHECK(gaussian_valuation(x * y, place) == vx + vy);
      Valuation vsum = gaussian_valuation(x + y, place);
      Valuation floor = min(vx, vy);
      if (!floor.is_infinity()) CHECK(vsum.at_least(floor.value()));
    }
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("split and inert valuations against the norm") {
  std::mt19937 rng(987123);
  auto five = places_above(5);
  auto seven = places_above(7);
  for (int iter = 0; iter < 200; ++iter) {
    GaussianRational z = random_gaussian(rng);
    if (z.is_zero()) continue;
    BigRational n = z.norm();
    // split: the two conjugate valuations add up to ord_p of the norm
    Valuation sum = gaussian_valuation(z, five[0]) + gaussian_valuation(z, five[1]);
    CHECK(sum == ord_p(n, 5));
    // inert: v = ord_p(norm)/2, which must be even
    i64 vn = ord_p(n, 7).value();
    CHECK(vn % 2 == 0);
    CHECK(gaussian_valuation(z, seven[0]) == Valuation::of(vn / 2));
  }
}
