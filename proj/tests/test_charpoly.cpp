#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asdv/asd.hpp"
#include "asdv/charpoly.hpp"
#include "asdv/counting.hpp"
#include "asdv/modforms.hpp"
#include "asdv/newform.hpp"

using namespace asdv;

namespace {

struct Row {
  i64 p, c1, c2;
  GaussianRational beta;  // resolved quadratic-factor trace
};

// Reference characteristic polynomial data, 5 <= p <= 31.
const std::vector<Row>& reference_rows() {
  static const std::vector<Row> rows = {
      {5, 0, -41, GaussianRational(0, 3)},    {7, 10, 123, GaussianRational(5)},
      {11, 0, -17, GaussianRational(0, 15)},  {13, -20, 438, GaussianRational(-10)},
      {17, 0, -254, GaussianRational(0, -18)},{19, -32, 978, GaussianRational(-16)},
      {23, 0, -914, GaussianRational(0, 12)}, {29, 0, -782, GaussianRational(0, -30)},
      {31, -2, 1923, GaussianRational(-1)},
  };
  return rows;
}

// (T^2 - b T + d)(T^2 - conj(b) T + conj(d)) expanded, low to high.
std::array<GaussianRational, 5> quadratic_product(const GaussianRational& b,
                                                  const GaussianRational& d) {
  GaussianRational bc = b.conj(), dc = d.conj();
  return {d * dc, -(b * dc + bc * d), d + dc + b * bc, -(b + bc), GaussianRational(1)};
}

}  // namespace

TEST_CASE("frobenius data reproduces the reference table") {
  auto fam = WeierstrassFamily::by_id("g1515");
  for (const auto& row : reference_rows()) {
    FrobeniusData data = build_frobenius_data(fam, row.p);
    CHECK(data.c1 == row.c1);
    CHECK(data.c2 == row.c2);
    CHECK(data.hp[4] == 1);
    CHECK(data.hp[3] == -row.c1);
    CHECK(data.hp[2] == row.c2);
    CHECK(data.hp[1] == -row.p * row.p * row.c1);
    CHECK(data.hp[0] == row.p * row.p * row.p * row.p);
  }
}

TEST_CASE("named examples") {
  auto fam = WeierstrassFamily::by_id("g1515");
  FrobeniusData p7 = build_frobenius_data(fam, 7);
  CHECK(p7.c1 == 10);
  CHECK(p7.c2 == 123);
  CHECK(p7.hp_str() == "T^4 - 10*T^3 + 123*T^2 - 490*T + 2401");

  FrobeniusData p5 = build_frobenius_data(fam, 5);
  CHECK(p5.c1 == 0);
  CHECK(p5.c2 == -41);

  FrobeniusData p31 = build_frobenius_data(fam, 31);
  CHECK(p31.hp_str() == "T^4 + 2*T^3 + 1923*T^2 + 1922*T + 923521");
}

TEST_CASE("hp is palindromic with weight p^2") {
  auto fam = WeierstrassFamily::by_id("g1515");
  for (const auto& row : reference_rows()) {
    FrobeniusData d = build_frobenius_data(fam, row.p);
    i64 p2 = row.p * row.p;
    CHECK(d.hp[1] == p2 * d.hp[3]);
    CHECK(d.hp[0] == p2 * p2 * d.hp[4]);
    CHECK(std::abs(d.c1) <= 4 * row.p);
  }
}

TEST_CASE("factorization over Q(i): candidates and consistency") {
  auto fam = WeierstrassFamily::by_id("g1515");

  FrobeniusData p13 = build_frobenius_data(fam, 13);
  factor_over_qi(p13);
  CHECK(p13.sign_resolved);
  CHECK(p13.beta == GaussianRational(-10));
  CHECK(p13.chi_m3 == 1);

  FrobeniusData p5 = build_frobenius_data(fam, 5);
  factor_over_qi(p5);
  CHECK_FALSE(p5.sign_resolved);
  REQUIRE(p5.beta_candidates.size() == 2);
  CHECK(p5.beta_candidates[0] == GaussianRational(0, 3));
  CHECK(p5.beta_candidates[1] == GaussianRational(0, -3));

  FrobeniusData p17 = build_frobenius_data(fam, 17);
  factor_over_qi(p17);
  REQUIRE(p17.beta_candidates.size() == 2);
  CHECK(bool(abs(p17.beta_candidates[0].im) == 18));
}

TEST_CASE("hp_prime times its conjugate recovers hp") {
  auto fam = WeierstrassFamily::by_id("g1515");
  for (const auto& row : reference_rows()) {
    FrobeniusData d = build_frobenius_data(fam, row.p);
    factor_over_qi(d);
    GaussianRational delta(BigRational(d.chi_m3) * row.p * row.p);
    for (const auto& candidate : d.beta_candidates) {
      auto prod = quadratic_product(candidate, delta);
      for (int k = 0; k <= 4; ++k) {
        CHECK(prod[k].is_real());
        CHECK(bool(prod[k].re == BigRational(static_cast<long>(d.hp[k]))));
      }
    }
  }
}

TEST_CASE("resolved betas match the reference quadratic factors") {
  auto fam = WeierstrassFamily::by_id("g1515");
  auto basis = cusp_forms_gamma(80);
  for (const auto& row : reference_rows()) {
    FrobeniusData d = build_frobenius_data(fam, row.p);
    factor_over_qi(d);
    if (!d.sign_resolved) resolve_sign(d, basis.f_plus, std::min<i64>(5, 80 / row.p));
    CHECK(d.beta == row.beta);
  }
}

TEST_CASE("hp_prime rendering matches the reference layout") {
  auto fam = WeierstrassFamily::by_id("g1515");
  FrobeniusData p7 = build_frobenius_data(fam, 7);
  factor_over_qi(p7);
  CHECK(p7.hp_prime_str(true) == "T^2 - 5*T + 49");
  FrobeniusData p13 = build_frobenius_data(fam, 13);
  factor_over_qi(p13);
  CHECK(p13.hp_prime_str(true) == "T^2 + 10*T + 169");
  FrobeniusData p5 = build_frobenius_data(fam, 5);
  factor_over_qi(p5);
  CHECK(p5.hp_prime_str(false) == "T^2 +- 3i*T - 25");
}

TEST_CASE("newform coefficients: printed values through q^31") {
  auto gp = NewformCoefficients::from_table("g+");
  auto gm = NewformCoefficients::from_table("g-");
  struct Entry {
    i64 n;
    GaussianRational v;
  };
  // all printed coefficients of g+
  const std::vector<Entry> printed = {
      {1, {1}},        {2, {0, -3}},  {4, {-5}},      {5, {0, 3}},   {7, {5}},
      {8, {0, 3}},     {10, {9}},     {11, {0, 15}},  {13, {-10}},   {14, {0, -15}},
      {16, {-11}},     {17, {0, -18}},{19, {-16}},    {20, {0, -15}},{22, {45}},
      {23, {0, 12}},   {25, {16}},    {26, {0, 30}},  {28, {-25}},   {29, {0, -30}},
      {31, {-1}},
  };
  for (const auto& e : printed) {
    CHECK(gp.coeff(e.n) == e.v);
    CHECK(gm.coeff(e.n) == e.v.conj());
  }
  // indices absent from the printed expansion vanish
  for (i64 n : {3, 6, 9, 12, 15, 18, 21, 24, 27, 30}) CHECK(gp.coeff(n).is_zero());
}

TEST_CASE("newform recursion consistency identities") {
  auto gp = NewformCoefficients::from_table("g+");
  // a4 = a2^2 - chi(2) * 4 = (-3i)^2 + 4 = -5
  CHECK(gp.coeff(4) == GaussianRational(-5));
  // a10 = a2 a5 = (-3i)(3i) = 9
  CHECK(gp.coeff(10) == GaussianRational(9));

  auto g2 = NewformCoefficients::from_table("g2");
  // a25 = a5^2 - chi(5) * 25 = 36 - 25 = 11
  CHECK(g2.coeff(25) == GaussianRational(11));
  const std::vector<std::pair<i64, long>> printed = {
      {1, 1}, {5, -6}, {9, 9}, {13, 10}, {17, -30}, {25, 11}, {29, 42}};
  for (const auto& [n, v] : printed) CHECK(g2.coeff(n) == GaussianRational(v));
  for (i64 n = 1; n <= 31; ++n) {
    bool expected_zero = true;
    for (const auto& [m, v] : printed)
      if (m == n) expected_zero = false;
    if (expected_zero) CHECK(g2.coeff(n).is_zero());
  }
}

TEST_CASE("counting-derived coefficients agree with the seeded newforms") {
  auto fam = WeierstrassFamily::by_id("g1515");
  auto basis = cusp_forms_gamma(80);
  auto gp = NewformCoefficients::from_table("g+");
  auto gm = NewformCoefficients::from_table("g-");
  for (const auto& row : reference_rows()) {
    FrobeniusData d = build_frobenius_data(fam, row.p);
    factor_over_qi(d);
    if (!d.sign_resolved) {
      CHECK_THROWS_AS(newform_from_counting(d, "g+"), ArgumentError);
      resolve_sign(d, basis.f_plus, std::min<i64>(5, 80 / row.p));
    }
    CHECK(newform_from_counting(d, "g+") == gp.prime_value(row.p));
    CHECK(newform_from_counting(d, "g-") == gm.prime_value(row.p));
  }
}

TEST_CASE("tr_p and tr_p2 share parity (c2 integrality)") {
  auto fam = WeierstrassFamily::by_id("g1515");
  for (const auto& row : reference_rows()) {
    FrobeniusData d = build_frobenius_data(fam, row.p);
    CHECK((d.tr_p - d.tr_p2) % 2 == 0);
  }
}
