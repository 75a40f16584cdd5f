#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asdv/matrix2z.hpp"
#include "asdv/weierstrass.hpp"

using namespace asdv;

namespace {

Mat2 conj_by_A(const Mat2& m) { return gen_A() * m * gen_A().inverse(); }
Mat2 conj(const Mat2& g, const Mat2& m) { return g * m * g.inverse(); }

}  // namespace

TEST_CASE("generator sanity") {
  CHECK(gen_gamma().det() == 1);
  CHECK(gen_delta().det() == 1);
  CHECK(gen_A().det() == 1);
  CHECK(gen_A().power(2) == Mat2{-1, 0, 0, -1});
  // the tabulated conjugates
  CHECK(conj_by_A(gen_gamma()) == Mat2{11, 20, -5, -9});
  CHECK(conj_by_A(gen_delta()) == Mat2{11, 25, -4, -9});
}

TEST_CASE("congruence membership") {
  CHECK(in_gamma1_5(gen_gamma()));
  CHECK_FALSE(in_gamma1_5(gen_A()));
  CHECK(in_gamma0_5(gen_A()));
  CHECK_FALSE(in_pm_gamma1_5(gen_A()));
  CHECK(in_pm_gamma1_5(Mat2{-1, -5, 0, -1}));
  CHECK_THROWS_AS(in_gamma1_5(Mat2{1, 1, 1, 1}), ArgumentError);
}

TEST_CASE("defining relations hold exactly") {
  Mat2 g = gen_gamma(), d = gen_delta();
  Mat2 AdA = conj_by_A(d), AgA = conj_by_A(g);

  // (A d A^-1)(A g A^-1) d g = I
  std::vector<std::pair<Mat2, int>> rel1 = {{AdA, 1}, {AgA, 1}, {d, 1}, {g, 1}};
  CHECK(verify_relation(rel1));

  // eight-term relation of the index-3 subgroup
  Mat2 Ag3A = conj_by_A(g.power(3));
  std::vector<std::pair<Mat2, int>> rel2 = {
      {AdA, 1},
      {Ag3A, 1},
      {d, 1},
      {conj(g, AdA), 1},
      {conj(g, d), 1},
      {conj(g.power(2), AdA), 1},
      {conj(g.power(2), d), 1},
      {g.power(3), 1},
  };
  CHECK(verify_relation(rel2));

  // six-term relation of the index-2 subgroup
  Mat2 Ag2A = conj_by_A(g.power(2));
  std::vector<std::pair<Mat2, int>> rel3 = {
      {AdA, 1}, {Ag2A, 1}, {d, 1}, {conj(g, AdA), 1}, {conj(g, d), 1}, {g.power(2), 1},
  };
  CHECK(verify_relation(rel3));
}

TEST_CASE("coset decompositions") {
  Mat2 g1{1, 0, 0, 1}, g6{0, -1, 1, 0};
  std::vector<Mat2> reps;
  for (int i = 1; i <= 5; ++i) reps.push_back(Mat2{1, i - 1, 0, 1});
  reps.push_back(g6);
  CHECK(verify_cosets(reps, [](const Mat2& m) { return in_gamma0_5(m); }));

  // twelve cosets of +-Gamma^1(5): gamma_i and A gamma_i
  std::vector<Mat2> twelve = reps;
  for (const Mat2& r : reps) twelve.push_back(gen_A() * r);
  CHECK(verify_cosets(twelve, [](const Mat2& m) { return in_pm_gamma1_5(m); }));

  // {I, gamma, gamma^2} are inequivalent modulo the index-3 subgroup:
  // gamma^j is in the subgroup iff 3 | j, detected through the width at
  // infinity (gamma^3 generates the stabilizer there).
  CHECK(gen_gamma().power(3).b % 15 == 0);
  CHECK(gen_gamma().power(1).b % 15 != 0);
  CHECK(gen_gamma().power(2).b % 15 != 0);
  (void)g1;
}

TEST_CASE("stabilizers and widths from the cusp table") {
  Mat2 g = gen_gamma(), d = gen_delta();
  struct CuspRow {
    Cusp cusp;
    Mat2 m;
    i64 width;
  };
  const std::vector<CuspRow> table = {
      {Cusp::at_infinity(), g.power(3), 15},
      {Cusp::rational(-2, 1), conj_by_A(g.power(3)), 15},
      {Cusp::rational(0, 1), d, 1},
      {Cusp::rational(5, 1), conj(g, d), 1},
      {Cusp::rational(10, 1), conj(g.power(2), d), 1},
      {Cusp::rational(-5, 2), conj_by_A(d), 1},
      {Cusp::rational(5, 2), conj(g, conj_by_A(d)), 1},
      {Cusp::rational(15, 2), conj(g.power(2), conj_by_A(d)), 1},
  };
  i64 width_sum = 0;
  for (const auto& row : table) {
    CHECK(stabilizer_check(row.cusp, row.m));
    CHECK(parabolic_width(row.cusp, row.m) == row.width);
    width_sum += row.width;
  }
  // cross-module: the width sum equals the Euler number of the surface
  CHECK(width_sum == 36);
  CHECK(width_sum == kodaira_multiplicities(WeierstrassFamily::by_id("g1515")).total);

  // parabolicity is required, not just fixing the cusp
  CHECK_FALSE(stabilizer_check(Cusp::at_infinity(), Mat2{2, 1, 1, 1}));
  CHECK_FALSE(stabilizer_check(Cusp::rational(0, 1), g.power(3)));
  CHECK_FALSE(stabilizer_check(Cusp::at_infinity(), Mat2{-1, 0, 0, -1}));
}
