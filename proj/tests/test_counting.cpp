#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "asdv/counting.hpp"
#include "asdv/newform.hpp"

using namespace asdv;

namespace {

const std::map<i64, std::pair<i64, i64>>& reference_traces() {
  // (Tr_p, Tr_{p^2}) for the g1515 family, 5 <= p <= 31.
  static const std::map<i64, std::pair<i64, i64>> table = {
      {5, {0, 82}},      {7, {10, -146}},  {11, {0, 34}},
      {13, {-20, -476}}, {17, {0, 508}},   {19, {-32, -932}},
      {23, {0, 1828}},   {29, {0, 1564}},  {31, {-2, -3842}},
  };
  return table;
}

}  // namespace

TEST_CASE("trace table for the g1515 family") {
  auto fam = WeierstrassFamily::by_id("g1515");
  for (const auto& [p, expected] : reference_traces()) {
    CHECK(frobenius_trace(fam, FiniteField(p, 1)) == expected.first);
    CHECK(frobenius_trace(fam, FiniteField(p, 2)) == expected.second);
  }
}

TEST_CASE("bad characteristics are rejected") {
  CHECK_THROWS_AS(FiniteField(2, 1), ArgumentError);
  CHECK_THROWS_AS(FiniteField(3, 1), ArgumentError);
  CHECK_THROWS_AS(FiniteField(15, 1), ArgumentError);
}

TEST_CASE("singular fiber at t=0 has a nodal-cubic count") {
  auto fam = WeierstrassFamily::by_id("g1515");
  FiniteField f7(7, 1);
  i64 count = count_fiber(fam, f7, f7.zero());
  bool in_range = count == 7 || count == 8 || count == 9;
  CHECK(in_range);
}

TEST_CASE("hasse bound at every smooth fiber") {
  for (const char* id : {"g1515", "g2"}) {
    auto fam = WeierstrassFamily::by_id(id);
    for (i64 p : {5, 7, 11, 13}) {
      for (int deg : {1, 2}) {
        FiniteField field(p, deg);
        i64 q = field.q();
        for (const auto& fc : count_all_fibers(fam, field)) {
          if (fc.singular) {
            // singular cubics carry q, q+1 or q+2 points
            bool ok = fc.count >= q && fc.count <= q + 2;
            CHECK(ok);
          } else {
            i64 a = 1 + q - fc.count;
            CHECK(a * a <= 4 * q);
          }
        }
      }
    }
  }
}

TEST_CASE("trace vanishes at p = 2 mod 3 for the g1515 family") {
  auto fam = WeierstrassFamily::by_id("g1515");
  for (i64 p : {5, 11, 17, 23, 29, 41, 47}) {
    CHECK(frobenius_trace(fam, FiniteField(p, 1)) == 0);
  }
  for (i64 p : {7, 13, 19, 31, 37, 43}) {
    CHECK(frobenius_trace(fam, FiniteField(p, 1)) != 0);
  }
}

TEST_CASE("frobenius fixed points recover the degree-1 count") {
  // Counting F_{p^2} points with both coordinates in the prime field must
  // reproduce the F_p fiber count.
  auto fam = WeierstrassFamily::by_id("g1515");
  for (i64 p : {5, 7, 11}) {
    FiniteField base(p, 1);
    FiniteField ext(p, 2);
    for (i64 tv = 0; tv < p; ++tv) {
      auto t1 = base.element(tv);
      i64 direct = count_fiber(fam, base, t1);

      // brute force over the quadratic extension, restricted to F_p points
      auto t2 = ext.element(tv);
      QPoly polys[5] = {fam.a1, fam.a2, fam.a3, fam.a4, fam.a6};
      FiniteField::Elem a[5];
      for (int k = 0; k < 5; ++k) {
        a[k] = ext.zero();
        for (int i = polys[k].degree(); i >= 0; --i) {
          i64 cv = mpz_fdiv_ui(polys[k].coeff(i).get_num().get_mpz_t(),
                               static_cast<unsigned long>(p));
          a[k] = ext.add(ext.mul(a[k], t2), ext.from_int(cv));
        }
      }
      i64 fixed = 1;
      for (i64 xv = 0; xv < p; ++xv)
        for (i64 yv = 0; yv < p; ++yv) {
          auto x = ext.element(xv), y = ext.element(yv);
          auto lhs = ext.add(ext.mul(y, y),
                             ext.add(ext.mul(ext.mul(a[0], x), y), ext.mul(a[2], y)));
          auto rhs = ext.add(ext.mul(ext.add(ext.mul(ext.add(x, a[1]), x), a[3]), x), a[4]);
          if (lhs == rhs) ++fixed;
        }
      CHECK(fixed == direct);
    }
  }
}

TEST_CASE("g2 family traces equal the level-16 newform coefficients") {
  // The counting route and the seeded q-expansion agree prime by prime,
  // corroborating the pairing checked by the congruence suite.
  auto fam = WeierstrassFamily::by_id("g2");
  auto g2 = NewformCoefficients::from_table("g2");
  for (i64 p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    GaussianRational trace(BigRational(static_cast<long>(frobenius_trace(fam, FiniteField(p, 1)))));
    CHECK(trace == g2.prime_value(p));
  }
}

TEST_CASE("count cache round trip and integrity") {
  std::string path = "test_counts.cache";
  std::remove(path.c_str());
  auto fam = WeierstrassFamily::by_id("g1515");
  {
    CountCache cache(path);
    CHECK(frobenius_trace(fam, FiniteField(7, 1), &cache) == 10);
    CHECK(cache.size() == 8);  // 7 finite fibers + infinity
  }
  {
    CountCache cache(path);
    CHECK(cache.size() == 8);
    CHECK(cache.lookup("g1515", 7, "inf").has_value());
    // warm cache: all hits, same trace
    auto fibers = count_all_fibers(fam, FiniteField(7, 1), &cache);
    for (const auto& fc : fibers) CHECK(fc.from_cache);
    CHECK(frobenius_trace(fam, FiniteField(7, 1), &cache) == 10);
    // conflicting duplicate is an integrity error
    CHECK_THROWS_AS(cache.append("g1515", 7, "inf", 999), IntegrityError);
    // idempotent duplicate is fine
    i64 existing = *cache.lookup("g1515", 7, "0");
    cache.append("g1515", 7, "0", existing);
    CHECK(cache.size() == 8);
  }
  std::remove(path.c_str());
}

TEST_CASE("corrupt cache lines are skipped, not trusted") {
  std::string path = "test_corrupt.cache";
  {
    std::ofstream out(path);
    out << "g1515 7 0 11\n";
    out << "this line is garbage\n";
    out << "g1515 7 1 extra tokens here\n";
  }
  CountCache cache(path);
  CHECK(cache.size() == 1);
  CHECK(*cache.lookup("g1515", 7, "0") == 11);
  CHECK_FALSE(cache.lookup("g1515", 7, "1").has_value());
  std::remove(path.c_str());
}
