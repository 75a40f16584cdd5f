#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "asdv/errors.hpp"
#include "asdv/report.hpp"

using namespace asdv;

TEST_CASE("config validation") {
  RunConfig config;
  CHECK_NOTHROW(config.validate());
  config.trunc = 0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.trunc = 400;
  config.family = "g9999";
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.family = "g2";
  config.format = "xml";
  CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("config file parsing and precedence") {
  std::string path = "test_config.cfg";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "trunc = 120\n";
    out << "pmax=13\n";
    out << "family = g2   # trailing comment\n";
  }
  RunConfig config;
  config.load_file(path);
  CHECK(config.trunc == 120);
  CHECK(config.pmax == 13);
  CHECK(config.family == "g2");
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "unknown_key = 3\n";
  }
  RunConfig bad;
  CHECK_THROWS_AS(bad.load_file(path), ConfigError);
  std::remove(path.c_str());

  CHECK_THROWS_AS(bad.load_file("does_not_exist.cfg"), ConfigError);
}

TEST_CASE("series verb emits exact rational rows") {
  RunConfig config;
  config.trunc = 9;
  config.form = "h2";
  config.format = "records";
  auto doc = cmd_series(config);
  std::string text = doc.render();
  CHECK(text.find("series form=h2 n=3 re_num=-9 re_den=2 im_num=0 im_den=1") != std::string::npos);
  CHECK(text.find("n=9 re_num=-1197 re_den=128") != std::string::npos);
  CHECK_FALSE(doc.failed);
}

TEST_CASE("series verb with zero truncation is a config error") {
  RunConfig config;
  config.trunc = 0;
  CHECK_THROWS_AS(cmd_series(config), ConfigError);
}

TEST_CASE("hauptmodul rows carry the negative leading exponent") {
  RunConfig config;
  config.trunc = 10;
  config.form = "t";
  config.format = "records";
  std::string text = cmd_series(config).render();
  CHECK(text.find("series form=t n=-1 re_num=1 re_den=1") != std::string::npos);
}

TEST_CASE("trace report and warm-cache determinism") {
  std::string path = "test_report_counts.cache";
  std::remove(path.c_str());
  RunConfig config;
  config.pmax = 7;
  config.cache_path = path;
  config.format = "records";
  auto cold = cmd_traces(config);
  auto warm = cmd_traces(config);
  CHECK(cold.render() == warm.render());
  CHECK(cold.render().find("trace family=g1515 p=5 tr_p=0 tr_p2=82") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("audit mode recomputes cached entries") {
  std::string path = "test_audit_counts.cache";
  std::remove(path.c_str());
  RunConfig config;
  config.pmax = 7;
  config.cache_path = path;
  config.audit = true;
  auto doc = cmd_traces(config);
  std::string text = doc.render();
  CHECK(text.find("all consistent") != std::string::npos);

  // poison the lexicographically first cached count (the one the 1% audit
  // sample always includes) and expect the audit to catch it
  {
    std::ofstream out(path, std::ios::trunc);
    out << "g1515 25 0 999\n";
  }
  CHECK_THROWS_AS(cmd_traces(config), IntegrityError);
  std::remove(path.c_str());
}

TEST_CASE("asd verb all-pass and determinism across two full runs") {
  RunConfig config;
  config.trunc = 150;  // keep the unit-test cost small; acceptance runs full depth
  config.format = "records";
  auto first = cmd_asd(config);
  auto second = cmd_asd(config);
  CHECK_FALSE(first.failed);
  CHECK(first.render() == second.render());
  CHECK(first.render().find("asd form=f+ newform=g+ p=5 n=1 place=2+i required=2 achieved=2 pass=1") !=
        std::string::npos);

  config.family = "g2";
  auto g2doc = cmd_asd(config);
  CHECK_FALSE(g2doc.failed);
  CHECK(g2doc.render().find("newform=g2 p=3") != std::string::npos);
}

TEST_CASE("charpoly verb rejects the g2 family") {
  RunConfig config;
  config.family = "g2";
  CHECK_THROWS_AS(cmd_charpoly(config), ConfigError);
}

TEST_CASE("group and geometry verbs pass and render deterministically") {
  RunConfig config;
  for (const char* fam : {"g1515", "g2"}) {
    config.family = fam;
    auto g1 = cmd_geometry(config);
    auto g2 = cmd_geometry(config);
    CHECK_FALSE(g1.failed);
    CHECK(g1.render() == g2.render());
  }
  auto grp = cmd_group(config);
  CHECK_FALSE(grp.failed);
}

TEST_CASE("serre verb reproduces the field tables") {
  RunConfig config;
  auto doc = cmd_serre(config);
  CHECK_FALSE(doc.failed);
  std::string text = doc.render();
  CHECK(text.find("x^4 - 4*x - 3  disc=-13824  order-4 Frobenius at: 13 17 19 23") !=
        std::string::npos);
  CHECK(text.find("x^4 - 8*x + 6  disc=-55296  order-4 Frobenius at: 13 17") != std::string::npos);
  CHECK(text.find("order-4 Frobenius at: 19 23") != std::string::npos);
  CHECK(text.find("H'_13 mod (1+i) = T^2+1") != std::string::npos);
}
