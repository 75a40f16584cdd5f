#include <CLI11.hpp>
#include <iostream>

#include "asdv/config.hpp"
#include "asdv/errors.hpp"
#include "asdv/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the weight-3 noncongruence cusp form congruences"};
  app.require_subcommand(1);

  std::string config_file;
  asdv::RunConfig config;
  bool flag_audit = false;

  app.add_option("--config", config_file, "flat key=value config file");
  auto* family = app.add_option("--family", config.family, "g1515 | g2");
  auto* pmax = app.add_option("--pmax", config.pmax, "largest prime checked");
  auto* trunc = app.add_option("--trunc", config.trunc, "series truncation");
  auto* nmax = app.add_option("--nmax", config.nmax, "explicit n bound (0 = floor(trunc/p))");
  auto* format = app.add_option("--format", config.format, "human | records");
  auto* cache = app.add_option("--cache", config.cache_path, "count cache path");
  auto* audit = app.add_flag("--audit", flag_audit, "recompute a 1% sample of cached counts");
  std::string form = config.form;
  auto* form_opt = app.add_option("--form", form, "series verb: e1 e2 f1 f2 f+ f- h2 t");

  app.add_subcommand("series", "emit the exact q-expansion of one form")->fallthrough();
  app.add_subcommand("traces", "Frobenius trace table from point counts")->fallthrough();
  app.add_subcommand("charpoly", "degree-4 characteristic polynomials and their Q(i) factors")
      ->fallthrough();
  app.add_subcommand("asd", "three-term congruence checks against the newforms")->fallthrough();
  app.add_subcommand("serre", "quartic/quadratic field data for the representation comparison")
      ->fallthrough();
  app.add_subcommand("group", "matrix identities: relations, cosets, stabilizers, widths")
      ->fallthrough();
  app.add_subcommand("geometry", "discriminant, j-invariant, fiber types, torsion, involution")
      ->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    // precedence: defaults < config file < flags < environment
    asdv::RunConfig merged;
    if (!config_file.empty()) merged.load_file(config_file);
    if (*family) merged.family = config.family;
    if (*pmax) merged.pmax = config.pmax;
    if (*trunc) merged.trunc = config.trunc;
    if (*nmax) merged.nmax = config.nmax;
    if (*format) merged.format = config.format;
    if (*cache) merged.cache_path = config.cache_path;
    if (*audit) merged.audit = flag_audit;
    if (*form_opt) merged.form = form;
    merged.apply_env();
    merged.validate();
    for (const auto* verb : {"series", "traces", "charpoly", "asd", "serre", "group", "geometry"})
      if (app.got_subcommand(verb)) merged.warn_if_shallow(verb);

    asdv::ReportDocument doc;
    if (app.got_subcommand("series"))
      doc = asdv::cmd_series(merged);
    else if (app.got_subcommand("traces"))
      doc = asdv::cmd_traces(merged);
    else if (app.got_subcommand("charpoly"))
      doc = asdv::cmd_charpoly(merged);
    else if (app.got_subcommand("asd"))
      doc = asdv::cmd_asd(merged);
    else if (app.got_subcommand("serre"))
      doc = asdv::cmd_serre(merged);
    else if (app.got_subcommand("group"))
      doc = asdv::cmd_group(merged);
    else
      doc = asdv::cmd_geometry(merged);

    std::cout << doc.render();
    return doc.failed ? kExitVerificationFailure : kExitPass;
  } catch (const asdv::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
