#include "asdv/report.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "asdv/asd.hpp"
#include "asdv/charpoly.hpp"
#include "asdv/counting.hpp"
#include "asdv/errors.hpp"
#include "asdv/galois.hpp"
#include "asdv/matrix2z.hpp"
#include "asdv/modforms.hpp"
#include "asdv/newform.hpp"
#include "asdv/weierstrass.hpp"

namespace asdv {

namespace {

std::vector<i64> odd_primes(i64 lo, i64 hi) {
  std::vector<i64> out;
  for (i64 p = lo | 1; p <= hi; p += 2)
    if (is_probable_prime(BigInt(p))) out.push_back(p);
  return out;
}

std::string rat_fields(const char* prefix, const BigRational& x) {
  std::ostringstream os;
  os << prefix << "_num=" << x.get_num().get_str() << " " << prefix
     << "_den=" << x.get_den().get_str();
  return os.str();
}

void emit_header(ReportDocument& doc, const std::string& verb, const RunConfig& config) {
  doc.add(std::string("# ") + kToolVersion);
  doc.add("# verb: " + verb);
  doc.add("# config: " + config.echo());
}

std::unique_ptr<CountCache> open_cache(const RunConfig& config) {
  if (config.cache_path.empty()) return nullptr;
  return std::make_unique<CountCache>(config.cache_path);
}

const PuiseuxSeries& series_by_name(const std::string& name, const RunConfig& config,
                                    CuspFormBasis& basis_slot, PuiseuxSeries& slot,
                                    bool& basis_built) {
  auto ensure_basis = [&]() -> CuspFormBasis& {
    if (!basis_built) {
      basis_slot = cusp_forms_gamma(config.trunc);
      basis_built = true;
    }
    return basis_slot;
  };
  if (name == "e1") {
    slot = eisenstein_e1(config.trunc);
    return slot;
  }
  if (name == "e2") {
    slot = eisenstein_e2(config.trunc);
    return slot;
  }
  if (name == "f1") return ensure_basis().f1;
  if (name == "f2") return ensure_basis().f2;
  if (name == "f+") return ensure_basis().f_plus;
  if (name == "f-") return ensure_basis().f_minus;
  if (name == "h2") {
    slot = cusp_form_gamma2(config.trunc);
    return slot;
  }
  if (name == "t") {
    slot = hauptmodul(config.trunc);
    return slot;
  }
  throw ConfigError("series: unknown form '" + name + "'");
}

void audit_cache(ReportDocument& doc, CountCache& cache) {
  auto entries = cache.entries();
  if (entries.empty()) {
    doc.add("audit: cache is empty");
    return;
  }
  std::size_t step = 100;  // deterministic 1% sample
  std::size_t recomputed = 0;
  for (std::size_t i = 0; i < entries.size(); i += step) {
    const auto& e = entries[i];
    WeierstrassFamily fam = WeierstrassFamily::by_id(e.family_id);
    i64 p = e.q;
    int degree = 1;
    if (!is_probable_prime(BigInt(e.q))) {
      p = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(e.q))));
      if (p * p != e.q || !is_probable_prime(BigInt(p)))
        throw IntegrityError("audit: cache key with q = " + std::to_string(e.q) +
                             " is not a prime or prime square");
      degree = 2;
    }
    FiniteField field(p, degree);
    FiniteField::Elem t;
    if (e.t_enc == "inf") {
      t = field.zero();  // fiber at infinity = fiber at 0 via the involution
    } else {
      auto comma = e.t_enc.find(',');
      t.a = std::stoll(e.t_enc.substr(0, comma));
      t.b = comma == std::string::npos ? 0 : std::stoll(e.t_enc.substr(comma + 1));
    }
    i64 fresh = count_fiber(fam, field, t);
    if (fresh != e.count)
      throw IntegrityError("audit: cached count for " + e.family_id + " q=" +
                           std::to_string(e.q) + " t=" + e.t_enc + " is " +
                           std::to_string(e.count) + ", recomputed " + std::to_string(fresh));
    ++recomputed;
  }
  doc.add("audit: recomputed " + std::to_string(recomputed) + " of " +
          std::to_string(entries.size()) + " cached counts, all consistent");
}

}  // namespace

std::string ReportDocument::render() const {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

ReportDocument cmd_series(const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  emit_header(doc, "series", config);
  CuspFormBasis basis_slot;
  PuiseuxSeries slot;
  bool basis_built = false;
  const PuiseuxSeries& s = series_by_name(config.form, config, basis_slot, slot, basis_built);
  i64 hi = std::min(config.trunc, s.truncation());
  doc.add("# form " + config.form + " on the grid q^(n/" + std::to_string(s.ramification()) +
          "), n = " + std::to_string(s.lead()) + ".." + std::to_string(hi));
  for (i64 n = s.lead(); n <= hi; ++n) {
    const GaussianRational& c = s.coeff(n);
    if (config.format == "records") {
      std::ostringstream os;
      os << "series form=" << config.form << " n=" << n << " " << rat_fields("re", c.re) << " "
         << rat_fields("im", c.im);
      doc.add(os.str());
    } else {
      if (c.is_zero()) continue;
      std::ostringstream os;
      os << "  q^(" << n << "/" << s.ramification() << ")  " << to_string(c);
      doc.add(os.str());
    }
  }
  return doc;
}

std::vector<std::string> selected_families(const RunConfig& config) {
  if (config.family == "all") return {"g1515", "g2"};
  return {config.family};
}

ReportDocument cmd_traces(const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  emit_header(doc, "traces", config);
  auto cache = open_cache(config);
  for (const std::string& family_id : selected_families(config)) {
    WeierstrassFamily fam = WeierstrassFamily::by_id(family_id);
    if (config.format == "human") doc.add("# family " + family_id + "\n  p      Tr_p     Tr_p^2");
    for (i64 p : odd_primes(5, config.pmax)) {
      if (p == 3) continue;
      i64 tr_p = frobenius_trace(fam, FiniteField(p, 1), cache.get());
      i64 tr_p2 = frobenius_trace(fam, FiniteField(p, 2), cache.get());
      std::ostringstream os;
      if (config.format == "records") {
        os << "trace family=" << family_id << " p=" << p << " tr_p=" << tr_p
           << " tr_p2=" << tr_p2;
      } else {
        os << "  " << p << "\t" << tr_p << "\t" << tr_p2;
      }
      doc.add(os.str());
    }
  }
  if (config.audit && cache) audit_cache(doc, *cache);
  return doc;
}

ReportDocument cmd_charpoly(const RunConfig& config) {
  config.validate();
  if (config.family == "g2")
    throw ConfigError("charpoly: degree-4 Frobenius data exists for family g1515 only");
  ReportDocument doc;
  emit_header(doc, "charpoly", config);
  auto cache = open_cache(config);
  WeierstrassFamily fam = WeierstrassFamily::by_id("g1515");
  CuspFormBasis basis = cusp_forms_gamma(std::min<i64>(config.trunc, 200));
  for (i64 p : odd_primes(5, config.pmax)) {
    if (p == 3) continue;
    FrobeniusData data = build_frobenius_data(fam, p, cache.get());
    factor_over_qi(data);
    std::string pm = data.hp_prime_str(false);
    bool was_ambiguous = !data.sign_resolved;
    if (!data.sign_resolved)
      resolve_sign(data, basis.f_plus, std::min<i64>(6, basis.f_plus.truncation() / p));
    if (config.format == "records") {
      std::ostringstream os;
      os << "charpoly p=" << p << " tr_p=" << data.tr_p << " tr_p2=" << data.tr_p2
         << " c1=" << data.c1 << " c2=" << data.c2 << " "
         << rat_fields("beta_re", data.beta.re) << " " << rat_fields("beta_im", data.beta.im)
         << " delta=" << data.chi_m3 * p * p
         << " sign_source=" << (was_ambiguous ? "congruence" : "unique");
      doc.add(os.str());
    } else {
      std::ostringstream os;
      os << "  p=" << p << "  H_p = " << data.hp_str() << "  H'_p = " << pm;
      if (was_ambiguous) os << "  resolved: " << data.hp_prime_str(true);
      doc.add(os.str());
    }
  }
  return doc;
}

namespace {

void run_asd_pair(ReportDocument& doc, const RunConfig& config, const PuiseuxSeries& f,
                  const std::string& form_label, const NewformCoefficients& g,
                  const std::vector<i64>& primes) {
  for (i64 p : primes) {
    // An explicit nmax is honored verbatim so an undersized truncation
    // surfaces as a coverage error instead of silently shrinking the run.
    i64 n_max = config.nmax > 0 ? config.nmax : std::min(config.trunc, f.truncation()) / p;
    CongruenceReport report = asd_congruence(f, form_label, g, p, n_max);
    if (!report.overall) doc.failed = true;
    if (config.format == "records") {
      for (const auto& rec : report.records) {
        std::ostringstream os;
        os << "asd form=" << form_label << " newform=" << g.label() << " p=" << p
           << " n=" << rec.n << " place=" << rec.place << " required=" << rec.required
           << " achieved=" << rec.achieved.str() << " pass=" << (rec.pass ? 1 : 0);
        doc.add(os.str());
      }
    } else {
      std::ostringstream os;
      os << "  " << form_label << " vs " << g.label() << "  p=" << p << "  n=1.." << n_max
         << "  records=" << report.records.size() << "  "
         << (report.overall ? "pass" : "FAIL");
      doc.add(os.str());
      for (const auto& rec : report.records) {
        if (rec.pass) continue;
        std::ostringstream bad;
        bad << "    FAIL n=" << rec.n << " place=" << rec.place << " required=" << rec.required
            << " achieved=" << rec.achieved.str();
        doc.add(bad.str());
      }
    }
  }
}

}  // namespace

ReportDocument cmd_asd(const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  emit_header(doc, "asd", config);
  for (const std::string& family_id : selected_families(config)) {
    if (family_id == "g1515") {
      CuspFormBasis basis = cusp_forms_gamma(config.trunc);
      auto gp = NewformCoefficients::from_table("g+");
      auto gm = NewformCoefficients::from_table("g-");
      std::vector<i64> primes;
      for (i64 p : odd_primes(5, config.pmax))
        if (p != 3) primes.push_back(p);
      run_asd_pair(doc, config, basis.f_plus, "f+", gp, primes);
      run_asd_pair(doc, config, basis.f_minus, "f-", gm, primes);
    } else {
      PuiseuxSeries h2 = cusp_form_gamma2(config.trunc);
      auto g2 = NewformCoefficients::from_table("g2");
      std::vector<i64> primes = odd_primes(3, config.pmax);
      run_asd_pair(doc, config, h2, "h2", g2, primes);
    }
  }
  doc.add(doc.failed ? "asd: FAIL" : "asd: all congruences pass");
  return doc;
}

ReportDocument cmd_serre(const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  emit_header(doc, "serre", config);
  auto cache = open_cache(config);
  WeierstrassFamily fam = WeierstrassFamily::by_id("g1515");

  std::vector<FrobeniusData> table;
  for (i64 p : odd_primes(5, std::max<i64>(config.pmax, 31))) {
    if (p == 3 || p > 31) continue;
    FrobeniusData data = build_frobenius_data(fam, p, cache.get());
    factor_over_qi(data);
    table.push_back(std::move(data));
  }

  std::vector<i64> quartic_primes = {5, 7, 11, 13, 17, 19, 23};
  DeviationProbe probe = deviation_probe(quartic_primes, table);
  for (size_t idx = 0; idx < probe.quartics.size(); ++idx) {
    const auto& row = probe.quartics[idx];
    std::ostringstream os;
    if (config.format == "records") {
      os << "serre_quartic idx=" << idx << " disc=" << row.discriminant.get_str() << " order4=";
      for (size_t k = 0; k < row.order4_primes.size(); ++k)
        os << (k ? "," : "") << row.order4_primes[k];
    } else {
      os << "  " << row.poly_str << "  disc=" << row.discriminant.get_str()
         << "  order-4 Frobenius at:";
      for (i64 p : row.order4_primes) os << " " << p;
    }
    doc.add(os.str());
  }

  const std::vector<std::pair<i64, i64>> septuple = {
      {2, 5}, {3, 5}, {6, 11}, {-1, 7}, {-2, 5}, {-3, 5}, {-6, 17}};
  for (const auto& [d, p] : septuple) {
    bool inert = is_inert_quadratic(d, p);
    if (!inert) doc.failed = true;
    std::ostringstream os;
    if (config.format == "records")
      os << "serre_inert d=" << d << " p=" << p << " inert=" << (inert ? 1 : 0);
    else
      os << "  p=" << p << " is " << (inert ? "inert" : "NOT inert") << " in Q(sqrt(" << d << "))";
    doc.add(os.str());
  }

  for (const auto& data : table) {
    if (data.p != 5 && data.p != 7 && data.p != 13 && data.p != 31) continue;
    auto poly = mod_lambda_charpoly(data);
    std::string poly_txt = poly[1] ? "T^2+T+1" : "T^2+1";
    if (config.format == "records")
      doc.add("serre_modlambda p=" + std::to_string(data.p) + " poly=" + poly_txt);
    else
      doc.add("  H'_" + std::to_string(data.p) + " mod (1+i) = " + poly_txt);
  }

  {
    std::ostringstream os;
    if (config.format == "records") {
      os << "serre_oddtrace primes=";
      for (size_t k = 0; k < probe.odd_trace_primes.size(); ++k)
        os << (k ? "," : "") << probe.odd_trace_primes[k];
    } else {
      os << "  odd quadratic-factor trace at:";
      for (i64 p : probe.odd_trace_primes) os << " " << p;
    }
    doc.add(os.str());
  }
  for (const auto& [d, inert] : probe.inert_odd_trace) {
    std::ostringstream os;
    if (config.format == "records") {
      os << "serre_elimination d=" << d << " odd_trace_inert=";
      for (size_t k = 0; k < inert.size(); ++k) os << (k ? "," : "") << inert[k];
    } else {
      os << "  Q(sqrt(" << d << ")): odd-trace inert primes:";
      for (i64 p : inert) os << " " << p;
    }
    doc.add(os.str());
    if (inert.empty()) doc.failed = true;
  }
  return doc;
}

namespace {

void group_check(ReportDocument& doc, const RunConfig& config, const std::string& name, bool ok) {
  if (!ok) doc.failed = true;
  if (config.format == "records")
    doc.add("group check=" + name + " ok=" + (ok ? std::string("1") : std::string("0")));
  else
    doc.add("  " + name + ": " + (ok ? "ok" : "FAIL"));
}

}  // namespace

ReportDocument cmd_group(const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  emit_header(doc, "group", config);
  Mat2 g = gen_gamma(), d = gen_delta(), A = gen_A();
  auto conj = [](const Mat2& a, const Mat2& b) { return a * b * a.inverse(); };
  Mat2 AdA = conj(A, d);

  group_check(doc, config, "gamma_in_gamma1_5", in_gamma1_5(g));
  group_check(doc, config, "A_in_gamma0_5_only",
              in_gamma0_5(A) && !in_pm_gamma1_5(A));
  group_check(doc, config, "A_squared_is_minus_identity", A.power(2) == Mat2{-1, 0, 0, -1});

  std::vector<std::pair<Mat2, int>> rel1 = {{AdA, 1}, {conj(A, g), 1}, {d, 1}, {g, 1}};
  group_check(doc, config, "gamma1_5_relation", verify_relation(rel1));
  std::vector<std::pair<Mat2, int>> rel2 = {
      {AdA, 1},           {conj(A, g.power(3)), 1},
      {d, 1},             {conj(g, AdA), 1},
      {conj(g, d), 1},    {conj(g.power(2), AdA), 1},
      {conj(g.power(2), d), 1}, {g.power(3), 1}};
  group_check(doc, config, "index3_relation", verify_relation(rel2));
  std::vector<std::pair<Mat2, int>> rel3 = {{AdA, 1},          {conj(A, g.power(2)), 1}, {d, 1},
                                            {conj(g, AdA), 1}, {conj(g, d), 1},
                                            {g.power(2), 1}};
  group_check(doc, config, "index2_relation", verify_relation(rel3));

  std::vector<Mat2> reps;
  for (int i = 1; i <= 5; ++i) reps.push_back(Mat2{1, i - 1, 0, 1});
  reps.push_back(Mat2{0, -1, 1, 0});
  group_check(doc, config, "gamma0_5_cosets_in_sl2z",
              verify_cosets(reps, [](const Mat2& m) { return in_gamma0_5(m); }));
  std::vector<Mat2> twelve = reps;
  for (const Mat2& r : reps) twelve.push_back(A * r);
  group_check(doc, config, "pm_gamma1_5_cosets_in_sl2z",
              verify_cosets(twelve, [](const Mat2& m) { return in_pm_gamma1_5(m); }));

  struct CuspRow {
    const char* name;
    Cusp cusp;
    Mat2 m;
    i64 width;
  };
  const std::vector<CuspRow> cusp_table = {
      {"inf", Cusp::at_infinity(), g.power(3), 15},
      {"-2", Cusp::rational(-2, 1), conj(A, g.power(3)), 15},
      {"0", Cusp::rational(0, 1), d, 1},
      {"5", Cusp::rational(5, 1), conj(g, d), 1},
      {"10", Cusp::rational(10, 1), conj(g.power(2), d), 1},
      {"-5/2", Cusp::rational(-5, 2), AdA, 1},
      {"5/2", Cusp::rational(5, 2), conj(g, AdA), 1},
      {"15/2", Cusp::rational(15, 2), conj(g.power(2), AdA), 1},
  };
  i64 width_sum = 0;
  for (const auto& row : cusp_table) {
    bool ok = stabilizer_check(row.cusp, row.m) && parabolic_width(row.cusp, row.m) == row.width;
    width_sum += row.width;
    if (config.format == "records") {
      doc.add("group cusp=" + std::string(row.name) + " width=" + std::to_string(row.width) +
              " ok=" + (ok ? "1" : "0"));
      if (!ok) doc.failed = true;
    } else {
      group_check(doc, config, std::string("stabilizer_") + row.name, ok);
    }
  }
  i64 euler = kodaira_multiplicities(WeierstrassFamily::by_id("g1515")).total;
  group_check(doc, config, "width_sum_equals_euler_number",
              width_sum == 36 && euler == width_sum);
  return doc;
}

namespace {

void geometry_for_family(ReportDocument& doc, const RunConfig& config,
                         const std::string& family_id) {
  WeierstrassFamily fam = WeierstrassFamily::by_id(family_id);
  auto check = [&](const std::string& name, bool ok) {
    if (!ok) doc.failed = true;
    if (config.format == "records")
      doc.add("geometry family=" + family_id + " check=" + name + " ok=" + (ok ? "1" : "0"));
    else
      doc.add("  " + name + ": " + (ok ? "ok" : "FAIL"));
  };

  QPoly disc = discriminant_poly(fam);
  QPoly c4 = c4_poly(fam), c6 = c6_poly(fam);
  check("weierstrass_identity_c4cubed_minus_c6squared",
        c4 * c4 * c4 - c6 * c6 == disc.scaled(BigRational(1728)));

  if (family_id == "g1515") {
    QPoly inner = QPoly::monomial(BigRational(1), 6) -
                  QPoly::monomial(BigRational(11), 3) - QPoly(1);
    QPoly shape = QPoly::monomial(BigRational(1), 15) * inner;
    bool shape_ok = disc.degree() == shape.degree() &&
                    disc == shape.scaled(disc.leading() / shape.leading());
    check("discriminant_is_unit_times_t15_t6m11t3m1", shape_ok);

    QPoly jn = QPoly::from_coeffs({BigRational(1), BigRational(0), BigRational(0), BigRational(12),
                                   BigRational(0), BigRational(0), BigRational(14), BigRational(0),
                                   BigRational(0), BigRational(-12), BigRational(0),
                                   BigRational(0), BigRational(1)});
    check("j_invariant_closed_form", j_invariant(fam) == RationalFunction(jn * jn * jn, shape));
    check("j_inversion_invariant", j_inversion_invariant(fam));
    check("involution_identities", involution_check());
  }

  KodairaSummary kodaira = kodaira_multiplicities(fam);
  for (const auto& place : kodaira.places) {
    if (config.format == "records")
      doc.add("geometry family=" + family_id + " fiber=" + place.place + " multiplicity=" +
              std::to_string(place.multiplicity) + " count=" + std::to_string(place.count));
    else
      doc.add("  fiber I_" + std::to_string(place.multiplicity) + " x" +
              std::to_string(place.count) + " at " + place.place);
  }
  check("euler_number", kodaira.total == (family_id == "g1515" ? 36 : 24));
  check("section_order_five", torsion_order_check(fam) == 5);
}

}  // namespace

ReportDocument cmd_geometry(const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  emit_header(doc, "geometry", config);
  for (const std::string& family_id : selected_families(config)) {
    if (config.format == "human") doc.add("# family " + family_id);
    geometry_for_family(doc, config, family_id);
  }
  return doc;
}

}  // namespace asdv
