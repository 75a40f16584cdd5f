#include "asdv/asd.hpp"

#include "asdv/errors.hpp"

namespace asdv {

namespace {

i64 ord_p_int(i64 n, i64 p) {
  i64 v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

void check_coverage(const PuiseuxSeries& f, i64 p, i64 n_max, i64 stride) {
  if (n_max < 1) throw ArgumentError("congruence check: n_max must be >= 1");
  if (n_max * stride > f.truncation())
    throw CoverageError("congruence check: series truncated at " +
                            std::to_string(f.truncation()) + ", need index " +
                            std::to_string(n_max * stride) + " for p = " + std::to_string(p),
                        f.truncation() / stride);
}

CongruenceReport run_three_term(const PuiseuxSeries& f, const std::string& form_label,
                                const std::string& g_label, const GaussianRational& bp,
                                int chi_p, i64 p, i64 n_max) {
  check_coverage(f, p, n_max, p);
  CongruenceReport report;
  report.form = form_label;
  report.newform = g_label;
  report.p = p;
  GaussianRational chi_p2(BigRational(chi_p) * p * p);
  auto places = places_above(p);
  for (i64 n = 1; n <= n_max; ++n) {
    GaussianRational delta = f.coeff(n * p) - bp * f.coeff(n);
    if (n % p == 0) delta += chi_p2 * f.coeff(n / p);
    i64 required = 2 * (1 + ord_p_int(n, p));
    for (const auto& place : places) {
      CongruenceRecord rec;
      rec.n = n;
      rec.place = place.label();
      rec.required = required;
      rec.achieved = gaussian_valuation(delta, place);
      rec.pass = rec.achieved.at_least(required);
      report.overall = report.overall && rec.pass;
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace

CongruenceReport asd_congruence(const PuiseuxSeries& f, const std::string& form_label,
                                const NewformCoefficients& g, i64 p, i64 n_max) {
  if (p == 2 || g.level() % p == 0)
    throw ArgumentError("asd_congruence: p = " + std::to_string(p) +
                        " divides the excluded modulus for " + g.label());
  return run_three_term(f, form_label, g.label(), g.prime_value(p),
                        g.character().at_prime(p), p, n_max);
}

CongruenceReport scholl_congruence(const PuiseuxSeries& f, const std::string& form_label,
                                   const FrobeniusData& data, i64 n_max) {
  const i64 p = data.p;
  if (p < 5) throw ArgumentError("scholl_congruence: Frobenius data carries no valid prime");
  check_coverage(f, p, n_max, p * p);
  CongruenceReport report;
  report.form = form_label;
  report.newform = "H_" + std::to_string(p);
  report.p = p;
  GaussianRational c1(data.c1), c2(data.c2);
  GaussianRational p2c1(BigRational(p) * p * data.c1);
  GaussianRational p4(pow_rational(BigRational(p), 4));
  auto places = places_above(p);
  for (i64 n = 1; n <= n_max; ++n) {
    GaussianRational delta = f.coeff(n * p * p) - c1 * f.coeff(n * p) + c2 * f.coeff(n);
    if (n % p == 0) delta -= p2c1 * f.coeff(n / p);
    if (n % (p * p) == 0) delta += p4 * f.coeff(n / (p * p));
    i64 required = 2 * (1 + ord_p_int(n, p));
    for (const auto& place : places) {
      CongruenceRecord rec;
      rec.n = n;
      rec.place = place.label();
      rec.required = required;
      rec.achieved = gaussian_valuation(delta, place);
      rec.pass = rec.achieved.at_least(required);
      report.overall = report.overall && rec.pass;
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

void resolve_sign(FrobeniusData& data, const PuiseuxSeries& f_plus, i64 n_probe) {
  if (data.sign_resolved) return;
  if (data.beta_candidates.size() != 2)
    throw ArgumentError("resolve_sign: no candidate pair at p = " + std::to_string(data.p));
  std::vector<bool> passes;
  for (const auto& candidate : data.beta_candidates) {
    CongruenceReport probe = run_three_term(f_plus, "f+", "candidate", candidate, data.chi_m3,
                                            data.p, n_probe);
    passes.push_back(probe.overall);
  }
  if (passes[0] && passes[1])
    throw ArgumentError("resolve_sign: both signs pass at p = " + std::to_string(data.p) +
                        " with n_probe = " + std::to_string(n_probe) + "; enlarge the probe set");
  if (!passes[0] && !passes[1])
    throw IntegrityError("resolve_sign: neither sign passes at p = " + std::to_string(data.p));
  data.beta = data.beta_candidates[passes[0] ? 0 : 1];
  data.sign_resolved = true;
}

GaussianRational newform_from_counting(const FrobeniusData& data, const std::string& label) {
  if (label != "g+" && label != "g-")
    throw ArgumentError("newform_from_counting: label must be g+ or g-");
  if (!data.sign_resolved)
    throw ArgumentError("newform_from_counting: sign at p = " + std::to_string(data.p) +
                        " is pending resolution");
  return label == "g+" ? data.beta : data.beta.conj();
}

}  // namespace asdv
