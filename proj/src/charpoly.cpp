#include "asdv/charpoly.hpp"

#include <sstream>

#include "asdv/characters.hpp"
#include "asdv/counting.hpp"
#include "asdv/errors.hpp"

namespace asdv {

namespace {

void append_term(std::ostream& os, i64 coeff, int deg, bool& first) {
  if (coeff == 0) return;
  i64 a = coeff < 0 ? -coeff : coeff;
  if (first) {
    if (coeff < 0) os << "-";
    first = false;
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (deg == 0 || a != 1) os << a;
  if (deg > 0) {
    if (a != 1) os << "*";
    os << "T";
    if (deg > 1) os << "^" << deg;
  }
}

}  // namespace

std::string FrobeniusData::hp_str() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 4; d >= 0; --d) append_term(os, hp[d], d, first);
  return os.str();
}

std::string FrobeniusData::hp_prime_str(bool resolved_sign) const {
  std::ostringstream os;
  os << "T^2";
  if (!resolved_sign && p % 3 == 2) {
    i64 b = beta_candidates.at(0).im.get_num().get_si();
    if (b < 0) b = -b;
    if (b != 0) os << " +- " << b << "i*T";
  } else {
    const GaussianRational& b = sign_resolved ? beta : beta_candidates.at(0);
    if (!b.is_zero()) {
      i64 v = b.is_real() ? -b.re.get_num().get_si() : -b.im.get_num().get_si();
      i64 a = v < 0 ? -v : v;
      os << (v < 0 ? " - " : " + ");
      if (a != 1) os << a << (b.is_real() ? "*T" : "i*T");
      else os << (b.is_real() ? "T" : "i*T");
    }
  }
  i64 c = chi_m3 * p * p;
  os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
  return os.str();
}

FrobeniusData build_frobenius_data(const WeierstrassFamily& fam, i64 p, CountCache* cache) {
  if (fam.family_id != "g1515")
    throw ArgumentError("build_frobenius_data: degree-4 Frobenius data is defined for g1515 only");
  if (p == 2 || p == 3) throw ArgumentError("build_frobenius_data: p must avoid 2 and 3");
  FrobeniusData d;
  d.p = p;
  d.tr_p = frobenius_trace(fam, FiniteField(p, 1), cache);
  d.tr_p2 = frobenius_trace(fam, FiniteField(p, 2), cache);
  d.c1 = d.tr_p;
  i64 num = d.c1 * d.c1 - d.tr_p2;
  if (num % 2 != 0)
    throw IntegrityError("build_frobenius_data: c1^2 - tr_p2 odd at p = " + std::to_string(p));
  d.c2 = num / 2;
  d.hp = {p * p * p * p, -p * p * d.c1, d.c2, -d.c1, 1};
  d.chi_m3 = QuadraticCharacter(-3).at_prime(p);
  return d;
}

void factor_over_qi(FrobeniusData& data) {
  const i64 p = data.p;
  const i64 p2 = p * p;
  data.beta_candidates.clear();
  data.sign_resolved = false;
  if (data.chi_m3 == 1) {
    // Constant term +p^2: real trace with 2 beta = C1 and beta^2 = C2 - 2p^2.
    if (data.c1 % 2 != 0)
      throw IntegrityError("factor_over_qi: C1 odd at split-type p = " + std::to_string(p));
    i64 beta = data.c1 / 2;
    if (beta * beta != data.c2 - 2 * p2)
      throw IntegrityError("factor_over_qi: trace consistency failed at p = " + std::to_string(p));
    data.beta_candidates.push_back(GaussianRational(beta));
    data.beta = GaussianRational(beta);
    data.sign_resolved = true;
    return;
  }
  // Constant term -p^2: purely imaginary trace, C1 = 0 and B^2 = C2 + 2p^2.
  if (data.c1 != 0)
    throw IntegrityError("factor_over_qi: C1 nonzero at inert-type p = " + std::to_string(p));
  i64 b2 = data.c2 + 2 * p2;
  BigInt root;
  if (b2 < 0 || !nth_root_exact(BigInt(b2), 2, root))
    throw IntegrityError("factor_over_qi: C2 + 2p^2 is not a perfect square at p = " +
                         std::to_string(p));
  i64 b = root.get_si();
  data.beta_candidates.push_back(GaussianRational(0, b));
  data.beta_candidates.push_back(GaussianRational(0, -b));
}

}  // namespace asdv
