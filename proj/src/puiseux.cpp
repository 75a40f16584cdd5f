#include "asdv/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "asdv/errors.hpp"

namespace asdv {

namespace {
const GaussianRational kZero;

void check_ram(i64 ram) {
  if (ram < 1) throw ArgumentError("PuiseuxSeries: ramification must be positive");
}
}  // namespace

PuiseuxSeries PuiseuxSeries::zero(i64 ram, i64 trunc) {
  check_ram(ram);
  return from_coeffs(ram, 0, std::vector<GaussianRational>(trunc + 1));
}

PuiseuxSeries PuiseuxSeries::one(i64 ram, i64 trunc) {
  return monomial(GaussianRational(1), 0, ram, trunc);
}

PuiseuxSeries PuiseuxSeries::monomial(const GaussianRational& c, i64 index, i64 ram, i64 trunc) {
  check_ram(ram);
  if (index > trunc) throw ArgumentError("PuiseuxSeries: monomial index beyond truncation");
  i64 lead = std::min<i64>(index, 0);
  std::vector<GaussianRational> coeffs(trunc - lead + 1);
  coeffs[index - lead] = c;
  return from_coeffs(ram, lead, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::from_coeffs(i64 ram, i64 lead, std::vector<GaussianRational> coeffs) {
  check_ram(ram);
  if (coeffs.empty()) throw ArgumentError("PuiseuxSeries: empty coefficient range");
  PuiseuxSeries s;
  s.ram_ = ram;
  s.lead_ = lead;
  s.c_ = std::move(coeffs);
  return s;
}

const GaussianRational& PuiseuxSeries::coeff(i64 n) const {
  if (n < lead_) return kZero;
  if (n > truncation())
    throw CoverageError("PuiseuxSeries: coefficient " + std::to_string(n) +
                            "/" + std::to_string(ram_) + " beyond truncation " +
                            std::to_string(truncation()),
                        truncation());
  return c_[n - lead_];
}

bool PuiseuxSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const GaussianRational& x) { return x.is_zero(); });
}

std::optional<i64> PuiseuxSeries::order() const {
  for (i64 j = 0; j < static_cast<i64>(c_.size()); ++j)
    if (!c_[j].is_zero()) return lead_ + j;
  return std::nullopt;
}

PuiseuxSeries PuiseuxSeries::rescaled(i64 factor) const {
  if (factor < 1) throw ArgumentError("PuiseuxSeries: rescale factor must be positive");
  if (factor == 1) return *this;
  // Index n on the old grid becomes n*factor; intermediate indices are exact zeros.
  std::vector<GaussianRational> coeffs((c_.size() - 1) * factor + 1);
  for (size_t j = 0; j < c_.size(); ++j) coeffs[j * factor] = c_[j];
  return from_coeffs(ram_ * factor, lead_ * factor, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::truncated(i64 new_trunc) const {
  if (new_trunc > truncation())
    throw CoverageError("PuiseuxSeries: cannot extend truncation", truncation());
  if (new_trunc < lead_) throw ArgumentError("PuiseuxSeries: truncation below leading index");
  std::vector<GaussianRational> coeffs(c_.begin(), c_.begin() + (new_trunc - lead_ + 1));
  return from_coeffs(ram_, lead_, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const GaussianRational& c) const {
  PuiseuxSeries r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

PuiseuxSeries PuiseuxSeries::conjugated() const {
  PuiseuxSeries r = *this;
  for (auto& x : r.c_) x = x.conj();
  return r;
}

PuiseuxSeries PuiseuxSeries::pow(unsigned e) const {
  if (e == 0) return one(ram_, truncation() - lead_);
  PuiseuxSeries r = *this;
  for (unsigned k = 1; k < e; ++k) r = r * *this;
  return r;
}

std::pair<PuiseuxSeries, PuiseuxSeries> align(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  i64 l = std::lcm(a.ramification(), b.ramification());
  return {a.rescaled(l / a.ramification()), b.rescaled(l / b.ramification())};
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = align(a, b);
  i64 lead = std::min(x.lead_, y.lead_);
  i64 trunc = std::min(x.truncation(), y.truncation());
  if (trunc < lead) throw IntegrityError("PuiseuxSeries: addition has empty known range");
  std::vector<GaussianRational> coeffs(trunc - lead + 1);
  for (i64 n = lead; n <= trunc; ++n) {
    GaussianRational v;
    if (n >= x.lead_) v += x.c_[n - x.lead_];
    if (n >= y.lead_) v += y.c_[n - y.lead_];
    coeffs[n - lead] = std::move(v);
  }
  return PuiseuxSeries::from_coeffs(x.ram_, lead, std::move(coeffs));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = align(a, b);
  i64 lead = x.lead_ + y.lead_;
  i64 len = std::min(x.c_.size(), y.c_.size());
  std::vector<GaussianRational> coeffs(len);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    size_t jmax = std::min(y.c_.size(), static_cast<size_t>(len) - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (y.c_[j].is_zero()) continue;
      coeffs[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return PuiseuxSeries::from_coeffs(x.ram_, lead, std::move(coeffs));
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = align(a, b);
  auto yord = y.order();
  if (!yord) throw ArgumentError("PuiseuxSeries: division by zero series");
  i64 yl = *yord - y.lead_;  // stored offset of y's leading nonzero term
  auto xord = x.order();
  if (!xord) {
    // 0 / b = 0 over the range the quotient is determined on.
    i64 len = std::min<i64>(x.c_.size(), static_cast<i64>(y.c_.size()) - yl);
    return PuiseuxSeries::from_coeffs(x.ram_, x.lead_ - *yord,
                                      std::vector<GaussianRational>(std::max<i64>(len, 1)));
  }
  i64 xl = *xord - x.lead_;
  i64 len = std::min<i64>(static_cast<i64>(x.c_.size()) - xl,
                          static_cast<i64>(y.c_.size()) - yl);
  // Long division of the unit parts.
  std::vector<GaussianRational> rem(x.c_.begin() + xl, x.c_.begin() + xl + len);
  GaussianRational inv_b0 = inverse(y.c_[yl]);
  std::vector<GaussianRational> q(len);
  for (i64 k = 0; k < len; ++k) {
    GaussianRational qk = rem[k] * inv_b0;
    if (!qk.is_zero()) {
      for (i64 j = 0; k + j < len; ++j) {
        const GaussianRational& bj = y.c_[yl + j];
        if (!bj.is_zero()) rem[k + j] -= qk * bj;
      }
    }
    q[k] = std::move(qk);
  }
  return PuiseuxSeries::from_coeffs(x.ram_, *xord - *yord, std::move(q));
}

PuiseuxSeries PuiseuxSeries::nth_root(unsigned n) const {
  if (n == 0) throw ArgumentError("PuiseuxSeries: 0-th root");
  if (n == 1) return *this;
  auto ord = order();
  if (!ord) throw ArgumentError("PuiseuxSeries: n-th root of zero series");
  // Extend ramification so the leading exponent becomes divisible by n.
  i64 g = std::gcd(*ord < 0 ? -*ord : *ord, static_cast<i64>(n));
  i64 ext = (*ord == 0) ? 1 : static_cast<i64>(n) / g;
  PuiseuxSeries base = rescaled(ext);
  i64 blead = *base.order();
  i64 off = blead - base.lead_;
  i64 len = static_cast<i64>(base.c_.size()) - off;

  // Leading coefficient must be an exact rational n-th power; take its
  // positive real n-th root to fix the branch.
  const GaussianRational& lc = base.c_[off];
  if (!lc.is_real() || sgn(lc.re) <= 0)
    throw ArgumentError("PuiseuxSeries: leading coefficient not a positive rational, no n-th root branch");
  BigInt rnum, rden;
  if (!nth_root_exact(lc.re.get_num(), n, rnum) || !nth_root_exact(lc.re.get_den(), n, rden))
    throw ArgumentError("PuiseuxSeries: leading coefficient is not an exact n-th power");
  GaussianRational root0{make_rational(rnum, rden)};

  // Normalize the unit part to constant term 1, then solve n v s' = s v'
  // term by term for s = v^{1/n} with s_0 = 1.
  GaussianRational inv_lc = inverse(lc);
  std::vector<GaussianRational> v(len);
  for (i64 j = 0; j < len; ++j) v[j] = base.c_[off + j] * inv_lc;
  std::vector<GaussianRational> s(len);
  s[0] = GaussianRational(1);
  const i64 ni = static_cast<i64>(n);
  for (i64 m = 1; m < len; ++m) {
    GaussianRational acc;
    for (i64 j = 0; j < m; ++j) {
      if (s[j].is_zero() || v[m - j].is_zero()) continue;
      i64 w = m - (ni + 1) * j;
      if (w == 0) continue;
      acc += s[j] * v[m - j] * GaussianRational(w);
    }
    if (!acc.is_zero()) acc *= GaussianRational(make_rational(1, BigInt(ni) * m));
    s[m] = std::move(acc);
  }
  for (auto& x : s) x *= root0;
  return from_coeffs(base.ram_, blead / ni, std::move(s));
}

bool agree_through(const PuiseuxSeries& a, const PuiseuxSeries& b, i64 n) {
  auto [x, y] = align(a, b);
  if (x.truncation() < n || y.truncation() < n)
    throw CoverageError("agree_through: range exceeds truncation",
                        std::min(x.truncation(), y.truncation()));
  i64 start = std::min(x.lead(), y.lead());
  for (i64 k = start; k <= n; ++k)
    if (x.coeff(k) != y.coeff(k)) return false;
  return true;
}

}  // namespace asdv
