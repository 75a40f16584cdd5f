#include "asdv/galois.hpp"

#include <algorithm>
#include <sstream>

#include "asdv/characters.hpp"
#include "asdv/errors.hpp"

namespace asdv {

namespace {

using ModPoly = std::vector<i64>;  // low to high, normalized mod p

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly normalize(i64 p, std::vector<i64> c) {
  for (auto& x : c) {
    x %= p;
    if (x < 0) x += p;
  }
  trim(c);
  return c;
}

ModPoly mul_mod(i64 p, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

i64 inv_mod(i64 a, i64 p) {
  i64 r = 1, e = p - 2, base = a % p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

ModPoly rem_mod(i64 p, ModPoly a, const ModPoly& b) {
  i64 inv_lead = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    i64 factor = a.back() * inv_lead % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

ModPoly gcd_mod(i64 p, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = rem_mod(p, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    i64 inv_lead = inv_mod(a.back(), p);
    for (auto& x : a) x = x * inv_lead % p;
  }
  return a;
}

ModPoly derivative_mod(i64 p, const ModPoly& f) {
  ModPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
  trim(d);
  return d;
}

ModPoly div_exact_mod(i64 p, const ModPoly& a, const ModPoly& b) {
  ModPoly q(a.size() - b.size() + 1, 0);
  ModPoly r = a;
  i64 inv_lead = inv_mod(b.back(), p);
  while (r.size() >= b.size()) {
    i64 factor = r.back() * inv_lead % p;
    size_t shift = r.size() - b.size();
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = ((r[shift + i] - factor * b[i]) % p + p) % p;
    trim(r);
    if (r.empty()) break;
  }
  if (!r.empty()) throw IntegrityError("div_exact_mod: division not exact");
  trim(q);
  return q;
}

// x^(p^k) mod f by iterating the p-th power map.
ModPoly frobenius_power(i64 p, const ModPoly& f, const ModPoly& start) {
  ModPoly base = start;
  i64 e = p;
  ModPoly result{1};
  ModPoly acc = base;
  while (e > 0) {
    if (e & 1) result = rem_mod(p, mul_mod(p, result, acc), f);
    acc = rem_mod(p, mul_mod(p, acc, acc), f);
    e >>= 1;
  }
  return result;
}

}  // namespace

PolynomialModP PolynomialModP::reduce(i64 p, const std::vector<i64>& coeffs) {
  if (p < 2 || !is_probable_prime(BigInt(p)))
    throw ArgumentError("PolynomialModP: modulus must be prime");
  PolynomialModP f;
  f.p = p;
  f.c = normalize(p, coeffs);
  if (f.c.empty()) throw ArgumentError("PolynomialModP: zero reduction");
  return f;
}

bool squarefree_mod_p(const PolynomialModP& f) {
  ModPoly d = derivative_mod(f.p, f.c);
  if (d.empty()) return false;
  return gcd_mod(f.p, f.c, d).size() == 1;
}

std::vector<int> frobenius_cycle_type(const PolynomialModP& f) {
  if (!squarefree_mod_p(f))
    throw ArgumentError("frobenius_cycle_type: reduction mod " + std::to_string(f.p) +
                        " is not squarefree (ramified prime)");
  const i64 p = f.p;
  // Make monic.
  ModPoly rest = f.c;
  i64 inv_lead = inv_mod(rest.back(), p);
  for (auto& x : rest) x = x * inv_lead % p;

  std::vector<int> parts;
  ModPoly x{0, 1};
  ModPoly xq = rem_mod(p, x, rest);  // x^(p^d) mod rest, starting at d = 0
  for (int d = 1; static_cast<int>(rest.size()) - 1 >= 2 * d; ++d) {
    xq = frobenius_power(p, rest, xq);
    // gcd(rest, x^(p^d) - x) collects the degree-d irreducible factors.
    ModPoly diff = xq;
    diff.resize(std::max(diff.size(), size_t{2}), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    ModPoly g = diff.empty() ? rest : gcd_mod(p, rest, diff);
    if (g.size() > 1) {
      int count = (static_cast<int>(g.size()) - 1) / d;
      for (int i = 0; i < count; ++i) parts.push_back(d);
      rest = div_exact_mod(p, rest, g);
      xq = rem_mod(p, xq, rest);
    }
  }
  if (rest.size() > 1) parts.push_back(static_cast<int>(rest.size()) - 1);
  std::sort(parts.begin(), parts.end());
  return parts;
}

BigInt polynomial_discriminant(const std::vector<BigInt>& coeffs) {
  // disc = (-1)^{n(n-1)/2} Res(f, f') / lc(f), with the resultant as the
  // Sylvester determinant.
  std::vector<BigInt> f = coeffs;
  while (!f.empty() && f.back() == 0) f.pop_back();
  int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw ArgumentError("polynomial_discriminant: degree must be >= 1");
  std::vector<BigInt> df(n);
  for (int i = 1; i <= n; ++i) df[i - 1] = f[i] * i;
  int m = n - 1;
  int size = n + m;
  std::vector<std::vector<BigRational>> s(size, std::vector<BigRational>(size, BigRational(0)));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s[row][row + k] = BigRational(f[n - k]);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s[m + row][row + k] = BigRational(df[m - k]);
  // Gaussian elimination.
  BigRational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row)
      if (sgn(s[row][col]) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return BigInt(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    BigRational inv = BigRational(1) / s[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (sgn(s[row][col]) == 0) continue;
      BigRational factor = s[row][col] * inv;
      for (int k = col; k < size; ++k) s[row][k] -= factor * s[col][k];
    }
  }
  BigRational res = det;
  int sign_exp = (n * (n - 1) / 2) % 2;
  BigRational disc = res / BigRational(f[n]);
  if (sign_exp == 1) disc = -disc;
  if (!is_integer(disc)) throw IntegrityError("polynomial_discriminant: non-integral result");
  return disc.get_num();
}

std::array<int, 3> mod_lambda_charpoly(const FrobeniusData& data) {
  if (data.beta_candidates.empty())
    throw ArgumentError("mod_lambda_charpoly: factor_over_qi has not run");
  // Reduction Z[i] -> F_2 sends a+bi to a+b mod 2; the constant chi p^2 maps
  // to 1 for every odd p, and the sign of beta is irrelevant.
  const GaussianRational& beta = data.beta_candidates.front();
  BigInt re = beta.re.get_num();
  BigInt im = beta.im.get_num();
  int t_coeff = static_cast<int>((abs(re) + abs(im)) % 2 != 0);
  return {1, t_coeff, 1};
}

std::vector<std::vector<BigInt>> quartic_resolvents() {
  return {
      {BigInt(-3), BigInt(-4), BigInt(0), BigInt(0), BigInt(1)},    // x^4 - 4x - 3
      {BigInt(6), BigInt(-8), BigInt(0), BigInt(0), BigInt(1)},     // x^4 - 8x + 6
      {BigInt(12), BigInt(-16), BigInt(-12), BigInt(0), BigInt(1)}, // x^4 - 12x^2 - 16x + 12
  };
}

std::vector<BigInt> resolvent_cubic() {
  return {BigInt(-2), BigInt(3), BigInt(0), BigInt(1)};  // x^3 + 3x - 2
}

namespace {

std::string int_poly_str(const std::vector<BigInt>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

DeviationProbe deviation_probe(const std::vector<i64>& primes,
                               const std::vector<FrobeniusData>& table) {
  DeviationProbe out;
  for (const auto& quartic : quartic_resolvents()) {
    QuarticRow row;
    row.poly = quartic;
    row.poly_str = int_poly_str(quartic);
    row.discriminant = polynomial_discriminant(quartic);
    for (i64 p : primes) {
      if (p == 2 || p == 3) continue;
      std::vector<i64> reduced;
      for (const auto& c : quartic) reduced.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
      auto type = frobenius_cycle_type(PolynomialModP::reduce(p, reduced));
      bool order4 = std::find(type.begin(), type.end(), 4) != type.end();
      if (order4) row.order4_primes.push_back(p);
      row.cycle_types.emplace_back(p, std::move(type));
    }
    out.quartics.push_back(std::move(row));
  }

  for (const auto& data : table) {
    if (mod_lambda_charpoly(data)[1] == 1) out.odd_trace_primes.push_back(data.p);
  }
  std::sort(out.odd_trace_primes.begin(), out.odd_trace_primes.end());

  // Q(sqrt(-6)) sits inside the cubic resolvent field, so the auxiliary
  // quadratic fields are the remaining six.
  for (i64 d : {2, 3, 6, -1, -2, -3}) {
    std::vector<i64> inert;
    for (i64 p : out.odd_trace_primes)
      if (is_inert_quadratic(d, p)) inert.push_back(p);
    out.inert_odd_trace.emplace_back(d, std::move(inert));
  }
  return out;
}

}  // namespace asdv
