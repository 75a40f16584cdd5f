#include "asdv/counting.hpp"

namespace asdv {

namespace {

FiniteField::Elem eval_poly(const QPoly& p, const FiniteField& field,
                            const FiniteField::Elem& t) {
  FiniteField::Elem acc = field.zero();
  for (int i = p.degree(); i >= 0; --i) {
    const BigRational& c = p.coeff(i);
    if (!is_integer(c)) throw IntegrityError("eval_poly: non-integral coefficient");
    i64 cv = mpz_fdiv_ui(c.get_num().get_mpz_t(), static_cast<unsigned long>(field.p()));
    acc = field.add(field.mul(acc, t), FiniteField::Elem{static_cast<i64>(cv), 0});
  }
  return acc;
}

}  // namespace

std::string encode_t(const FiniteField& field, const FiniteField::Elem& t) {
  if (field.degree() == 1 || t.b == 0) return std::to_string(t.a);
  return std::to_string(t.a) + "," + std::to_string(t.b);
}

i64 count_fiber(const WeierstrassFamily& fam, const FiniteField& field,
                const FiniteField::Elem& t) {
  using Elem = FiniteField::Elem;
  Elem a1 = eval_poly(fam.a1, field, t);
  Elem a2 = eval_poly(fam.a2, field, t);
  Elem a3 = eval_poly(fam.a3, field, t);
  Elem a4 = eval_poly(fam.a4, field, t);
  Elem a6 = eval_poly(fam.a6, field, t);

  // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6 has, per x, 1 + chi(D)
  // solutions in y where D = (a1 x + a3)^2 + 4(x^3 + a2 x^2 + a4 x + a6).
  const i64 q = field.q();
  Elem four = field.from_int(4);
  i64 count = 1;  // point at infinity
  for (i64 idx = 0; idx < q; ++idx) {
    Elem x = field.element(idx);
    Elem lin = field.add(field.mul(a1, x), a3);
    Elem rhs = field.add(field.mul(field.add(field.mul(field.add(x, a2), x), a4), x), a6);
    Elem d = field.add(field.mul(lin, lin), field.mul(four, rhs));
    count += 1 + field.chi(d);
  }
  return count;
}

std::vector<FiberCount> count_all_fibers(const WeierstrassFamily& fam, const FiniteField& field,
                                         CountCache* cache) {
  QPoly disc = discriminant_poly(fam);
  const i64 q = field.q();
  std::vector<FiberCount> out;
  out.reserve(q + 1);

  auto counted = [&](const std::string& t_enc, auto compute) {
    FiberCount fc;
    fc.t_enc = t_enc;
    if (cache) {
      if (auto hit = cache->lookup(fam.family_id, q, t_enc)) {
        fc.count = *hit;
        fc.from_cache = true;
        return fc;
      }
    }
    fc.count = compute();
    if (cache) cache->append(fam.family_id, q, t_enc, fc.count);
    return fc;
  };

  for (i64 idx = 0; idx < q; ++idx) {
    FiniteField::Elem t = field.element(idx);
    FiberCount fc =
        counted(encode_t(field, t), [&] { return count_fiber(fam, field, t); });
    fc.singular = field.is_zero(eval_poly(disc, field, t));
    out.push_back(std::move(fc));
  }
  // t = infinity: both families degenerate there, and the base involution
  // identifies the fiber with the one at t = 0.
  FiberCount inf = counted("inf", [&] { return count_fiber(fam, field, field.zero()); });
  inf.singular = true;
  out.push_back(std::move(inf));
  return out;
}

i64 frobenius_trace(const WeierstrassFamily& fam, const FiniteField& field, CountCache* cache) {
  const i64 q = field.q();
  i64 trace = 0;
  for (const FiberCount& fc : count_all_fibers(fam, field, cache))
    trace -= 1 + q - fc.count;
  return trace;
}

}  // namespace asdv
