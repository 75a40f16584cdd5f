#pragma once

#include <string>
#include <vector>

#include "asdv/count_cache.hpp"
#include "asdv/finite_field.hpp"
#include "asdv/weierstrass.hpp"

namespace asdv {

std::string encode_t(const FiniteField& field, const FiniteField::Elem& t);

// Number of F_q points of the fiber at t, counting affine Weierstrass
// solutions plus the point at infinity; valid at singular fibers too (the
// points of the singular cubic itself are counted).
i64 count_fiber(const WeierstrassFamily& fam, const FiniteField& field,
                const FiniteField::Elem& t);

struct FiberCount {
  std::string t_enc;
  i64 count = 0;
  bool singular = false;
  bool from_cache = false;
};

// Counts for every point of P^1(F_q).  The fiber at t = infinity equals the
// fiber at t = 0 through the Q-rational base involution t -> -1/t, which is
// verified symbolically by involution_check().
std::vector<FiberCount> count_all_fibers(const WeierstrassFamily& fam, const FiniteField& field,
                                         CountCache* cache = nullptr);

// -sum over x in P^1(F_q) of (1 + q - #fiber(x)).
i64 frobenius_trace(const WeierstrassFamily& fam, const FiniteField& field,
                    CountCache* cache = nullptr);

}  // namespace asdv
