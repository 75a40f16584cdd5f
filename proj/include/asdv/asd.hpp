#pragma once

#include <string>
#include <vector>

#include "asdv/charpoly.hpp"
#include "asdv/newform.hpp"
#include "asdv/puiseux.hpp"
#include "asdv/valuation.hpp"

namespace asdv {

// One valuation audit: the three-term (or five-term) combination at index n,
// measured at one place above p against the weight 3 threshold
// 2 (1 + ord_p n).
struct CongruenceRecord {
  i64 n = 0;
  std::string place;
  i64 required = 0;
  Valuation achieved;
  bool pass = false;
};

struct CongruenceReport {
  std::string form;
  std::string newform;  // or the degree-4 polynomial description
  i64 p = 0;
  std::vector<CongruenceRecord> records;
  bool overall = true;
};

// Checks, for 1 <= n <= n_max, that
//   a_{np}(f) - b_p(g) a_n(f) + chi(p) p^2 a_{n/p}(f)
// (indices on f's q^{1/mu} grid, a_{n/p} = 0 unless p | n) has valuation at
// least 2 (1 + ord_p n) at every place above p.  Requires p coprime to the
// form's and newform's bad primes; throws CoverageError when n_max * p
// exceeds the series truncation.
CongruenceReport asd_congruence(const PuiseuxSeries& f, const std::string& form_label,
                                const NewformCoefficients& g, i64 p, i64 n_max);

// Degree-4 collective congruence from the Frobenius characteristic
// polynomial: a_{np^2} - C1 a_{np} + C2 a_n - p^2 C1 a_{n/p} + p^4 a_{n/p^2}
// must have valuation at least 2 (1 + ord_p n) at every place above p.
CongruenceReport scholl_congruence(const PuiseuxSeries& f, const std::string& form_label,
                                   const FrobeniusData& data, i64 n_max);

// For p = 2 mod 3, decides which of the conjugate trace candidates +-Bi
// pairs with the -i-eigenform by congruence satisfaction, and stores it in
// `data` (the conjugate belongs to the +i-eigenform).  Throws IntegrityError
// if neither candidate passes and ArgumentError (ambiguity) if both do.
void resolve_sign(FrobeniusData& data, const PuiseuxSeries& f_plus, i64 n_probe);

// b_p read off the factored (and, for p = 2 mod 3, sign-resolved) Frobenius
// data; label selects "g+" or "g-".
GaussianRational newform_from_counting(const FrobeniusData& data, const std::string& label);

}  // namespace asdv
