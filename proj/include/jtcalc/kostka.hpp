#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jtcalc/numeric.hpp"
#include "jtcalc/partition.hpp"
#include "jtcalc/weight.hpp"

namespace jtcalc {

// K_{lambda,tau} as the signed sum over S_n of Kostant values at v.lambda - tau
// (n = tau.rank()). Equals the SSYT count of shape lambda and content tau; that
// equality is a tested invariant, not an assumption. Returns 0 outright when
// |lambda| != sum(tau) or tau has a negative entry.
Int kostka(const Partition& lambda, const Weight& tau);

// The same signed sum with no early-out shortcuts; verification entry point
// used to check that the sum itself vanishes off-support.
Int kostka_weyl_raw(const Partition& lambda, const Weight& tau);

// Weight multiplicity of tau in V(nu,k), the image of the k-th BGG boundary
// map: (-1)^k sum over length >= k of (-1)^{l(w)} p(w.nu - tau). A genuine
// module multiplicity, so non-negative (tested, never assumed).
Int image_weight_mult(const Partition& nu, int k, const Weight& tau);

std::vector<std::pair<std::string, std::string>> kostka_cache_snapshot();
void kostka_cache_preload(const std::string& key, const std::string& value);
void kostka_cache_clear();

}  // namespace jtcalc
