#pragma once

#include "jtcalc/numeric.hpp"
#include "jtcalc/partition.hpp"
#include "jtcalc/weight.hpp"

namespace jtcalc {

// Number of semistandard fillings of the skew diagram with entries 1..n
// (n = content rank), rows weakly increasing, columns strictly increasing,
// value i used exactly content[i-1] times. Impossible inputs (size mismatch,
// negative content entry) count zero rather than erroring.
Int count_ssyt(const SkewShape& shape, const Weight& content);

}  // namespace jtcalc
