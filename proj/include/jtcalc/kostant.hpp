#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jtcalc/numeric.hpp"
#include "jtcalc/weight.hpp"

namespace jtcalc {

// Type-A root data for sl_n: positive roots e_i - e_j (i < j) in lex (i,j)
// order, and the staircase delta standing in for the Weyl vector.
struct RootSystemA {
    int rank;
    std::vector<Weight> positive_roots;
    Weight weyl_staircase;

    explicit RootSystemA(int n);
    static const RootSystemA& get(int n);
};

// Kostant partition function: the number of ways to write v as a non-negative
// integer combination of the positive roots of sl_n, n = v.rank(). Zero when
// the entries do not sum to 0 or some prefix sum is negative.
Int kostant_p(const Weight& v);

// dim Delta(lambda)_tau = p(lambda - tau).
Int verma_weight_mult(const Weight& lambda, const Weight& tau);

// Top-level value cache plumbing for the persistent memo file. The cache is
// an optimization only; values are always re-derivable.
std::vector<std::pair<std::string, std::string>> kostant_cache_snapshot();
void kostant_cache_preload(const std::string& key, const std::string& value);
void kostant_cache_clear();

}  // namespace jtcalc
