#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "jtcalc/numeric.hpp"
#include "jtcalc/partition.hpp"

namespace jtcalc::detail {

// Dense homogeneous polynomial as exponent-vector -> integer coefficient.
// std::map keeps lex order on the keys, which doubles as the monomial order
// for exact division.
using ExpMap = std::map<std::vector<int>, Int>;

// All distinct rearrangements of the partition padded to length n.
inline ExpMap spread_monomial(const Partition& key, int n) {
    std::vector<int> e = key.padded(n);
    std::sort(e.begin(), e.end());
    ExpMap out;
    do {
        out.emplace(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

// Complete homogeneous h_k in n variables: every degree-k exponent vector.
inline ExpMap spread_h(int k, int n) {
    ExpMap out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            e[static_cast<std::size_t>(pos)] = left;
            out.emplace(e, 1);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (n == 0) return out;
    rec(rec, 0, k);
    return out;
}

inline ExpMap multiply(const ExpMap& a, const ExpMap& b) {
    ExpMap out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace jtcalc::detail
