#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "jtcalc/partition.hpp"
#include "jtcalc/permutation.hpp"

namespace jtcalc {

// Integer weight vector of fixed rank n; entries may be negative.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}

    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static Weight parse(std::string_view text);  // "a,b,c" with signed entries

    // From a partition, zero-padded to rank n; requires length() <= n.
    static Weight from_partition(const Partition& p, int n) { return Weight(p.padded(n)); }

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    int sum() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;

    // Requires all entries weakly decreasing and non-negative.
    Partition to_partition() const { return Partition(entries_); }

    std::string to_string() const;  // "a,b,c"

    auto operator<=>(const Weight&) const = default;

private:
    std::vector<int> entries_;
};

// delta = (n-1, n-2, ..., 1, 0); n >= 1.
Weight staircase(int n);

// Standard permutation action: result[i] = v[w^{-1}(i)].
Weight act(const Permutation& w, const Weight& v);

// Dot action w . lambda = w(lambda + delta) - delta.
Weight dot(const Permutation& w, const Weight& lambda);

}  // namespace jtcalc
