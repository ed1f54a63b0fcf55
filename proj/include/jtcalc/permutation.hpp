#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace jtcalc {

// Factorial growth: S_n enumeration is refused above this rank by default.
inline constexpr int kDefaultMaxSymmetricRank = 7;

// Element of S_n in one-line notation, with cached inversion count.
class Permutation {
public:
    explicit Permutation(std::vector<int> oneline);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(oneline_.size()); }
    int length() const { return length_; }  // number of inversions
    int sign() const { return length_ % 2 == 0 ? 1 : -1; }
    bool is_identity() const { return length_ == 0; }

    // w(i) for 1 <= i <= n.
    int apply(int i) const { return oneline_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& oneline() const { return oneline_; }
    Permutation inverse() const;

    std::string to_string() const;  // "[2,1,3]"

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> oneline_;
    int length_ = 0;
};

// Every element of S_n bucketed by inversion count; keys 0..n(n-1)/2,
// lexicographic one-line order inside each bucket.
std::map<int, std::vector<Permutation>> permutations_by_length(
    int n, int max_rank = kDefaultMaxSymmetricRank);

// Flat S_n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n, int max_rank = kDefaultMaxSymmetricRank);

}  // namespace jtcalc
