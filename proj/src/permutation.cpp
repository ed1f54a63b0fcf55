#include "jtcalc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jtcalc {

namespace {

int inversion_count(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

}  // namespace

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    std::vector<bool> seen(oneline_.size(), false);
    for (int v : oneline_) {
        if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("one-line notation is not a rearrangement of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    length_ = inversion_count(oneline_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(oneline_.size());
    for (std::size_t i = 0; i < oneline_.size(); ++i)
        inv[static_cast<std::size_t>(oneline_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < oneline_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(oneline_[i]);
    }
    return out + "]";
}

std::vector<Permutation> symmetric_group(int n, int max_rank) {
    if (n < 1) throw std::invalid_argument("symmetric group rank must be positive");
    if (n > max_rank) throw std::invalid_argument("symmetric group rank exceeds configured bound");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::map<int, std::vector<Permutation>> permutations_by_length(int n, int max_rank) {
    std::map<int, std::vector<Permutation>> buckets;
    for (int k = 0; k <= n * (n - 1) / 2; ++k) buckets[k];  // all keys present
    for (auto& w : symmetric_group(n, max_rank)) {
        int len = w.length();
        buckets[len].push_back(std::move(w));
    }
    return buckets;
}

}  // namespace jtcalc
