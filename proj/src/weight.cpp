#include "jtcalc/weight.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jtcalc {

Weight Weight::parse(std::string_view text) {
    std::vector<int> entries;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) {
            if (entries.empty() && in.eof()) break;
            throw std::invalid_argument("empty token in weight");
        }
        token = token.substr(a, b - a + 1);
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed weight token '" + token + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("malformed weight token '" + token + "'");
        entries.push_back(value);
    }
    return Weight(std::move(entries));
}

int Weight::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

Weight Weight::operator+(const Weight& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("weight rank mismatch");
    std::vector<int> out(entries_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.entries_[i];
    return Weight(std::move(out));
}

Weight Weight::operator-(const Weight& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("weight rank mismatch");
    std::vector<int> out(entries_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.entries_[i];
    return Weight(std::move(out));
}

std::string Weight::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

Weight staircase(int n) {
    if (n < 1) throw std::invalid_argument("staircase rank must be positive");
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = n - 1 - i;
    return Weight(std::move(d));
}

Weight act(const Permutation& w, const Weight& v) {
    if (w.degree() != v.rank()) throw std::invalid_argument("permutation/weight rank mismatch");
    std::vector<int> out(static_cast<std::size_t>(v.rank()));
    // entry at source position j lands at target position w(j)
    for (int j = 1; j <= v.rank(); ++j) out[static_cast<std::size_t>(w.apply(j) - 1)] = v[j - 1];
    return Weight(std::move(out));
}

Weight dot(const Permutation& w, const Weight& lambda) {
    Weight delta = staircase(lambda.rank());
    return act(w, lambda + delta) - delta;
}

}  // namespace jtcalc
