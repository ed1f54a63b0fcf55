#include "jtcalc/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jtcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts are not weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        // tolerate surrounding spaces
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) {
            if (parts.empty() && in.eof()) break;  // "" -> empty partition
            throw std::invalid_argument("empty token in partition");
        }
        token = token.substr(a, b - a + 1);
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition token '" + token + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("malformed partition token '" + token + "'");
        if (value < 0) throw std::invalid_argument("negative partition entry");
        parts.push_back(value);
    }
    return Partition(std::move(parts));  // constructor rejects increasing sequences
}

std::vector<int> Partition::padded(int n) const {
    if (length() > n) throw std::invalid_argument("partition has more than n parts");
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < length(); ++i) out[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)];
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::display() const { return "(" + to_string() + ")"; }

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!contains(outer, inner))
        throw std::invalid_argument("skew shape: inner partition not contained in outer");
}

std::string SkewShape::to_string() const { return outer.to_string() + "/" + inner.to_string(); }

SkewShape SkewShape::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

namespace {

void emit_partitions(int remaining, int max_value, int slots, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (slots == 0) return;
    int hi = std::min(remaining, max_value);
    for (int p = hi; p >= 1; --p) {
        // largest first part first gives reverse lexicographic order
        acc.push_back(p);
        emit_partitions(remaining - p, p, slots - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_parts) {
    if (d < 0) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(d, d, max_parts, acc, out);
    return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_boxes, int max_parts) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_boxes; ++d) {
        auto block = enumerate_partitions(d, max_parts);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> acc;
    // choose nu_i in [0, min(mu_i, nu_{i-1})], weakly decreasing by construction
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row == mu.length()) {
            out.push_back(Partition(acc));
            return;
        }
        int hi = std::min(mu.part(row), cap);
        for (int v = hi; v >= 0; --v) {
            acc.push_back(v);
            self(self, row + 1, v);
            acc.pop_back();
        }
    };
    rec(rec, 0, mu.part(0));
    return out;
}

}  // namespace jtcalc
