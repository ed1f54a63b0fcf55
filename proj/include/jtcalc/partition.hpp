#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace jtcalc {

// A partition is a weakly decreasing sequence of non-negative integers,
// stored in canonical form (no trailing zeros). Two partitions are equal
// iff their canonical forms are equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                                // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }    // nonzero parts
    bool empty() const { return parts_.empty(); }

    // Zero-padded access: part(i) = 0 beyond the canonical length.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    // Entries as a length-n vector; requires length() <= n.
    std::vector<int> padded(int n) const;

    std::string to_string() const;  // "3,2,1"; empty partition -> ""
    std::string display() const;    // "(3,2,1)"; empty partition -> "()"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// outer/inner with inner contained in outer componentwise.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    int size() const { return outer.size() - inner.size(); }
    std::string to_string() const;  // "outer/inner"

    static SkewShape parse(std::string_view text);  // "3,2,1/1,1"
};

// true iff inner fits inside outer componentwise after zero-padding.
bool contains(const Partition& outer, const Partition& inner);

// All partitions of d with at most max_parts parts, reverse lexicographic.
std::vector<Partition> enumerate_partitions(int d, int max_parts);

// All partitions of total <= max_boxes with at most max_parts parts,
// grouped by ascending size, reverse lex within a size (sweep driver order).
std::vector<Partition> enumerate_partitions_up_to(int max_boxes, int max_parts);

// All sub-partitions nu of mu (nu contained in mu), deterministic order.
std::vector<Partition> enumerate_subpartitions(const Partition& mu);

}  // namespace jtcalc
