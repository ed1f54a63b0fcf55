#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jtcalc {

// Exact arithmetic throughout; no floating point anywhere in the engine.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline Int factorial(int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

// FNV-1a style combine for small integer-vector memo keys.
struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned int>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace jtcalc
