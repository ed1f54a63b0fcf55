#include "jtcalc/kostant.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace jtcalc {

RootSystemA::RootSystemA(int n) : rank(n), weyl_staircase(staircase(n)) {
    if (n < 1) throw std::invalid_argument("root system rank must be positive");
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> alpha(static_cast<std::size_t>(n), 0);
            alpha[static_cast<std::size_t>(i - 1)] = 1;
            alpha[static_cast<std::size_t>(j - 1)] = -1;
            positive_roots.push_back(Weight(std::move(alpha)));
        }
    }
}

const RootSystemA& RootSystemA::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RootSystemA>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[n];
    if (!slot) slot = std::make_unique<RootSystemA>(n);
    return *slot;
}

namespace {

// Recursion works on prefix sums s_k = v_1 + ... + v_k (k = 1..n-1): using
// root e_i - e_j with coefficient c subtracts c from s_i..s_{j-1}. Memoized
// on (root index, prefix vector), one memo per worker thread and rank.
struct PrefixMemo {
    std::unordered_map<std::vector<int>, Int, IntVectorHash> table;
};

struct Window {
    int lo;  // first 0-based prefix index touched
    int hi;  // last 0-based prefix index touched
};

std::vector<Window> root_windows(int n) {
    std::vector<Window> out;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i - 1, j - 2});
    return out;
}

Int eval(const std::vector<Window>& windows, PrefixMemo& memo, int r, std::vector<int>& s) {
    // prefixes left of the current window are frozen and must be exhausted
    int frozen_up_to = r < static_cast<int>(windows.size()) ? windows[static_cast<std::size_t>(r)].lo
                                                            : static_cast<int>(s.size());
    for (int k = 0; k < frozen_up_to; ++k)
        if (s[static_cast<std::size_t>(k)] != 0) return 0;
    if (r == static_cast<int>(windows.size())) {
        for (int k = frozen_up_to; k < static_cast<int>(s.size()); ++k)
            if (s[static_cast<std::size_t>(k)] != 0) return 0;
        return 1;
    }

    std::vector<int> key;
    key.reserve(s.size() + 1);
    key.push_back(r);
    key.insert(key.end(), s.begin(), s.end());
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

    const Window& w = windows[static_cast<std::size_t>(r)];
    int cmax = s[static_cast<std::size_t>(w.lo)];
    for (int k = w.lo + 1; k <= w.hi; ++k) cmax = std::min(cmax, s[static_cast<std::size_t>(k)]);

    Int total = 0;
    for (int c = 0; c <= cmax; ++c) {
        total += eval(windows, memo, r + 1, s);
        for (int k = w.lo; k <= w.hi; ++k) --s[static_cast<std::size_t>(k)];
    }
    for (int k = w.lo; k <= w.hi; ++k) s[static_cast<std::size_t>(k)] += cmax + 1;

    memo.table.emplace(std::move(key), total);
    return total;
}

PrefixMemo& memo_for_rank(int n) {
    thread_local std::map<int, PrefixMemo> memos;
    return memos[n];
}

const std::vector<Window>& windows_for_rank(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Window>> storage;  // node-stable
    std::lock_guard<std::mutex> lock(mu);
    auto it = storage.find(n);
    if (it == storage.end()) it = storage.emplace(n, root_windows(n)).first;
    return it->second;
}

// Shared idempotent top-level cache; persisted by the CLI memo file.
std::shared_mutex g_cache_mu;
std::unordered_map<std::string, Int> g_cache;

}  // namespace

Int kostant_p(const Weight& v) {
    const int n = v.rank();
    if (n < 1) throw std::invalid_argument("kostant_p needs rank >= 1");
    if (v.sum() != 0) return 0;
    std::vector<int> s(static_cast<std::size_t>(n - 1));
    int acc = 0;
    for (int k = 0; k + 1 < n; ++k) {
        acc += v[k];
        if (acc < 0) return 0;
        s[static_cast<std::size_t>(k)] = acc;
    }

    const std::string key = v.to_string();
    {
        std::shared_lock lock(g_cache_mu);
        if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
    }

    Int result = eval(windows_for_rank(n), memo_for_rank(n), 0, s);

    {
        std::unique_lock lock(g_cache_mu);
        g_cache.emplace(key, result);
    }
    return result;
}

Int verma_weight_mult(const Weight& lambda, const Weight& tau) {
    return kostant_p(lambda - tau);
}

std::vector<std::pair<std::string, std::string>> kostant_cache_snapshot() {
    std::shared_lock lock(g_cache_mu);
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(g_cache.size());
    for (const auto& [k, v] : g_cache) out.emplace_back(k, v.str());
    std::sort(out.begin(), out.end());
    return out;
}

void kostant_cache_preload(const std::string& key, const std::string& value) {
    Int v(value);
    std::unique_lock lock(g_cache_mu);
    g_cache.emplace(key, std::move(v));
}

void kostant_cache_clear() {
    std::unique_lock lock(g_cache_mu);
    g_cache.clear();
}

}  // namespace jtcalc
