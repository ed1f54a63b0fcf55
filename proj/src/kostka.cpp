#include "jtcalc/kostka.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "jtcalc/kostant.hpp"
#include "jtcalc/permutation.hpp"

namespace jtcalc {

namespace {

std::shared_mutex g_cache_mu;
std::unordered_map<std::string, Int> g_cache;

Int signed_kostant_sum(const Partition& lambda, const Weight& tau) {
    const int n = tau.rank();
    const Weight lam = Weight::from_partition(lambda, n);
    Int total = 0;
    for (const auto& v : symmetric_group(n)) {
        Int p = kostant_p(dot(v, lam) - tau);
        if (v.sign() > 0)
            total += p;
        else
            total -= p;
    }
    return total;
}

}  // namespace

Int kostka_weyl_raw(const Partition& lambda, const Weight& tau) {
    if (lambda.length() > tau.rank())
        throw std::invalid_argument("kostka: partition has more parts than the rank");
    return signed_kostant_sum(lambda, tau);
}

Int kostka(const Partition& lambda, const Weight& tau) {
    if (lambda.length() > tau.rank())
        throw std::invalid_argument("kostka: partition has more parts than the rank");
    if (tau.sum() != lambda.size()) return 0;
    for (int i = 0; i < tau.rank(); ++i)
        if (tau[i] < 0) return 0;  // dim L(lambda)_tau = 0 off the polynomial weights

    const std::string key = lambda.to_string() + "|" + tau.to_string();
    {
        std::shared_lock lock(g_cache_mu);
        if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
    }
    Int result = signed_kostant_sum(lambda, tau);
    {
        std::unique_lock lock(g_cache_mu);
        g_cache.emplace(key, result);
    }
    return result;
}

Int image_weight_mult(const Partition& nu, int k, const Weight& tau) {
    const int n = tau.rank();
    if (nu.length() > n)
        throw std::invalid_argument("image_weight_mult: partition has more parts than the rank");
    if (k < 0 || k > n * (n - 1) / 2)
        throw std::invalid_argument("image_weight_mult: k out of range");
    const Weight nuw = Weight::from_partition(nu, n);
    Int total = 0;
    for (const auto& w : symmetric_group(n)) {
        if (w.length() < k) continue;
        Int p = kostant_p(dot(w, nuw) - tau);
        if (w.sign() > 0)
            total += p;
        else
            total -= p;
    }
    return (k % 2 == 0) ? total : -total;
}

std::vector<std::pair<std::string, std::string>> kostka_cache_snapshot() {
    std::shared_lock lock(g_cache_mu);
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(g_cache.size());
    for (const auto& [k, v] : g_cache) out.emplace_back(k, v.str());
    std::sort(out.begin(), out.end());
    return out;
}

void kostka_cache_preload(const std::string& key, const std::string& value) {
    Int v(value);
    std::unique_lock lock(g_cache_mu);
    g_cache.emplace(key, std::move(v));
}

void kostka_cache_clear() {
    std::unique_lock lock(g_cache_mu);
    g_cache.clear();
}

}  // namespace jtcalc
