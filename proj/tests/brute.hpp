#pragma once

// Test-only brute force. Deliberately naive and independent of the library's
// counting routes: plain loops over vectors and std::map tallies.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace brute {

using i64 = std::int64_t;
using Tally = std::map<i64, std::uint64_t>;

inline Tally pair_tally(const std::vector<i64>& a, i64 u1, i64 u2) {
    Tally t;
    for (i64 x : a)
        for (i64 y : a) ++t[u1 * x + u2 * y];
    return t;
}

inline std::uint64_t count(const Tally& t, i64 n) {
    auto it = t.find(n);
    return it == t.end() ? 0 : it->second;
}

/// Every tuple of A^m, no pruning.
inline Tally tuple_tally(const std::vector<i64>& a, const std::vector<i64>& coeffs) {
    Tally t;
    std::vector<std::size_t> idx(coeffs.size(), 0);
    if (a.empty()) return t;
    while (true) {
        i64 v = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * a[idx[k]];
        ++t[v];
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == a.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return t;
}

/// All tuples of A^m mapping to n.
inline std::vector<std::vector<i64>> tuples_for(const std::vector<i64>& a, const std::vector<i64>& coeffs, i64 n) {
    std::vector<std::vector<i64>> out;
    std::vector<std::size_t> idx(coeffs.size(), 0);
    if (a.empty()) return out;
    while (true) {
        i64 v = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * a[idx[k]];
        if (v == n) {
            std::vector<i64> tup;
            for (auto i : idx) tup.push_back(a[i]);
            out.push_back(tup);
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == a.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

/// The five conclusion clauses for C = A' u {x, y}, from scratch.
inline bool conclusion_holds(const std::vector<i64>& a_prime, i64 b, const std::function<bool(i64)>& in_w,
                             i64 x, i64 y, i64 u1, i64 u2) {
    std::set<i64> as(a_prime.begin(), a_prime.end());
    if (x == y || as.count(x) || as.count(y)) return false;
    std::vector<i64> c(a_prime);
    c.push_back(x);
    c.push_back(y);
    const Tally before = pair_tally(a_prime, u1, u2);
    const Tally after = pair_tally(c, u1, u2);
    if (count(after, b) != count(before, b) + 1) return false;
    for (const auto& [n, k] : before)
        if (n != b && count(after, n) != k) return false;
    for (const auto& [n, k] : after)
        if (n != b && !before.count(n) && k != 1) return false;
    for (const auto& [n, k] : after)
        if (in_w(n)) return false;
    return true;
}

}  // namespace brute
