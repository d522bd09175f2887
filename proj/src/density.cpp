#include "repbasis/density.hpp"

#include <algorithm>

namespace repbasis {

std::uint64_t counting_function(const IntSet& s, i64 x1, i64 x2) {
    if (x1 > x2) throw Error(ErrorKind::InvalidArgument, "counting interval has x1 > x2");
    auto first = std::lower_bound(s.begin(), s.end(), x1);
    auto last = std::upper_bound(s.begin(), s.end(), x2);
    return static_cast<std::uint64_t>(last - first);
}

std::uint64_t counting_function(const ZeroSetSpec& s, i64 x1, i64 x2) {
    if (x1 > x2) throw Error(ErrorKind::InvalidArgument, "counting interval has x1 > x2");
    std::uint64_t count = 0;
    for (i64 n = x1;; ++n) {
        if (s.contains(n)) ++count;
        if (n == x2) break;
    }
    return count;
}

DensityProfile density_profile(const ZeroSetSpec& s, const std::vector<i64>& radii) {
    DensityProfile p;
    i64 prev = 0;
    std::uint64_t running = 0;
    for (i64 x : radii) {
        if (x <= prev) throw Error(ErrorKind::InvalidArgument, "radii must be positive and strictly increasing");
        // Extend the previous count by the two new shells instead of recounting.
        if (p.radii.empty())
            running = counting_function(s, -x, x);
        else
            running += counting_function(s, -x, -prev - 1) + counting_function(s, prev + 1, x);
        const double ratio = static_cast<double>(running) / static_cast<double>(checked_add(checked_mul(2, x), 1));
        if (!p.ratios.empty() && ratio > p.ratios.back()) p.non_increasing = false;
        p.radii.push_back(x);
        p.counts.push_back(running);
        p.ratios.push_back(ratio);
        prev = x;
    }
    return p;
}

}  // namespace repbasis
