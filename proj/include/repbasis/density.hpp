#pragma once

#include <cstdint>
#include <vector>

#include "repbasis/forms.hpp"

namespace repbasis {

/// Number of members of S in [x1, x2].
std::uint64_t counting_function(const IntSet& s, i64 x1, i64 x2);
/// Same for a zero-set spec, by one membership query per integer.
std::uint64_t counting_function(const ZeroSetSpec& s, i64 x1, i64 x2);

/// S(-x, x) / (2x + 1) sampled at increasing radii.
struct DensityProfile {
    std::vector<i64> radii;
    std::vector<std::uint64_t> counts;
    std::vector<double> ratios;
    bool non_increasing = true;  ///< observed trend only; never enforced
};

DensityProfile density_profile(const ZeroSetSpec& s, const std::vector<i64>& radii);

}  // namespace repbasis
