#pragma once

#include <vector>

#include "repbasis/forms.hpp"

namespace repbasis {

/// Digit-restricted Sidon basis for N0 under x1 + g*x2 + ... + g^(m-1)*xm:
/// the nonnegative integers whose base-g^m digits are all below g.
struct GadicParams {
    i64 g = 2;
    i64 m = 2;

    /// Throws InvalidArgument unless g >= 2 and m >= 2.
    static GadicParams make(i64 g, i64 m);
};

/// Coefficients [1, g, ..., g^(m-1)].
MaryForm gadic_form(const GadicParams& p);

/// Every base-g^m digit of a is < g.
bool gadic_member(const GadicParams& p, i64 a);

/// All members <= limit, generated from digit strings (not by filtering).
IntSet gadic_set(const GadicParams& p, i64 limit);

/// The unique (a_1..a_m) in A^m with F(a) = n, by splitting the base-g digits
/// of n round-robin over the m coordinates.
std::vector<i64> gadic_decode(const GadicParams& p, i64 n);

}  // namespace repbasis
