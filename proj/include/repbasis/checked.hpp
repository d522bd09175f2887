#pragma once

#include <cstdint>
#include <optional>

#include "repbasis/error.hpp"

namespace repbasis {

using i64 = std::int64_t;

// Overflow-checked 64-bit arithmetic. All library arithmetic on set elements
// and form values goes through these; wrapping is never silent.

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw RangeError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw RangeError("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw RangeError("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 checked_abs(i64 a) { return a < 0 ? checked_neg(a) : a; }

/// u1*x + u2*y, checked.
inline i64 linear2(i64 u1, i64 x, i64 u2, i64 y) {
    return checked_add(checked_mul(u1, x), checked_mul(u2, y));
}

inline std::optional<i64> try_mul(i64 a, i64 b) noexcept {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

/// base^exp, or nullopt on overflow.
inline std::optional<i64> try_pow(i64 base, unsigned exp) noexcept {
    i64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        auto next = try_mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

}  // namespace repbasis
