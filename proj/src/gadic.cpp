#include "repbasis/gadic.hpp"

#include <string>

namespace repbasis {

GadicParams GadicParams::make(i64 g, i64 m) {
    if (g < 2) throw Error(ErrorKind::InvalidArgument, "g must be at least 2, got " + std::to_string(g));
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "m must be at least 2, got " + std::to_string(m));
    return {g, m};
}

namespace {

void require_valid(const GadicParams& p) { GadicParams::make(p.g, p.m); }

void require_nonnegative(i64 n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "value must be nonnegative, got " + std::to_string(n));
}

}  // namespace

MaryForm gadic_form(const GadicParams& p) {
    require_valid(p);
    std::vector<i64> coeffs;
    i64 c = 1;
    for (i64 k = 0; k < p.m; ++k) {
        coeffs.push_back(c);
        if (k + 1 < p.m) c = checked_mul(c, p.g);
    }
    return MaryForm(std::move(coeffs));
}

bool gadic_member(const GadicParams& p, i64 a) {
    require_valid(p);
    require_nonnegative(a);
    const auto radix = try_pow(p.g, static_cast<unsigned>(p.m));
    if (!radix) return a < p.g;  // a is a single base-g^m digit
    for (; a > 0; a /= *radix)
        if (a % *radix >= p.g) return false;
    return true;
}

IntSet gadic_set(const GadicParams& p, i64 limit) {
    require_valid(p);
    if (limit < 0) return {};
    const auto radix = try_pow(p.g, static_cast<unsigned>(p.m));
    std::vector<i64> members{0};
    // Every member built so far is below `place`, so appending a digit at
    // `place` never collides with an existing one.
    for (std::optional<i64> place = 1; place && *place <= limit; place = radix ? try_mul(*place, *radix) : std::nullopt) {
        const std::size_t existing = members.size();
        for (i64 d = 1; d < p.g; ++d) {
            const auto step = try_mul(d, *place);
            if (!step || *step > limit) break;
            for (std::size_t k = 0; k < existing; ++k) {
                const i64 v = checked_add(members[k], *step);
                if (v <= limit) members.push_back(v);
            }
        }
    }
    return IntSet::from_values(std::move(members));
}

std::vector<i64> gadic_decode(const GadicParams& p, i64 n) {
    const MaryForm form = gadic_form(p);
    require_nonnegative(n);
    const auto& coeffs = form.coefficients();
    const auto m = coeffs.size();
    std::vector<i64> tuple(m, 0);
    // Base-g digit j of n (weight g^j) goes to coordinate j mod m with weight
    // g^j / g^(j mod m). g^j <= n while digits remain, so nothing overflows.
    i64 weight = 1;
    for (i64 rest = n, j = 0; rest > 0; rest /= p.g, ++j) {
        const auto k = static_cast<std::size_t>(j % p.m);
        tuple[k] = checked_add(tuple[k], checked_mul(rest % p.g, weight / coeffs[k]));
        if (rest / p.g > 0) weight = checked_mul(weight, p.g);
    }
    if (form(tuple) != n) throw Error(ErrorKind::Internal, "g-adic decode failed to reconstruct n");
    return tuple;
}

}  // namespace repbasis
