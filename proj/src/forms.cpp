#include "repbasis/forms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace repbasis {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroCoefficient: return "zero-coefficient";
    case ErrorKind::NonCoprime: return "non-coprime";
    case ErrorKind::ExcludedProduct: return "excluded-product";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Range: return "range";
    case ErrorKind::WorkCapExceeded: return "work-cap-exceeded";
    case ErrorKind::HypothesisViolated: return "hypothesis-violated";
    case ErrorKind::SearchExhausted: return "search-exhausted";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

// ---------------------------------------------------------------- IntSet

IntSet::IntSet(std::initializer_list<i64> values)
    : IntSet(from_values(std::vector<i64>(values))) {}

IntSet IntSet::from_values(std::vector<i64> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    IntSet s;
    s.elems_ = std::move(values);
    return s;
}

bool IntSet::contains(i64 x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet IntSet::with(std::span<const i64> values) const {
    std::vector<i64> all = elems_;
    all.insert(all.end(), values.begin(), values.end());
    return from_values(std::move(all));
}

i64 IntSet::max_abs() const {
    if (elems_.empty()) return 0;
    return std::max(checked_abs(elems_.front()), checked_abs(elems_.back()));
}

// ---------------------------------------------------------------- forms

i64 gcd(i64 a, i64 b) {
    a = checked_abs(a);
    b = checked_abs(b);
    return std::gcd(a, b);
}

std::array<i64, 7> seven_coefficients_unchecked(i64 u1, i64 u2) {
    const i64 sq1 = checked_mul(u1, u1);
    const i64 sq2 = checked_mul(u2, u2);
    const i64 prod = checked_mul(u1, u2);
    const i64 sum = checked_add(u1, u2);
    return {checked_neg(sq1),
            checked_neg(prod),
            prod,
            sq2,
            checked_sub(sq2, sq1),
            checked_mul(u2, sum),
            checked_neg(checked_mul(u1, sum))};
}

namespace {

void require_distinct(const std::array<i64, 7>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j])
                throw Error(ErrorKind::Internal,
                            "seven t-coefficients collide at positions " + std::to_string(i) +
                                " and " + std::to_string(j));
}

}  // namespace

LinearForm validate_form(i64 u1, i64 u2) {
    if (u1 == 0 || u2 == 0)
        throw Error(ErrorKind::ZeroCoefficient, "form coefficients must be nonzero");
    if (gcd(u1, u2) != 1)
        throw Error(ErrorKind::NonCoprime, "form coefficients must be relatively prime");
    const i64 prod = checked_mul(u1, u2);
    if (prod == 1 || prod == -1 || prod == -2)
        throw Error(ErrorKind::ExcludedProduct,
                    "u1*u2 = " + std::to_string(prod) + " is excluded (must not be 1, -1 or -2)");
    auto seven = seven_coefficients_unchecked(u1, u2);
    require_distinct(seven);
    return LinearForm(u1, u2, seven);
}

std::array<i64, 7> seven_coefficients(const LinearForm& form) {
    auto seven = seven_coefficients_unchecked(form.u1(), form.u2());
    require_distinct(seven);
    return seven;
}

MaryForm::MaryForm(std::vector<i64> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "an m-ary form needs at least two coefficients");
    i64 g = 0;
    for (i64 c : coeffs_) {
        if (c == 0) throw Error(ErrorKind::ZeroCoefficient, "form coefficients must be nonzero");
        g = gcd(g, c);
    }
    if (g != 1) throw Error(ErrorKind::NonCoprime, "form coefficients must have gcd 1");
}

i64 MaryForm::operator()(std::span<const i64> xs) const {
    if (xs.size() != coeffs_.size())
        throw Error(ErrorKind::InvalidArgument, "tuple length does not match form arity");
    i64 sum = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) sum = checked_add(sum, checked_mul(coeffs_[k], xs[k]));
    return sum;
}

ExtendedGcd extended_gcd(i64 u1, i64 u2) {
    if (u1 == 0 && u2 == 0) throw Error(ErrorKind::InvalidArgument, "extended_gcd(0, 0) is undefined");
    // INT64_MIN has no 64-bit magnitude.
    checked_abs(u1);
    checked_abs(u2);

    // Iterative Euclid on 128-bit to keep the intermediate cofactors exact.
    __extension__ typedef __int128 i128;
    i128 old_r = u1, r = u2;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 q = old_r / r;
        std::tie(old_r, r) = std::pair<i128, i128>(r, old_r - q * r);
        std::tie(old_s, s) = std::pair<i128, i128>(s, old_s - q * s);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
    }
    const i128 g = old_r;

    i128 v1;
    if (u2 == 0) {
        v1 = u1 > 0 ? 1 : -1;
    } else {
        // v1 is determined modulo |u2/g|; take the representative of least
        // magnitude, preferring the nonnegative one on ties.
        i128 step = u2 / g;
        if (step < 0) step = -step;
        i128 rem = old_s % step;
        if (rem < 0) rem += step;
        i128 alt = rem - step;
        v1 = (rem <= -alt) ? rem : alt;
    }
    i128 v2 = (u2 == 0) ? 0 : (g - static_cast<i128>(u1) * v1) / u2;

    constexpr i128 lo = std::numeric_limits<i64>::min();
    constexpr i128 hi = std::numeric_limits<i64>::max();
    if (v1 < lo || v1 > hi || v2 < lo || v2 > hi)
        throw RangeError("Bezout cofactor out of 64-bit range");
    ExtendedGcd out{static_cast<i64>(g), static_cast<i64>(v1), static_cast<i64>(v2)};
    if (static_cast<i128>(u1) * out.v1 + static_cast<i128>(u2) * out.v2 != g)
        throw Error(ErrorKind::Internal, "Bezout identity failed");
    return out;
}

BezoutPair bezout(const LinearForm& form) {
    auto e = extended_gcd(form.u1(), form.u2());
    return {e.v1, e.v2};
}

// ---------------------------------------------------------------- targets

std::string Multiplicity::to_string() const {
    return inf_ ? std::string("inf") : std::to_string(value_);
}

ZeroSetSpec ZeroSetSpec::empty() { return ZeroSetSpec(); }

ZeroSetSpec ZeroSetSpec::finite(std::vector<i64> values) {
    ZeroSetSpec z;
    z.kind_ = Kind::FiniteList;
    z.list_ = IntSet::from_values(std::move(values));
    return z;
}

ZeroSetSpec ZeroSetSpec::perfect_squares() {
    ZeroSetSpec z;
    z.kind_ = Kind::PerfectSquares;
    return z;
}

ZeroSetSpec ZeroSetSpec::powers_of(i64 base) {
    if (base < 2) throw Error(ErrorKind::InvalidArgument, "powers-of-base needs base >= 2");
    ZeroSetSpec z;
    z.kind_ = Kind::PowersOfBase;
    z.base_ = base;
    return z;
}

ZeroSetSpec ZeroSetSpec::shifted_scaled(i64 scale, i64 shift, ZeroSetSpec inner) {
    if (scale == 0) throw Error(ErrorKind::InvalidArgument, "shifted-scaled needs a nonzero scale");
    ZeroSetSpec z;
    z.kind_ = Kind::ShiftedScaled;
    z.scale_ = scale;
    z.shift_ = shift;
    z.parts_.push_back(std::move(inner));
    return z;
}

ZeroSetSpec ZeroSetSpec::union_of(std::vector<ZeroSetSpec> parts) {
    ZeroSetSpec z;
    z.kind_ = Kind::Union;
    z.parts_ = std::move(parts);
    return z;
}

namespace {

bool is_square(i64 n) {
    if (n < 0) return false;
    auto r = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && (r > n / r)) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r * r == n;
}

bool is_power_of(i64 n, i64 base) {
    if (n < 1) return false;
    while (n % base == 0) n /= base;
    return n == 1;
}

}  // namespace

bool ZeroSetSpec::contains(i64 n) const {
    switch (kind_) {
    case Kind::Empty: return false;
    case Kind::FiniteList: return list_.contains(n);
    case Kind::PerfectSquares: return is_square(n);
    case Kind::PowersOfBase: return is_power_of(n, base_);
    case Kind::ShiftedScaled: {
        __extension__ typedef __int128 i128;
        const i128 d = static_cast<i128>(n) - shift_;
        if (d % scale_ != 0) return false;
        const i128 x = d / scale_;
        if (x < std::numeric_limits<i64>::min() || x > std::numeric_limits<i64>::max()) return false;
        return parts_.front().contains(static_cast<i64>(x));
    }
    case Kind::Union:
        return std::any_of(parts_.begin(), parts_.end(), [n](const ZeroSetSpec& p) { return p.contains(n); });
    }
    return false;
}

TargetSpec::TargetSpec(Multiplicity default_value, std::map<i64, Multiplicity> overrides,
                       ZeroSetSpec zero_set)
    : default_(default_value),
      overrides_(std::move(overrides)),
      declared_zero_(zero_set),
      effective_zero_(ZeroSetSpec::empty()) {
    if (default_.is_zero())
        throw Error(ErrorKind::InvalidArgument,
                    "default value 0 makes the zero set co-finite (not density zero)");
    std::vector<i64> zero_overrides;
    for (const auto& [n, v] : overrides_) {
        if (v.is_zero()) {
            zero_overrides.push_back(n);
        } else if (declared_zero_.contains(n)) {
            throw Error(ErrorKind::InvalidArgument,
                        "override f(" + std::to_string(n) + ") = " + v.to_string() +
                            " conflicts with zero-set membership");
        }
    }
    if (zero_overrides.empty())
        effective_zero_ = declared_zero_;
    else if (declared_zero_.kind() == ZeroSetSpec::Kind::Empty)
        effective_zero_ = ZeroSetSpec::finite(std::move(zero_overrides));
    else
        effective_zero_ = ZeroSetSpec::union_of({declared_zero_, ZeroSetSpec::finite(std::move(zero_overrides))});
}

TargetSpec TargetSpec::constant(Multiplicity value) {
    return TargetSpec(value, {}, ZeroSetSpec::empty());
}

Multiplicity TargetSpec::eval(i64 n) const {
    if (auto it = overrides_.find(n); it != overrides_.end()) return it->second;
    if (declared_zero_.contains(n)) return Multiplicity(0);
    return default_;
}

}  // namespace repbasis
