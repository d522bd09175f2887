#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "repbasis/checked.hpp"

namespace repbasis {

/// Closed integer interval [lo, hi].
struct Window {
    i64 lo = 0;
    i64 hi = 0;

    bool contains(i64 n) const noexcept { return lo <= n && n <= hi; }
    friend bool operator==(const Window&, const Window&) = default;
};

/// Finite set of integers stored as a strictly increasing sequence.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<i64> values);
    /// Sorts and removes duplicates.
    static IntSet from_values(std::vector<i64> values);

    bool contains(i64 x) const;
    /// Copy of this set with `values` added.
    IntSet with(std::span<const i64> values) const;

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    i64 min() const { return elems_.front(); }
    i64 max() const { return elems_.back(); }
    /// max |a| over the set; 0 when empty.
    i64 max_abs() const;

    const std::vector<i64>& values() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    std::vector<i64> elems_;
};

/// F(x1, x2) = u1*x1 + u2*x2 with nonzero coprime coefficients and
/// u1*u2 not in {1, -1, -2}. Only obtainable through validate_form().
class LinearForm {
public:
    i64 u1() const noexcept { return u1_; }
    i64 u2() const noexcept { return u2_; }
    i64 operator()(i64 x1, i64 x2) const { return linear2(u1_, x1, u2_, x2); }
    const std::array<i64, 7>& certificate() const noexcept { return seven_; }

    friend bool operator==(const LinearForm& a, const LinearForm& b) noexcept {
        return a.u1_ == b.u1_ && a.u2_ == b.u2_;
    }

private:
    friend LinearForm validate_form(i64 u1, i64 u2);
    LinearForm(i64 u1, i64 u2, std::array<i64, 7> seven) : u1_(u1), u2_(u2), seven_(seven) {}

    i64 u1_;
    i64 u2_;
    std::array<i64, 7> seven_;
};

/// u1*x1 + ... + um*xm, m >= 2, nonzero coefficients with gcd 1.
class MaryForm {
public:
    explicit MaryForm(std::vector<i64> coefficients);

    std::size_t arity() const noexcept { return coeffs_.size(); }
    const std::vector<i64>& coefficients() const noexcept { return coeffs_; }
    i64 operator()(std::span<const i64> xs) const;

private:
    std::vector<i64> coeffs_;
};

struct BezoutPair {
    i64 v1 = 0;
    i64 v2 = 0;
    friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

struct ExtendedGcd {
    i64 g = 0;
    i64 v1 = 0;
    i64 v2 = 0;
    friend bool operator==(const ExtendedGcd&, const ExtendedGcd&) = default;
};

LinearForm validate_form(i64 u1, i64 u2);

/// The seven t-coefficients [-u1^2, -u1u2, u1u2, u2^2, u2^2-u1^2,
/// u2(u1+u2), -u1(u1+u2)], computed without any validity check.
std::array<i64, 7> seven_coefficients_unchecked(i64 u1, i64 u2);

/// Same as above for a valid form; throws Internal if two values coincide.
std::array<i64, 7> seven_coefficients(const LinearForm& form);

/// g = gcd(u1,u2) > 0 and u1*v1 + u2*v2 = g, with |v1| minimal and ties
/// broken toward v1 >= 0.
ExtendedGcd extended_gcd(i64 u1, i64 u2);

/// The canonical Bezout pair of a valid form (u1*v1 + u2*v2 = 1).
BezoutPair bezout(const LinearForm& form);

/// Element of N0 extended by infinity.
class Multiplicity {
public:
    constexpr Multiplicity() = default;
    constexpr explicit Multiplicity(std::uint64_t v) : value_(v) {}
    static constexpr Multiplicity infinity() {
        Multiplicity m;
        m.inf_ = true;
        return m;
    }

    constexpr bool is_infinite() const noexcept { return inf_; }
    constexpr bool is_zero() const noexcept { return !inf_ && value_ == 0; }
    /// Finite value; meaningless when infinite.
    constexpr std::uint64_t value() const noexcept { return value_; }
    /// True when `count` does not exceed this multiplicity.
    constexpr bool admits(std::uint64_t count) const noexcept { return inf_ || count <= value_; }
    /// min(this, cap) as a finite number.
    constexpr std::uint64_t capped(std::uint64_t cap) const noexcept {
        return inf_ ? cap : (value_ < cap ? value_ : cap);
    }

    std::string to_string() const;

    friend constexpr bool operator==(const Multiplicity&, const Multiplicity&) = default;

private:
    std::uint64_t value_ = 0;
    bool inf_ = false;
};

/// Decidable zero-set shapes, all of asymptotic density zero.
class ZeroSetSpec {
public:
    enum class Kind { Empty, FiniteList, PerfectSquares, PowersOfBase, ShiftedScaled, Union };

    static ZeroSetSpec empty();
    static ZeroSetSpec finite(std::vector<i64> values);
    static ZeroSetSpec perfect_squares();
    /// {1, k, k^2, ...}, k >= 2.
    static ZeroSetSpec powers_of(i64 base);
    /// {scale*x + shift : x in inner}, scale != 0.
    static ZeroSetSpec shifted_scaled(i64 scale, i64 shift, ZeroSetSpec inner);
    /// Finite union; density zero is preserved under finite unions.
    static ZeroSetSpec union_of(std::vector<ZeroSetSpec> parts);

    Kind kind() const noexcept { return kind_; }
    bool contains(i64 n) const;

    const IntSet& list() const noexcept { return list_; }
    i64 base() const noexcept { return base_; }
    i64 scale() const noexcept { return scale_; }
    i64 shift() const noexcept { return shift_; }
    const ZeroSetSpec& inner() const { return parts_.front(); }
    const std::vector<ZeroSetSpec>& parts() const noexcept { return parts_; }

private:
    ZeroSetSpec() = default;

    Kind kind_ = Kind::Empty;
    IntSet list_;
    i64 base_ = 0;
    i64 scale_ = 1;
    i64 shift_ = 0;
    std::vector<ZeroSetSpec> parts_;
};

/// f(n) = overrides[n] if present, else 0 on the zero set, else the default.
class TargetSpec {
public:
    /// Throws InvalidArgument when the default is 0 or an override > 0 sits
    /// inside the zero set.
    TargetSpec(Multiplicity default_value, std::map<i64, Multiplicity> overrides,
               ZeroSetSpec zero_set);

    static TargetSpec constant(Multiplicity value);

    Multiplicity eval(i64 n) const;
    /// f^{-1}(0): the declared zero set plus zero-valued overrides.
    const ZeroSetSpec& zero_set() const noexcept { return effective_zero_; }
    const ZeroSetSpec& declared_zero_set() const noexcept { return declared_zero_; }
    Multiplicity default_value() const noexcept { return default_; }
    const std::map<i64, Multiplicity>& overrides() const noexcept { return overrides_; }

private:
    Multiplicity default_;
    std::map<i64, Multiplicity> overrides_;
    ZeroSetSpec declared_zero_;
    ZeroSetSpec effective_zero_;
};

inline Multiplicity eval_target(const TargetSpec& spec, i64 n) { return spec.eval(n); }

i64 gcd(i64 a, i64 b);

}  // namespace repbasis
