#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "repbasis/forms.hpp"
#include "repbasis/oracle.hpp"

namespace repbasis {

inline constexpr i64 kDefaultMaxRadius = 10'000;

/// B_t = {b*v1 + u2*t, b*v2 - u1*t} and C_t = A' u B_t. The ordered pair
/// maps to b under F for every t.
struct Augmentation {
    i64 t = 0;
    i64 b = 0;
    std::array<i64, 2> pair{};
    IntSet c_set;
};

/// Which clause of the two-element augmentation conclusion failed.
enum class RejectionCase {
    DegeneratePair,  ///< |B_t| < 2 or B_t meets A'
    TargetCount,     ///< R_C(b) != R_A'(b) + 1
    PreservedCount,  ///< R_C(n) != R_A'(n) for some n in F(A') \ {b}
    NewValueCount,   ///< R_C(n) != 1 for some new value n
    ZeroSetHit,      ///< F(C) meets W
};

std::string_view to_string(RejectionCase c) noexcept;

struct AdmissibilityReport {
    bool admissible = false;
    std::optional<RejectionCase> reason;
    std::optional<i64> witness;
    std::uint64_t observed = 0;  ///< count at the witness
    std::uint64_t expected = 0;  ///< count the conclusion requires there
    std::uint64_t values_checked = 0;
};

Augmentation make_augmentation(const IntSet& a_prime, i64 b, i64 t, const LinearForm& form,
                               const BezoutPair& bez);

/// Decides admissibility by tabulating R_{A',F} outright, adding the
/// representations that use the two new elements, and comparing clause by
/// clause. Throws HypothesisViolated when
/// F(A') u {b} meets W.
AdmissibilityReport check_admissible(const IntSet& a_prime, i64 b, const ZeroSetSpec& w,
                                     const Augmentation& aug, const LinearForm& form);

struct RejectedCandidate {
    i64 t = 0;
    AdmissibilityReport report;
};

struct TSearchResult {
    i64 t = 0;
    Augmentation aug;
    AdmissibilityReport report;
    std::vector<RejectedCandidate> rejected;  ///< in scan order
};

class SearchExhausted : public Error {
public:
    SearchExhausted(i64 max_radius, std::map<RejectionCase, std::uint64_t> histogram);

    i64 max_radius() const noexcept { return max_radius_; }
    const std::map<RejectionCase, std::uint64_t>& histogram() const noexcept { return histogram_; }

private:
    i64 max_radius_;
    std::map<RejectionCase, std::uint64_t> histogram_;
};

/// Scans t = 0, 1, -1, 2, -2, ... while |t| <= max_radius and returns the
/// first admissible candidate. Throws SearchExhausted otherwise.
TSearchResult find_admissible_t(const IntSet& a_prime, i64 b, const ZeroSetSpec& w,
                                const LinearForm& form, const BezoutPair& bez,
                                i64 max_radius = kDefaultMaxRadius);

/// k-th value of the scan order 0, 1, -1, 2, -2, ...
constexpr i64 scan_order_t(std::uint64_t k) noexcept {
    const auto half = static_cast<i64>((k + 1) / 2);
    return (k % 2 == 1) ? half : -half;
}

}  // namespace repbasis
