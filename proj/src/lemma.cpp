#include "repbasis/lemma.hpp"

#include <map>
#include <string>

namespace repbasis {

std::string_view to_string(RejectionCase c) noexcept {
    switch (c) {
    case RejectionCase::DegeneratePair: return "degenerate-pair";
    case RejectionCase::TargetCount: return "target-count";
    case RejectionCase::PreservedCount: return "preserved-count";
    case RejectionCase::NewValueCount: return "new-value-count";
    case RejectionCase::ZeroSetHit: return "zero-set-hit";
    }
    return "unknown";
}

Augmentation make_augmentation(const IntSet& a_prime, i64 b, i64 t, const LinearForm& form,
                               const BezoutPair& bez) {
    if (form(bez.v1, bez.v2) != 1)
        throw Error(ErrorKind::InvalidArgument, "Bezout pair does not satisfy u1*v1 + u2*v2 = 1");
    Augmentation aug;
    aug.t = t;
    aug.b = b;
    aug.pair = {checked_add(checked_mul(b, bez.v1), checked_mul(form.u2(), t)),
                checked_sub(checked_mul(b, bez.v2), checked_mul(form.u1(), t))};
    if (form(aug.pair[0], aug.pair[1]) != b)
        throw Error(ErrorKind::Internal, "augmentation pair does not map to b");
    aug.c_set = a_prime.with(aug.pair);
    return aug;
}

namespace {

/// Everything about (A', b, W) that does not depend on t.
class LemmaContext {
public:
    LemmaContext(const IntSet& a_prime, i64 b, const ZeroSetSpec& w, const LinearForm& form)
        : a_prime_(a_prime), b_(b), w_(w), form_(form), base_(rep_table_full(a_prime, form)) {
        if (w.contains(b))
            throw Error(ErrorKind::HypothesisViolated,
                        "target b = " + std::to_string(b) + " lies in the zero set");
        for (const auto& [n, c] : base_.counts)
            if (w.contains(n))
                throw Error(ErrorKind::HypothesisViolated,
                            "F(A') value " + std::to_string(n) + " lies in the zero set");
    }

    AdmissibilityReport check(const Augmentation& aug) const {
        AdmissibilityReport rep;
        auto reject = [&rep](RejectionCase why, i64 n, std::uint64_t observed, std::uint64_t expected) {
            rep.admissible = false;
            rep.reason = why;
            rep.witness = n;
            rep.observed = observed;
            rep.expected = expected;
            return rep;
        };

        // (i) two fresh elements
        if (aug.pair[0] == aug.pair[1])
            return reject(RejectionCase::DegeneratePair, aug.pair[0], 1, 2);
        for (i64 x : aug.pair)
            if (a_prime_.contains(x)) return reject(RejectionCase::DegeneratePair, x, 1, 0);

        // R_C - R_A' is carried by the pairs touching x or y; every value
        // whose count moves is a key here.
        std::map<i64, std::uint64_t> delta;
        for (i64 n : aug.pair) {
            for (i64 a : a_prime_) {
                ++delta[form_(n, a)];
                ++delta[form_(a, n)];
            }
            for (i64 m : aug.pair) ++delta[form_(n, m)];
        }
        auto grown_at = [&](i64 n) {
            auto it = delta.find(n);
            return base_.at(n) + (it == delta.end() ? 0 : it->second);
        };

        // (ii) b gains exactly one representation
        ++rep.values_checked;
        const std::uint64_t before_b = base_.at(b_);
        if (grown_at(b_) != before_b + 1)
            return reject(RejectionCase::TargetCount, b_, grown_at(b_), before_b + 1);

        // (iii) existing values keep their counts
        for (const auto& [n, d] : delta) {
            const std::uint64_t c = base_.at(n);
            if (n == b_ || c == 0) continue;
            ++rep.values_checked;
            return reject(RejectionCase::PreservedCount, n, c + d, c);
        }

        // (iv) new values are represented exactly once
        for (const auto& [n, d] : delta) {
            if (n == b_ || base_.at(n) != 0) continue;
            ++rep.values_checked;
            if (d != 1) return reject(RejectionCase::NewValueCount, n, d, 1);
        }

        // (v) nothing lands in W; F(A') already avoids it
        for (const auto& [n, d] : delta)
            if (w_.contains(n)) return reject(RejectionCase::ZeroSetHit, n, grown_at(n), 0);

        rep.admissible = true;
        return rep;
    }

private:
    const IntSet& a_prime_;
    i64 b_;
    const ZeroSetSpec& w_;
    const LinearForm& form_;
    RepTable base_;
};

}  // namespace

AdmissibilityReport check_admissible(const IntSet& a_prime, i64 b, const ZeroSetSpec& w,
                                     const Augmentation& aug, const LinearForm& form) {
    if (aug.b != b) throw Error(ErrorKind::InvalidArgument, "augmentation was built for another target");
    return LemmaContext(a_prime, b, w, form).check(aug);
}

SearchExhausted::SearchExhausted(i64 max_radius, std::map<RejectionCase, std::uint64_t> histogram)
    : Error(ErrorKind::SearchExhausted,
            [&] {
                std::string msg = "no admissible t with |t| <= " + std::to_string(max_radius) + " (";
                bool first = true;
                for (const auto& [c, k] : histogram) {
                    if (!first) msg += ", ";
                    first = false;
                    msg += std::string(to_string(c)) + ": " + std::to_string(k);
                }
                return msg + ")";
            }()),
      max_radius_(max_radius),
      histogram_(std::move(histogram)) {}

TSearchResult find_admissible_t(const IntSet& a_prime, i64 b, const ZeroSetSpec& w,
                                const LinearForm& form, const BezoutPair& bez, i64 max_radius) {
    if (max_radius < 1) throw Error(ErrorKind::InvalidArgument, "max_radius must be positive");
    const LemmaContext ctx(a_prime, b, w, form);

    TSearchResult result;
    std::map<RejectionCase, std::uint64_t> histogram;
    const auto candidates = 2 * static_cast<std::uint64_t>(max_radius) + 1;
    for (std::uint64_t k = 0; k < candidates; ++k) {
        const i64 t = scan_order_t(k);
        Augmentation aug = make_augmentation(a_prime, b, t, form, bez);
        AdmissibilityReport report = ctx.check(aug);
        if (report.admissible) {
            result.t = t;
            result.aug = std::move(aug);
            result.report = report;
            return result;
        }
        ++histogram[*report.reason];
        result.rejected.push_back({t, report});
    }
    throw SearchExhausted(max_radius, std::move(histogram));
}

}  // namespace repbasis
