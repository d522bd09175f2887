#include "repbasis/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace repbasis {

std::uint64_t RepTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& [n, c] : counts) sum += c;
    return sum;
}

std::uint64_t RepTable::max_count() const {
    std::uint64_t best = 0;
    for (const auto& [n, c] : counts) best = std::max(best, c);
    return best;
}

std::uint64_t rep_count(const IntSet& a, const LinearForm& form, i64 n) {
    std::uint64_t count = 0;
    for (i64 a1 : a) {
        const i64 rest = checked_sub(n, checked_mul(form.u1(), a1));
        if (rest % form.u2() != 0) continue;
        if (a.contains(rest / form.u2())) ++count;
    }
    return count;
}

RepTable rep_table(const IntSet& a, const LinearForm& form, i64 lo, i64 hi) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "rep_table window has lo > hi");
    RepTable table{{lo, hi}, {}};
    for (i64 x : a)
        for (i64 y : a) {
            const i64 v = form(x, y);
            if (lo <= v && v <= hi) ++table.counts[v];
        }
    return table;
}

std::optional<Window> image_span(const IntSet& a, const LinearForm& form) {
    if (a.empty()) return std::nullopt;
    const i64 p = checked_mul(form.u1(), a.min()), q = checked_mul(form.u1(), a.max());
    const i64 r = checked_mul(form.u2(), a.min()), s = checked_mul(form.u2(), a.max());
    return Window{checked_add(std::min(p, q), std::min(r, s)), checked_add(std::max(p, q), std::max(r, s))};
}

RepTable rep_table_full(const IntSet& a, const LinearForm& form) {
    auto span = image_span(a, form);
    if (!span) return RepTable{{0, 0}, {}};
    return rep_table(a, form, span->lo, span->hi);
}

IntSet image(const IntSet& a, const IntSet& b, const LinearForm& form) {
    std::vector<i64> values;
    values.reserve(a.size() * b.size());
    for (i64 x : a)
        for (i64 y : b) values.push_back(form(x, y));
    return IntSet::from_values(std::move(values));
}

namespace {

void check_work_cap(const IntSet& a, std::size_t arity, std::uint64_t bound) {
    auto work = try_pow(static_cast<i64>(a.size()), static_cast<unsigned>(arity));
    if (!work || static_cast<std::uint64_t>(*work) > bound)
        throw Error(ErrorKind::WorkCapExceeded,
                    "|A|^m = " + std::to_string(a.size()) + "^" + std::to_string(arity) +
                        " exceeds the work cap " + std::to_string(bound));
}

// Nested enumeration over A^m with interval pruning: suffix_lo[k]/suffix_hi[k]
// bound what coordinates k..m-1 can still contribute.
class TupleEnumerator {
public:
    TupleEnumerator(const IntSet& a, const MaryForm& form, Window target)
        : elems_(a.values()), coeffs_(form.coefficients()), target_(target) {
        const std::size_t m = coeffs_.size();
        suffix_lo_.assign(m + 1, 0);
        suffix_hi_.assign(m + 1, 0);
        if (elems_.empty()) return;
        for (std::size_t k = m; k-- > 0;) {
            const i64 p = checked_mul(coeffs_[k], elems_.front());
            const i64 q = checked_mul(coeffs_[k], elems_.back());
            suffix_lo_[k] = checked_add(suffix_lo_[k + 1], std::min(p, q));
            suffix_hi_[k] = checked_add(suffix_hi_[k + 1], std::max(p, q));
        }
    }

    RepTable run() {
        RepTable table{target_, {}};
        if (!elems_.empty()) descend(0, 0, table);
        return table;
    }

private:
    void descend(std::size_t k, i64 partial, RepTable& table) {
        if (checked_add(partial, suffix_lo_[k]) > target_.hi) return;
        if (checked_add(partial, suffix_hi_[k]) < target_.lo) return;
        if (k == coeffs_.size()) {
            ++table.counts[partial];
            return;
        }
        for (i64 x : elems_) descend(k + 1, checked_add(partial, checked_mul(coeffs_[k], x)), table);
    }

    const std::vector<i64>& elems_;
    const std::vector<i64>& coeffs_;
    Window target_;
    std::vector<i64> suffix_lo_;
    std::vector<i64> suffix_hi_;
};

BfgVerdict verdict_from(const RepTable& table, std::uint64_t g) {
    BfgVerdict v;
    for (const auto& [n, c] : table.counts)
        if (c > g) {
            v.holds = false;
            v.witness = n;
            v.witness_count = c;
            break;
        }
    return v;
}

}  // namespace

std::uint64_t mary_rep_count(const IntSet& a, const MaryForm& form, i64 n, std::uint64_t bound) {
    check_work_cap(a, form.arity(), bound);
    return TupleEnumerator(a, form, {n, n}).run().at(n);
}

RepTable mary_rep_table(const IntSet& a, const MaryForm& form, Window window, std::uint64_t bound) {
    if (window.lo > window.hi) throw Error(ErrorKind::InvalidArgument, "window has lo > hi");
    check_work_cap(a, form.arity(), bound);
    return TupleEnumerator(a, form, window).run();
}

BfgVerdict is_b_f_g(const IntSet& a, const LinearForm& form, std::uint64_t g, Window window,
                    std::uint64_t bound) {
    if (g == 0) throw Error(ErrorKind::InvalidArgument, "B_F[g] needs g >= 1");
    check_work_cap(a, 2, bound);
    return verdict_from(rep_table(a, form, window.lo, window.hi), g);
}

BfgVerdict is_b_f_g(const IntSet& a, const MaryForm& form, std::uint64_t g, Window window,
                    std::uint64_t bound) {
    if (g == 0) throw Error(ErrorKind::InvalidArgument, "B_F[g] needs g >= 1");
    return verdict_from(mary_rep_table(a, form, window, bound), g);
}

}  // namespace repbasis
