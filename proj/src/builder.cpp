#include "repbasis/builder.hpp"

#include <algorithm>
#include <string>

namespace repbasis {

std::vector<ScheduledTarget> schedule_targets(const TargetSpec& spec, i64 radius, std::uint64_t rounds) {
    if (radius < 0) throw Error(ErrorKind::InvalidArgument, "target radius must be nonnegative");
    if (rounds < 1) throw Error(ErrorKind::InvalidArgument, "round cap must be at least 1");
    std::vector<ScheduledTarget> out;
    const auto per_round = 2 * static_cast<std::uint64_t>(radius) + 1;
    for (std::uint64_t r = 1; r <= rounds; ++r) {
        bool any = false;
        for (std::uint64_t k = 0; k < per_round; ++k) {
            const i64 n = scan_order_t(k);
            const Multiplicity f = spec.eval(n);
            if (f.is_infinite() || f.value() >= r) {
                out.push_back({n, r});
                any = true;
            }
        }
        if (!any) break;  // later rounds cannot emit anything either
    }
    return out;
}

std::vector<i64> enumerate_targets(const TargetSpec& spec, i64 radius, std::uint64_t rounds) {
    std::vector<i64> out;
    for (const auto& s : schedule_targets(spec, radius, rounds)) out.push_back(s.b);
    return out;
}

IntSet Construction::prefix_set(std::size_t i) const {
    std::vector<i64> values = initial.values();
    for (const auto& step : steps) {
        if (step.index > i) break;
        if (step.t) values.insert(values.end(), step.added.begin(), step.added.end());
    }
    return IntSet::from_values(std::move(values));
}

Construction build(const LinearForm& form, const TargetSpec& spec, i64 radius, std::uint64_t rounds,
                   i64 max_radius, const IntSet& initial) {
    Construction c{form, bezout(form), spec, radius, rounds, initial, {}, initial, false};
    const ZeroSetSpec& w = spec.zero_set();
    const auto schedule = schedule_targets(spec, radius, rounds);
    c.steps.reserve(schedule.size());

    std::size_t index = 0;
    for (const auto& target : schedule) {
        BuildStep step;
        step.index = ++index;
        step.b = target.b;
        step.round = target.round;
        if (rep_count(c.final_set, form, target.b) < target.round) {
            try {
                TSearchResult found = find_admissible_t(c.final_set, target.b, w, form, c.bezout, max_radius);
                step.t = found.t;
                step.added = found.aug.pair;
                step.rejected = std::move(found.rejected);
                c.final_set = std::move(found.aug.c_set);
            } catch (const SearchExhausted& e) {
                throw BuildError(e.kind(),
                                 "step " + std::to_string(index) + " (b = " + std::to_string(target.b) +
                                     ", round " + std::to_string(target.round) + "): " + e.what(),
                                 c, index, e.histogram());
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::HypothesisViolated) throw;
                throw BuildError(e.kind(),
                                 "step " + std::to_string(index) + " (b = " + std::to_string(target.b) +
                                     "): " + e.what(),
                                 c, index);
            }
        }
        step.set_size = c.final_set.size();
        c.steps.push_back(std::move(step));
    }
    c.complete = true;
    return c;
}

Window default_certificate_window(const Construction& c) {
    const i64 span = checked_mul(checked_add(checked_abs(c.form.u1()), checked_abs(c.form.u2())),
                                 c.final_set.max_abs());
    const i64 half = std::max(checked_mul(2, span), c.radius);
    return {-half, half};
}

Certificate certify_set(const IntSet& a, const Construction& c, Window window, bool check_targets) {
    Certificate cert;
    cert.window = window;
    cert.table = rep_table(a, c.form, window.lo, window.hi);

    // Zero counts satisfy (a) and (c) trivially, so only stored entries matter.
    for (const auto& [n, count] : cert.table.counts) {
        const Multiplicity f = c.spec.eval(n);
        if (f.is_zero())
            cert.violations.push_back({'c', n, count, f});
        else if (!f.admits(count))
            cert.violations.push_back({'a', n, count, f});
    }

    if (!check_targets) return cert;

    std::map<i64, std::uint64_t> processed;
    for (const auto& step : c.steps) processed[step.b] = std::max(processed[step.b], step.round);

    const i64 lo = std::max(-c.radius, window.lo);
    const i64 hi = std::min(c.radius, window.hi);
    for (i64 n = lo; n <= hi; ++n) {
        const Multiplicity f = c.spec.eval(n);
        if (f.is_zero()) continue;
        ++cert.targets_checked;
        const std::uint64_t count = cert.table.at(n);
        if (c.complete) {
            const std::uint64_t want = f.capped(c.rounds);
            if (count != want) cert.violations.push_back({'b', n, count, Multiplicity(want)});
        } else {
            auto it = processed.find(n);
            const std::uint64_t want = it == processed.end() ? 0 : it->second;
            if (count < want) cert.violations.push_back({'b', n, count, Multiplicity(want)});
        }
    }
    return cert;
}

Certificate certify(const Construction& c, std::optional<Window> window) {
    return certify_set(c.final_set, c, window.value_or(default_certificate_window(c)), true);
}

}  // namespace repbasis
