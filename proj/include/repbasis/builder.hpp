#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "repbasis/forms.hpp"
#include "repbasis/lemma.hpp"
#include "repbasis/oracle.hpp"

namespace repbasis {

struct ScheduledTarget {
    i64 b = 0;
    std::uint64_t round = 1;
};

/// Round r = 1..K; within a round n = 0, 1, -1, ..., N, -N, emitting n iff
/// f(n) >= r. Each n in [-N, N] appears min(f(n), K) times.
std::vector<ScheduledTarget> schedule_targets(const TargetSpec& spec, i64 radius, std::uint64_t rounds);
std::vector<i64> enumerate_targets(const TargetSpec& spec, i64 radius, std::uint64_t rounds);

struct BuildStep {
    std::size_t index = 0;  ///< i, starting at 1
    i64 b = 0;
    std::uint64_t round = 1;
    std::optional<i64> t;  ///< nullopt: skipped, count already met
    std::array<i64, 2> added{};
    std::size_t set_size = 0;  ///< |A_i|
    std::vector<RejectedCandidate> rejected;
};

struct Construction {
    LinearForm form;
    BezoutPair bezout;
    TargetSpec spec;
    i64 radius = 0;
    std::uint64_t rounds = 1;
    IntSet initial;
    std::vector<BuildStep> steps;
    IntSet final_set;
    bool complete = false;

    /// A_i: the initial set plus every pair added by steps 1..i.
    IntSet prefix_set(std::size_t i) const;
};

/// Failure inside build(). Carries the construction up to the failing step.
class BuildError : public Error {
public:
    BuildError(ErrorKind kind, const std::string& what, Construction partial, std::size_t step,
               std::map<RejectionCase, std::uint64_t> histogram = {})
        : Error(kind, what), partial_(std::move(partial)), step_(step), histogram_(std::move(histogram)) {}

    const Construction& partial() const noexcept { return partial_; }
    std::size_t failed_step() const noexcept { return step_; }
    const std::map<RejectionCase, std::uint64_t>& histogram() const noexcept { return histogram_; }

private:
    Construction partial_;
    std::size_t step_;
    std::map<RejectionCase, std::uint64_t> histogram_;
};

/// Greedy iteration from A_0 = initial (normally empty): each scheduled
/// target whose count is below its round index is raised by one lemma step.
Construction build(const LinearForm& form, const TargetSpec& spec, i64 radius, std::uint64_t rounds,
                   i64 max_radius = kDefaultMaxRadius, const IntSet& initial = {});

struct Violation {
    char check = 'a';  ///< a: exceeds f, b: target not met, c: zero-set hit
    i64 n = 0;
    std::uint64_t observed = 0;
    Multiplicity required;
};

struct Certificate {
    Window window;
    RepTable table;
    std::vector<Violation> violations;
    std::uint64_t targets_checked = 0;

    bool clean() const noexcept { return violations.empty(); }
};

/// [-w, w] with w = max(2 * spanF, N), spanF = (|u1| + |u2|) * max|a|.
Window default_certificate_window(const Construction& c);

/// Checks the final set against f on the window: (a) R <= f everywhere,
/// (b) R = min(f, K) on the target window, (c) R = 0 on the zero set.
Certificate certify(const Construction& c, std::optional<Window> window = std::nullopt);

/// Same checks for an arbitrary set, e.g. an intermediate A_i.
Certificate certify_set(const IntSet& a, const Construction& c, Window window, bool check_targets);

}  // namespace repbasis
