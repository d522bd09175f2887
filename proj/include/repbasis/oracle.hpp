#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "repbasis/forms.hpp"

namespace repbasis {

/// Window-restricted representation function. Only nonzero counts are stored;
/// every other n in the window has count 0.
struct RepTable {
    Window window;
    std::map<i64, std::uint64_t> counts;

    std::uint64_t at(i64 n) const {
        auto it = counts.find(n);
        return it == counts.end() ? 0 : it->second;
    }
    std::uint64_t total() const;
    std::uint64_t max_count() const;
};

/// Number of ordered pairs (a1, a2) in A^2 with u1*a1 + u2*a2 = n. Solves for
/// the partner of each a1 rather than enumerating pairs.
std::uint64_t rep_count(const IntSet& a, const LinearForm& form, i64 n);

/// Tabulates all |A|^2 ordered pairs in one pass, keeping those in [lo, hi].
RepTable rep_table(const IntSet& a, const LinearForm& form, i64 lo, i64 hi);

/// Smallest window containing F(A); nullopt for the empty set.
std::optional<Window> image_span(const IntSet& a, const LinearForm& form);

/// rep_table over image_span(A) (an empty table for A empty).
RepTable rep_table_full(const IntSet& a, const LinearForm& form);

/// {u1*a + u2*b : a in A, b in B}.
IntSet image(const IntSet& a, const IntSet& b, const LinearForm& form);

/// Exact count of tuples in A^m mapped to n, by nested enumeration with
/// bound pruning. Throws WorkCapExceeded when |A|^m > bound.
std::uint64_t mary_rep_count(const IntSet& a, const MaryForm& form, i64 n, std::uint64_t bound);

/// All tuples of A^m tabulated over a window. Same work cap.
RepTable mary_rep_table(const IntSet& a, const MaryForm& form, Window window, std::uint64_t bound);

struct BfgVerdict {
    bool holds = true;
    std::optional<i64> witness;  ///< first n in the window with count > g
    std::uint64_t witness_count = 0;
};

/// True iff R_{A,F}(n) <= g for every n in the window (g = 1: Sidon).
BfgVerdict is_b_f_g(const IntSet& a, const LinearForm& form, std::uint64_t g, Window window,
                    std::uint64_t bound);
BfgVerdict is_b_f_g(const IntSet& a, const MaryForm& form, std::uint64_t g, Window window,
                    std::uint64_t bound);

}  // namespace repbasis
