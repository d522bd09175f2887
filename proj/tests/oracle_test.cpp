#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "repbasis/oracle.hpp"

using namespace repbasis;

namespace {

IntSet random_set(std::mt19937_64& rng, std::size_t max_size, i64 spread) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    std::uniform_int_distribution<i64> val(-spread, spread);
    std::vector<i64> v(size_dist(rng));
    for (auto& x : v) x = val(rng);
    return IntSet::from_values(std::move(v));
}

}  // namespace

TEST(oracle, rep_count_examples) {
    const LinearForm f = validate_form(2, 3);
    EXPECT_EQ(rep_count({0}, f, 0), 1u);
    EXPECT_EQ(rep_count({0}, f, 1), 0u);
    EXPECT_EQ(rep_count({-2, 3}, f, 0), 1u);
    EXPECT_EQ(rep_count({}, f, 0), 0u);
    EXPECT_EQ(rep_count({}, validate_form(3, -5), 17), 0u);
}

TEST(oracle, rep_table_examples) {
    const LinearForm f = validate_form(2, 3);
    const RepTable t = rep_table({-2, 3}, f, -11, 16);
    EXPECT_EQ(t.counts, (std::map<i64, std::uint64_t>{{-10, 1}, {0, 1}, {5, 1}, {15, 1}}));
    EXPECT_EQ(t.at(1), 0u);

    EXPECT_EQ(rep_table({0}, f, 0, 0).counts, (std::map<i64, std::uint64_t>{{0, 1}}));
    EXPECT_TRUE(rep_table({}, f, -100, 100).counts.empty());
    EXPECT_THROW(rep_table({}, f, 1, 0), Error);
}

TEST(oracle, image_examples) {
    const LinearForm f = validate_form(2, 3);
    EXPECT_EQ(image({3, -2}, {3, -2}, f), (IntSet{-10, 0, 5, 15}));
    EXPECT_TRUE(image({}, {1, 2}, f).empty());
    EXPECT_EQ(image({0}, {0}, validate_form(5, 7)), IntSet{0});
}

TEST(oracle, table_agrees_with_count_and_brute_force) {
    std::mt19937_64 rng(11);
    const std::vector<std::pair<i64, i64>> forms{{2, 3}, {3, -5}, {-4, 7}, {1, 3}, {5, 2}};
    for (int iter = 0; iter < 120; ++iter) {
        const auto [u1, u2] = forms[static_cast<std::size_t>(iter) % forms.size()];
        const LinearForm f = validate_form(u1, u2);
        const IntSet a = random_set(rng, 12, 30);
        const RepTable full = rep_table_full(a, f);
        const auto tally = brute::pair_tally(a.values(), u1, u2);

        EXPECT_EQ(full.total(), a.size() * a.size());
        for (const auto& [n, c] : tally) EXPECT_EQ(full.at(n), c);

        const i64 lo = -40, hi = 40;
        const RepTable windowed = rep_table(a, f, lo, hi);
        for (i64 n = lo; n <= hi; ++n) {
            EXPECT_EQ(windowed.at(n), rep_count(a, f, n)) << n;
            EXPECT_EQ(windowed.at(n), brute::count(tally, n)) << n;
        }

        const IntSet img = image(a, a, f);
        for (const auto& [n, c] : full.counts) EXPECT_TRUE(img.contains(n));
        EXPECT_EQ(img.size(), full.counts.size());

        // Swapping the coefficients transposes every pair.
        const LinearForm swapped = validate_form(u2, u1);
        for (i64 n = lo; n <= hi; ++n) EXPECT_EQ(rep_count(a, swapped, n), rep_count(a, f, n));
    }
}

TEST(oracle, image_span_covers_image) {
    const LinearForm f = validate_form(3, -5);
    const IntSet a{-4, 1, 9};
    const auto span = image_span(a, f);
    ASSERT_TRUE(span);
    const IntSet img = image(a, a, f);
    EXPECT_EQ(span->lo, img.min());
    EXPECT_EQ(span->hi, img.max());
    EXPECT_FALSE(image_span({}, f));
}

TEST(oracle, mary_rep_count_examples) {
    const MaryForm f12({1, 2});
    EXPECT_EQ(mary_rep_count({0, 1}, f12, 3, 100), 1u);
    EXPECT_EQ(mary_rep_count({0, 1}, f12, 4, 100), 0u);
    EXPECT_EQ(mary_rep_count({0}, MaryForm({1, 2, 4}), 0, 100), 1u);
    EXPECT_EQ(mary_rep_count({}, f12, 0, 100), 0u);
}

TEST(oracle, mary_work_cap) {
    try {
        mary_rep_count({0, 1, 2, 3}, MaryForm({1, 2, 4}), 5, 63);
        FAIL() << "expected work-cap error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WorkCapExceeded);
    }
    EXPECT_NO_THROW(mary_rep_count({0, 1, 2, 3}, MaryForm({1, 2, 4}), 5, 64));
}

TEST(oracle, mary_pruning_matches_full_enumeration) {
    std::mt19937_64 rng(5);
    const std::vector<std::vector<i64>> forms{{1, 2, 4}, {3, -2}, {-1, 5, 2}, {2, 3, -7, 1}};
    for (int iter = 0; iter < 40; ++iter) {
        const auto& coeffs = forms[static_cast<std::size_t>(iter) % forms.size()];
        const IntSet a = random_set(rng, 6, 9);
        const auto tally = brute::tuple_tally(a.values(), coeffs);
        const MaryForm f(coeffs);
        for (i64 n = -40; n <= 40; ++n) EXPECT_EQ(mary_rep_count(a, f, n, 1'000'000), brute::count(tally, n));
        const RepTable t = mary_rep_table(a, f, {-15, 15}, 1'000'000);
        for (i64 n = -15; n <= 15; ++n) EXPECT_EQ(t.at(n), brute::count(tally, n));
    }
}

TEST(oracle, b_f_g_predicate) {
    const auto ok = is_b_f_g({-2, 3}, validate_form(2, 3), 1, {-20, 20}, 1000);
    EXPECT_TRUE(ok.holds);

    const auto bad = is_b_f_g({0, 1, 3}, validate_form(1, 2), 1, {0, 9}, 1000);
    EXPECT_FALSE(bad.holds);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(*bad.witness, 3);
    EXPECT_EQ(bad.witness_count, 2u);

    EXPECT_TRUE(is_b_f_g({}, validate_form(2, 3), 1, {-5, 5}, 1).holds);
    EXPECT_TRUE(is_b_f_g({0, 1, 3}, MaryForm({1, 2}), 2, {0, 9}, 1000).holds);
    EXPECT_FALSE(is_b_f_g({0, 1, 3}, MaryForm({1, 2}), 1, {0, 9}, 1000).holds);
    EXPECT_THROW(is_b_f_g({0}, MaryForm({1, 2}), 0, {0, 9}, 1000), Error);
}
