#include "youngbook/combinat.hpp"
#include "youngbook/formulas.hpp"

#include <doctest.h>

using namespace youngbook;

namespace {

ExactInt young_dp(const BookShape& book) { return count_linear_extensions(order_constraints(book, OrderKind::Young)); }

ExactInt page_dp(const PageShape& page) { return count_linear_extensions(young_order(page)); }

ExactInt selberg_dp(const BookShape& book)
{
    return count_linear_extensions(order_constraints(book, OrderKind::Selberg));
}

}  // namespace

TEST_CASE("staircase book counts")
{
    CHECK(sb_count(3, 1) == 4);
    CHECK(yb_count(3, 1) == 2);
    CHECK(yb_count(2, 2) == 2);
    CHECK(sb_count(1, 5) == 1);
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 2; ++m) {
            CHECK(sb_count(n, m) == selberg_dp(make_staircase_book(n, m)));
            CHECK(yb_count(n, m) == young_dp(make_staircase_book(n, m)));
            CHECK(sb_count(n, m) == yb_count(n, m) * power(superfactorial(n), static_cast<unsigned long>(m)));
        }
    }
}

TEST_CASE("the four-page Young book")
{
    BookShape book({make_shifted(Partition({6, 2, 1})), make_shifted(Partition({5, 4, 1})),
                    make_shifted(Partition({5, 2, 1})), make_shifted(Partition({4, 2, 1}))});
    ExactInt expected = ExactInt(16) * 3 * 25 * 7 * 17 * 19 * 23 * 1649819;
    CHECK(young_dp(book) == expected);
}

TEST_CASE("Selberg permutation count")
{
    CHECK(sp_count(1, 0, 0, 0) == 1);
    CHECK(sp_count(1, 2, 0, 0) == 2);
    CHECK(sp_count(2, 0, 0, 1) == 1);
    CHECK(ExactInt(enumerate_selberg_permutations(2, 1, 0, 2).size()) == sp_count(2, 1, 0, 2));
}

TEST_CASE("tableau oracles")
{
    CHECK(hook_count_straight(Partition({3, 2})) == 5);
    CHECK(hook_count_straight(Partition({2, 2})) == 2);
    CHECK(hook_count_straight(Partition({3, 3, 3})) == 42);
    CHECK(hook_count_shifted(Partition({3, 2, 1})) == 2);
    CHECK(hook_count_shifted(Partition({4, 3, 2, 1})) == 12);
    CHECK(hook_count_shifted(Partition({3, 1})) == 2);
    CHECK_THROWS_AS(hook_count_shifted(Partition({2, 2})), ShapeError);

    CHECK(skew_count_determinant(Partition({3, 3}), Partition({1})) == 5);
    CHECK(skew_count_determinant(Partition({2, 1}), Partition()) == 2);
    CHECK(skew_count_determinant(Partition({2, 2}), Partition({1, 1})) == 1);
    CHECK(skew_count_determinant(Partition({2, 1}), Partition({1})) == 2);
    ExactInt big = skew_count_determinant(Partition({7, 7, 7, 7, 7, 5, 5}), Partition({4, 4}));
    CHECK(big % 9173 == 0);
    CHECK(big == page_dp(make_skew(Partition({7, 7, 7, 7, 7, 5, 5}), Partition({4, 4}))));
}

TEST_CASE("two-page skew count")
{
    // n = 1 with everything 0 is a single cell.
    CHECK(syt_skew_double(1, 0, 0, 0, 0) == 1);
    CHECK(syt_skew_double_printed(1, 0, 0, 0, 0) == 2);
    for (int n = 1; n <= 2; ++n) {
        for (int r1 = 0; r1 <= 1; ++r1) {
            for (int s2 = 0; s2 <= 1; ++s2) {
                PageShape target = make_double_staircase_skew(n, r1, 1, 1, s2);
                CHECK(syt_skew_double(n, r1, 1, 1, s2) == page_dp(target));
                CHECK(syt_skew_double_printed(n, r1, 1, 1, s2) ==
                      ExactRational(power(ExactInt(2), static_cast<unsigned long>(n)) * syt_skew_double(n, r1, 1, 1, s2)));
            }
        }
    }
}

TEST_CASE("(n, r, s) Young books")
{
    Composition r({1, 0});
    Composition s({0, 2});
    CHECK(yb_count_nrs(2, r, s) == young_dp(make_nrs_book(2, r, s)));
    CHECK(yb_count_nrs(3, Composition({1}), Composition({1})) == young_dp(make_nrs_book(3, Composition({1}), Composition({1}))));
    CHECK(syt_truncated_staircase(2, 1, 1) == page_dp(make_truncated(Partition({3, 3, 3}), Partition({1}))));
    CHECK(sb_minus_count(2, r, s) == selberg_dp(make_nrs_book(2, r, s, true)));
    CHECK(sb_full_count(2, r, s) == selberg_dp(make_nrs_book(2, r, s)));
    CHECK(sb_full_count(2, Composition({1}), Composition({1})) ==
          selberg_dp(make_nrs_book(2, Composition({1}), Composition({1}))));
    CHECK(sb_full_count(2, r, s) == yb_count_nrs(2, r, s) * sb_yb_factor(2, r, s));
}

TEST_CASE("((k^n), r, s) books and truncated shapes")
{
    for (int n = 1; n <= 2; ++n) {
        for (int r = 0; r <= 1; ++r) {
            for (int s = 0; s <= 1; ++s) {
                Composition a(std::vector<int>(static_cast<std::size_t>(n), 2));
                BookShape book = make_ars_book(a, Composition({r}), Composition({s}));
                CHECK(yb_count_ars_kn(2, n, Composition({r}), Composition({s})) == young_dp(book));
                CHECK(syt_truncated_block(2, n, r, s) == page_dp(make_block_truncated(2, n, r, s)));
            }
        }
    }
}

TEST_CASE("exact Selberg integral")
{
    CHECK(selberg_exact({1, 1, 1, 0}).rational_value() == 1);
    CHECK(selberg_exact({1, 2, 3, 0}).rational_value() == ExactRational(1, 12));
    CHECK(selberg_exact({2, 1, 1, ExactRational(1, 2)}).rational_value() == ExactRational(1, 3));
    CHECK(selberg_exact({2, 1, 1, 1}).rational_value() == ExactRational(1, 6));
    PiHalfScalar arcsine = selberg_exact({1, ExactRational(1, 2), ExactRational(1, 2), 0});
    CHECK(arcsine == PiHalfScalar(1, 2));
    CHECK_THROWS_AS(selberg_exact({1, 0, 1, 0}), ArgumentError);
    CHECK_THROWS_AS(selberg_exact({1, ExactRational(1, 3), 1, 0}), ArgumentError);
    CHECK_THROWS_AS(selberg_exact({0, 1, 1, 0}), ArgumentError);
    for (int n = 1; n <= 3; ++n) {
        for (int r = 0; r <= 2; ++r) {
            for (int m = 0; m <= 3; ++m) {
                PiHalfScalar v = selberg_exact({n, r + 1, 2, ExactRational(m, 2)});
                CHECK(v.pi_half_exponent() == 0);
                CHECK(v.rational_value() == selberg_combinatorial(n, r, 1, m));
            }
        }
    }
}

TEST_CASE("box integrals")
{
    CHECK(box_integral_exact({1, {1}, {0}, {{0}}}) == ExactRational(1, 2));
    CHECK(box_integral_exact({1, {2}, {3}, {{0}}}) == ExactRational(1, 60));
    CHECK(box_integral_exact({2, {0, 0}, {0, 0}, {{0, 2}, {0, 0}}}) == ExactRational(1, 6));
    CHECK(box_integral_exact({2, {0, 0}, {0, 0}, {{0, 1}, {0, 0}}}) == ExactRational(1, 3));
    CHECK(box_integral_exact(ars_integrand(Composition({1, 1}), 0, 0, 1)) == ExactRational(1, 3));
    CHECK(box_integral_exact(ars_integrand(Composition({1, 2}), 0, 0, 1)) == ExactRational(1, 6));
    CHECK_THROWS_AS(box_integral_exact({5, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, std::vector<std::vector<int>>(5, std::vector<int>(5, 0))}),
                    BudgetError);
    CHECK_THROWS_AS(box_integral_exact({1, {30}, {30}, {{0}}}), BudgetError);
    CHECK_THROWS_AS(box_integral_exact({2, {0}, {0, 0}, {{0, 0}, {0, 0}}}), ArgumentError);
}

TEST_CASE("cell counts of books")
{
    Composition a({1, 2});
    Composition r({1, 1});
    Composition s({0, 2});
    CHECK(book_cells(a, r, s) == ExactInt(make_ars_book(a, r, s).total_cells()));
    CHECK(book_minus_cells(a, r, s) == ExactInt(make_ars_book(a, r, s, true).total_cells()));
}
