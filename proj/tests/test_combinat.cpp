#include "youngbook/combinat.hpp"
#include "youngbook/formulas.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace youngbook;

namespace {

BookPtr share(BookShape book) { return std::make_shared<const BookShape>(std::move(book)); }

}  // namespace

TEST_CASE("down-set DP on small posets")
{
    CHECK(count_linear_extensions(OrderConstraints(4, {}, OrderKind::Young)) == 24);
    CHECK(count_linear_extensions(OrderConstraints(4, {{0, 1}, {1, 2}, {2, 3}}, OrderKind::Young)) == 1);
    // Two 2-chains: C(4,2) interleavings.
    CHECK(count_linear_extensions(OrderConstraints(4, {{0, 1}, {2, 3}}, OrderKind::Young)) == 6);
    CHECK_THROWS_AS(count_linear_extensions(OrderConstraints(2, {{0, 1}, {1, 0}}, OrderKind::Young)), ConstraintError);
    CHECK_THROWS_AS(count_linear_extensions(OrderConstraints(12, {}, OrderKind::Young), 100), BudgetError);
    CHECK_THROWS_AS(count_linear_extensions(OrderConstraints(65, {}, OrderKind::Young)), BudgetError);
}

TEST_CASE("linear extension stream is lexicographic and complete")
{
    OrderConstraints poset(4, {{0, 2}, {1, 3}}, OrderKind::Young);
    LinearExtensionStream stream(poset);
    std::vector<std::vector<int>> words;
    while (auto w = stream.next()) words.push_back(*w);
    CHECK(words.size() == 6);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(words.front() == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("fillings of the shifted staircase")
{
    BookPtr book = share(make_staircase_book(3, 1));
    auto young = enumerate_fillings(book, OrderKind::Young);
    auto selberg = enumerate_fillings(book, OrderKind::Selberg);
    CHECK(young.size() == 2);
    CHECK(selberg.size() == 4);
    for (const Filling& f : young) {
        CHECK(is_valid_filling(f, OrderKind::Young));
        CHECK(is_valid_filling(f, OrderKind::Selberg));
        CHECK(f.label_at(0, {1, 1}) == 1);
        CHECK(Filling::from_word(book, f.word()) == f);
    }
    CHECK_THROWS_AS(Filling(book, {1, 2, 3}), ArgumentError);
    CHECK_THROWS_AS(Filling(book, {1, 1, 2, 3, 4, 5}), ArgumentError);
}

TEST_CASE("enumeration budget and limit")
{
    BookPtr book = share(make_staircase_book(5, 1));
    CHECK_THROWS_AS(FillingStream(book, OrderKind::Young, EnumerationOptions{14, std::nullopt}), BudgetError);
    auto first = enumerate_fillings(book, OrderKind::Young, EnumerationOptions{14, 3});
    CHECK(first.size() == 3);
}

TEST_CASE("gap vectors use the sentinels 0 and N+1")
{
    BookPtr book = share(make_staircase_book(3, 1));
    for (const Filling& f : enumerate_fillings(book, OrderKind::Selberg)) {
        GapVector g = classify_by_gaps(f);
        REQUIRE(g.gaps.size() == 4);
        long sum = 0;
        for (long d : g.gaps) {
            CHECK(d >= 0);
            sum += d;
        }
        CHECK(sum == 6 - 3);
        CHECK(g.interior().size() == 2);
    }
}

TEST_CASE("gap polynomial totals equal the DP count")
{
    for (OrderKind kind : {OrderKind::Young, OrderKind::Selberg}) {
        BookShape book = make_nrs_book(2, Composition({1, 0}), Composition({0, 1}));
        MultiPoly poly = gap_polynomial(book, kind);
        ExactRational total = 0;
        for (const auto& [e, c] : poly.terms()) total += c;
        CHECK(total == count_linear_extensions(order_constraints(book, kind)));
        CHECK(poly.variable_count() == 3);
        CHECK(poly.is_homogeneous());
    }
}

TEST_CASE("Selberg alphabet and permutations")
{
    auto alphabet = selberg_alphabet(2, 1, 1, 1);
    CHECK(alphabet.size() == 7);
    CHECK(alphabet.front().kind == LetterKind::X);
    CHECK_THROWS_AS(selberg_alphabet(0, 0, 0, 0), ArgumentError);

    auto perms = enumerate_selberg_permutations(2, 1, 1, 1);
    CHECK(ExactInt(perms.size()) == sp_count(2, 1, 1, 1));
    std::set<std::string> seen;
    for (const auto& p : perms) {
        CHECK(is_selberg_permutation(p, 2, 1, 1, 1));
        seen.insert(p.to_string());
    }
    CHECK(seen.size() == perms.size());

    SelbergPermutation bad = perms.front();
    std::reverse(bad.letters.begin(), bad.letters.end());
    CHECK_FALSE(is_selberg_permutation(bad, 2, 1, 1, 1));
    SelbergPermutation short_word = perms.front();
    short_word.letters.pop_back();
    CHECK_FALSE(is_selberg_permutation(short_word, 2, 1, 1, 1));
    CHECK_THROWS_AS(SelbergPermutationStream(3, 3, 3, 0), BudgetError);
}

TEST_CASE("book letters and the bijection")
{
    BookPtr book = share(make_nrs_book(2, Composition({1, 0}), Composition({0, 1}), true));
    LetterMap map(book);
    std::set<SelbergLetter> letters;
    for (std::size_t id = 0; id < book->total_cells(); ++id) letters.insert(map.letter(id));
    auto alphabet = selberg_alphabet(2, 1, 1, 2);
    CHECK(letters == std::set<SelbergLetter>(alphabet.begin(), alphabet.end()));

    for (const Filling& f : enumerate_fillings(book, OrderKind::Selberg)) {
        SelbergPermutation p = book_to_permutation(f);
        CHECK(is_selberg_permutation(p, 2, 1, 1, 2));
        CHECK(permutation_to_book(book, p) == f);
    }
    SelbergPermutation wrong;
    wrong.letters = alphabet;
    std::reverse(wrong.letters.begin(), wrong.letters.end());
    CHECK_THROWS_AS(map.to_filling(wrong), ArgumentError);
    CHECK_THROWS_AS(LetterMap(share(make_nrs_book(1, Composition({1}), Composition({1})))), ArgumentError);
}

TEST_CASE("freeze block")
{
    BookPtr book = share(make_staircase_book(4, 1));
    std::size_t applied = 0;
    for (const Filling& f : enumerate_fillings(book, OrderKind::Young)) {
        GapVector g = classify_by_gaps(f);
        if (freeze_applies(g, 0, 3)) {
            ++applied;
            CHECK(check_freeze(f, 0, 3, OrderKind::Young));
        } else {
            CHECK_THROWS_AS(check_freeze(f, 0, 3, OrderKind::Young), ArgumentError);
        }
    }
    CHECK(applied > 0);
    CHECK_THROWS_AS(check_freeze(enumerate_fillings(share(make_staircase_book(2, 2)), OrderKind::Young).front(), 0, 2,
                                 OrderKind::Young),
                    ArgumentError);
}

TEST_CASE("square correspondence gives standard tableaux")
{
    BookPtr book = share(make_staircase_book(3, 2));
    Correspondence corr = square_correspondence(*book);
    auto fillings = enumerate_fillings(book, OrderKind::Young);
    CHECK(ExactInt(fillings.size()) == hook_count_straight(Partition({3, 3, 3})));
    for (const Filling& f : fillings) {
        Tableau t = to_square_tableau(f);
        CHECK(is_standard_tableau(t));
        CHECK(from_tableau(book, corr, t) == f);
    }
    Filling selberg_only = [&] {
        for (const Filling& f : enumerate_fillings(book, OrderKind::Selberg)) {
            if (!is_valid_filling(f, OrderKind::Young)) return f;
        }
        throw std::logic_error("every Selberg book is Young");
    }();
    CHECK_THROWS_AS(to_square_tableau(selberg_only), ArgumentError);
}
