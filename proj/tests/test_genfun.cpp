#include "youngbook/combinat.hpp"
#include "youngbook/formulas.hpp"
#include "youngbook/genfun.hpp"
#include "youngbook/multipoly.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace youngbook;

TEST_CASE("polynomial arithmetic")
{
    MultiPoly x = MultiPoly::variable_sum(2, 1, 0, 1);
    MultiPoly y = MultiPoly::variable_sum(2, 1, 1, 2);
    MultiPoly s = x + y;
    MultiPoly sq = s * s;
    CHECK(sq.coefficient({1, 1}) == 2);
    CHECK(sq.coefficient({2, 0}) == 1);
    CHECK(sq.total_degree() == 2);
    CHECK(sq.is_homogeneous());
    CHECK(s.pow(3) == s * s * s);
    CHECK(s.pow(0) == MultiPoly::constant(2, 1, 1));
    CHECK((sq - sq).is_zero());
    CHECK((sq + MultiPoly::constant(2, 1, 1)).is_homogeneous() == false);
    CHECK(MultiPoly(2, 1).total_degree() == -1);
    CHECK_THROWS_AS(sq.coefficient({1}), ArgumentError);
    CHECK_THROWS_AS(x + MultiPoly::variable_sum(2, 0, 0, 1), ArgumentError);
    CHECK_THROWS_AS(MultiPoly::variable_sum(2, 1, 1, 3), ArgumentError);

    MultiPoly half = sq;
    half *= ExactRational(1, 2);
    CHECK(half.coefficient({1, 1}) == 1);
    half *= ExactRational(0);
    CHECK(half.is_zero());
}

TEST_CASE("text and JSON forms")
{
    MultiPoly x = MultiPoly::variable_sum(2, 1, 0, 1);
    MultiPoly y = MultiPoly::variable_sum(2, 1, 1, 2);
    MultiPoly p = x * x * y + MultiPoly::monomial(1, {0, 1}, ExactRational(-3, 2));
    CHECK(p.to_text() == "1 * t1^2 t2 + -3/2 * t2");
    CHECK(MultiPoly(2, 1).to_text() == "0");
    CHECK(MultiPoly::constant(2, 1, 5).to_text() == "5");

    auto j = nlohmann::json::parse(p.to_json());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["exponents"] == nlohmann::json({2, 1}));
    CHECK(j[1]["numerator"] == "-3");
    CHECK(j[1]["denominator"] == "2");
}

TEST_CASE("terms come out in graded lex order")
{
    MultiPoly s = MultiPoly::variable_sum(3, 0, 0, 3);
    MultiPoly p = s.pow(2) + s;
    std::vector<Exponents> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    REQUIRE(order.size() == 9);
    CHECK(order[0] == Exponents{2, 0, 0});
    CHECK(order[1] == Exponents{1, 1, 0});
    CHECK(order[5] == Exponents{0, 0, 2});
    CHECK(order[6] == Exponents{1, 0, 0});
    CHECK(order[8] == Exponents{0, 0, 1});
}

TEST_CASE("staircase generating functions")
{
    MultiPoly sb = sb_genfun(3, 1);
    CHECK(sb.to_text() == "1 * t1^2 t2 + 1 * t1 t2^2");
    CHECK(gap_count(sb, {2, 1}) == 2);
    CHECK(gap_count(sb, {1, 2}) == 2);
    CHECK(gap_count(sb, {3, 0}) == 0);
    CHECK_THROWS_AS(gap_count(sb, {1, 1, 1}), ArgumentError);
    CHECK(sb_genfun(1, 3) == MultiPoly::constant(0, 1, 1));

    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 3; ++m) {
            CHECK(exp_moment(sb_genfun(n, m)) == ExactRational(sb_count(n, m)));
            CHECK(exp_moment(yb_genfun(n, m)) == ExactRational(yb_count(n, m)));
        }
    }
    CHECK_THROWS_AS(gap_count(yb_genfun(3, 1) * MultiPoly::constant(2, 1, ExactRational(1, 3)), {2, 1}),
                    IntegralityError);
}

TEST_CASE("(n, r, s) generating functions")
{
    Composition r({1, 0});
    Composition s({0, 1});
    MultiPoly minus = sb_genfun_nrs(2, r, s, true);
    CHECK(minus == sb_genfun_minus(2, 1, 1, 2));
    CHECK(minus.variable_count() == 3);
    CHECK(minus.first_index() == 0);
    CHECK(exp_moment(minus) == ExactRational(sb_minus_count(2, r, s)));
    CHECK(exp_moment(sb_genfun_nrs(2, r, s)) == ExactRational(sb_full_count(2, r, s)));
    CHECK(exp_moment(yb_genfun_nrs(2, r, s)) == ExactRational(yb_count_nrs(2, r, s)));
    CHECK(sb_genfun_minus(2, 1, 1, 0).total_degree() == 4);
}

TEST_CASE("gap counts agree with the gap polynomial of the book")
{
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 2; ++m) {
            MultiPoly counts = gap_polynomial(make_staircase_book(n, m), OrderKind::Selberg);
            MultiPoly egf = sb_genfun(n, m);
            for (const auto& [e, c] : counts.terms()) {
                CHECK(e.front() == 0);
                CHECK(e.back() == 0);
                std::vector<long> interior(e.begin() + 1, e.end() - 1);
                CHECK(ExactRational(gap_count(egf, interior)) == c);
            }
        }
    }
}
