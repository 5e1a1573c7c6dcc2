// Exercises the shared library through its C header only.

#include "youngbook/youngbook.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

std::string take(char* s)
{
    std::string out = s;
    ybk_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("C API: closed-form counts")
{
    char* v = nullptr;
    REQUIRE(ybk_count_yb(3, 1, &v) == YBK_OK);
    CHECK(take(v) == "2");
    REQUIRE(ybk_count_sb(3, 1, &v) == YBK_OK);
    CHECK(take(v) == "4");
    REQUIRE(ybk_count_sp(2, 1, 1, 1, &v) == YBK_OK);
    CHECK(std::stoi(take(v)) > 0);
    int r[] = {1, 0};
    int s[] = {0, 1};
    REQUIRE(ybk_count_yb_nrs(2, r, s, 2, &v) == YBK_OK);
    CHECK(!take(v).empty());
    int r1[] = {0};
    REQUIRE(ybk_count_yb_ars(2, 1, r1, r1, 1, &v) == YBK_OK);
    CHECK(take(v) == "1");
    REQUIRE(ybk_count_syt("skew:3,3/1", 1000, &v) == YBK_OK);
    CHECK(take(v) == "5");
    REQUIRE(ybk_count_syt("skew:3,2", 1000, &v) == YBK_OK);
    CHECK(take(v) == "5");
    REQUIRE(ybk_count_syt("shifted:4,3,2,1", 1000, &v) == YBK_OK);
    CHECK(take(v) == "12");
    REQUIRE(ybk_count_syt("trunc:3,3,3\\1", 1000, &v) == YBK_OK);
    CHECK(std::stoi(take(v)) > 0);
}

TEST_CASE("C API: error codes and messages")
{
    char* v = nullptr;
    CHECK(ybk_count_yb(3, 1, nullptr) == YBK_INVALID_ARGUMENT);
    CHECK(std::string(ybk_last_error()).find("null") != std::string::npos);
    CHECK(ybk_count_syt("circle:3", 10, &v) == YBK_PARSE);
    CHECK(ybk_count_syt("shifted:2,2", 10, &v) == YBK_SHAPE);
    ybk_book* book = nullptr;
    REQUIRE(ybk_book_parse("book:[shifted:6,2,1;shifted:5,4,1]", &book) == YBK_OK);
    CHECK(ybk_book_count(book, YBK_YOUNG, 10, &v) == YBK_BUDGET);
    CHECK(std::string(ybk_last_error()).find("budget") != std::string::npos);
    ybk_enum* stream = nullptr;
    CHECK(ybk_enum_fillings(book, YBK_YOUNG, 4, 0, &stream) == YBK_BUDGET);
    ybk_book_free(book);
    CHECK(ybk_selberg(1, "0", "1", "0", &v) == YBK_INVALID_ARGUMENT);
    CHECK(ybk_selberg(1, "1/x", "1", "0", &v) == YBK_PARSE);
    ybk_poly* p = nullptr;
    REQUIRE(ybk_genfun_yb(3, 1, &p) == YBK_OK);
    long gaps[] = {1, 1, 1};
    CHECK(ybk_poly_gap_count(p, gaps, 3, &v) == YBK_INVALID_ARGUMENT);
    ybk_poly_free(p);
    CHECK(ybk_verify("nope", nullptr, nullptr) == YBK_INVALID_ARGUMENT);
    CHECK(std::string(ybk_status_name(YBK_INTEGRALITY)) == "integrality error");
    CHECK(ybk_count_yb(3, 1, &v) == YBK_OK);
    CHECK(std::string(ybk_last_error()).empty());
    ybk_string_free(v);
    ybk_string_free(nullptr);
}

TEST_CASE("C API: books and fillings")
{
    ybk_book* book = nullptr;
    REQUIRE(ybk_book_parse("shifted:3,2,1", &book) == YBK_OK);
    CHECK(ybk_book_cells(book) == 6);
    CHECK(ybk_book_pages(book) == 1);
    char* v = nullptr;
    REQUIRE(ybk_book_describe(book, &v) == YBK_OK);
    CHECK(take(v) == "book:[shifted:3,2,1]");
    REQUIRE(ybk_book_count(book, YBK_SELBERG, 1000, &v) == YBK_OK);
    CHECK(take(v) == "4");
    int page = 0, row = 0, col = 0;
    REQUIRE(ybk_book_element(book, 0, &page, &row, &col) == YBK_OK);
    CHECK(page == -1);
    CHECK(row == 1);
    CHECK(ybk_book_element(book, 6, &page, &row, &col) == YBK_INVALID_ARGUMENT);

    ybk_enum* stream = nullptr;
    REQUIRE(ybk_enum_fillings(book, YBK_YOUNG, 14, 0, &stream) == YBK_OK);
    std::vector<std::string> items;
    for (;;) {
        int done = 0;
        REQUIRE(ybk_enum_next(stream, &v, &done) == YBK_OK);
        std::string item = take(v);
        if (done) break;
        items.push_back(item);
    }
    ybk_enum_free(stream);
    REQUIRE(items.size() == 2);
    CHECK(items[0] == "1 2 4 / 3 5 / 6");

    REQUIRE(ybk_enum_fillings(book, YBK_SELBERG, 14, 3, &stream) == YBK_OK);
    std::vector<int> labels(6);
    int done = 0;
    int seen = 0;
    while (ybk_enum_next_labels(stream, labels.data(), labels.size(), &done) == YBK_OK && !done) ++seen;
    CHECK(seen == 3);
    CHECK(ybk_enum_next_labels(stream, labels.data(), 2, &done) == YBK_INVALID_ARGUMENT);
    ybk_enum_free(stream);

    ybk_poly* gaps = nullptr;
    REQUIRE(ybk_book_gap_polynomial(book, YBK_SELBERG, 1000, &gaps) == YBK_OK);
    CHECK(ybk_poly_variables(gaps) == 4);
    int e[] = {0, 2, 1, 0};
    REQUIRE(ybk_poly_coefficient(gaps, e, 4, &v) == YBK_OK);
    CHECK(take(v) == "2");
    ybk_poly_free(gaps);
    ybk_book_free(book);
}

TEST_CASE("C API: Selberg permutations")
{
    ybk_enum* stream = nullptr;
    REQUIRE(ybk_enum_permutations(2, 0, 0, 1, 14, 0, &stream) == YBK_OK);
    char* v = nullptr;
    int done = 0;
    REQUIRE(ybk_enum_next(stream, &v, &done) == YBK_OK);
    CHECK(done == 0);
    CHECK(take(v) == "x1 a12^1 x2");
    REQUIRE(ybk_enum_next(stream, &v, &done) == YBK_OK);
    CHECK(done == 1);
    ybk_string_free(v);
    int labels[4];
    CHECK(ybk_enum_next_labels(stream, labels, 4, &done) == YBK_INVALID_ARGUMENT);
    ybk_enum_free(stream);
}

TEST_CASE("C API: generating functions")
{
    ybk_poly* p = nullptr;
    REQUIRE(ybk_genfun_sb(3, 1, &p) == YBK_OK);
    CHECK(ybk_poly_first_index(p) == 1);
    char* v = nullptr;
    REQUIRE(ybk_poly_text(p, &v) == YBK_OK);
    CHECK(take(v) == "1 * t1^2 t2 + 1 * t1 t2^2");
    REQUIRE(ybk_poly_exp_moment(p, &v) == YBK_OK);
    CHECK(take(v) == "4");
    long gaps[] = {2, 1};
    REQUIRE(ybk_poly_gap_count(p, gaps, 2, &v) == YBK_OK);
    CHECK(take(v) == "2");
    REQUIRE(ybk_poly_json(p, &v) == YBK_OK);
    CHECK(take(v).find("\"exponents\":[2,1]") != std::string::npos);
    ybk_poly_free(p);

    int r[] = {1};
    int s[] = {1};
    REQUIRE(ybk_genfun_sb_nrs(2, r, s, 1, 1, &p) == YBK_OK);
    CHECK(ybk_poly_variables(p) == 3);
    ybk_poly_free(p);
    REQUIRE(ybk_genfun_yb_nrs(2, r, s, 1, &p) == YBK_OK);
    ybk_poly_free(p);
}

TEST_CASE("C API: Selberg integral and factorization")
{
    char* v = nullptr;
    REQUIRE(ybk_selberg(2, "1", "1", "1/2", &v) == YBK_OK);
    CHECK(take(v) == "1/3");
    REQUIRE(ybk_selberg(1, "1/2", "1/2", "0", &v) == YBK_OK);
    CHECK(take(v) == "1 * pi^(2/2)");
    REQUIRE(ybk_factorize("102954644948400", &v) == YBK_OK);
    CHECK(take(v) == "2^4·3·5^2·7·17·19·23·1649819");
    REQUIRE(ybk_factorize("1", &v) == YBK_OK);
    CHECK(take(v) == "1");
    REQUIRE(ybk_factorize("2000072000198", &v) == YBK_OK);
    CHECK(take(v) == "2·1000036000099");
    CHECK(ybk_factorize("12a", &v) == YBK_PARSE);
}

TEST_CASE("C API: verification report")
{
    CHECK(ybk_identity_count() == 12);
    CHECK(std::string(ybk_identity_name(0)) == "big-young-book");
    CHECK(ybk_identity_name(99) == nullptr);
    ybk_verify_options opt;
    ybk_verify_defaults(&opt);
    CHECK(opt.cell_budget == 14);
    opt.max_n = 2;
    ybk_report* report = nullptr;
    REQUIRE(ybk_verify("erratum-notes", &opt, &report) == YBK_OK);
    CHECK(ybk_report_size(report) == 5);
    CHECK(ybk_report_count(report, YBK_CASE_ERRATUM) == 5);
    CHECK(ybk_report_count(report, YBK_CASE_FAIL) == 0);
    ybk_case_view view;
    REQUIRE(ybk_report_case(report, 0, &view) == YBK_OK);
    CHECK(std::string(view.identity) == "erratum-notes");
    CHECK(view.status == YBK_CASE_ERRATUM);
    CHECK(ybk_report_case(report, 5, &view) == YBK_INVALID_ARGUMENT);
    ybk_report_free(report);
}
