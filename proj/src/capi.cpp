#include "youngbook/youngbook.h"

#include "youngbook/combinat.hpp"
#include "youngbook/dsl.hpp"
#include "youngbook/formulas.hpp"
#include "youngbook/genfun.hpp"
#include "youngbook/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>

using namespace youngbook;

struct ybk_book {
    BookPtr shape;
};

struct ybk_enum {
    BookPtr book;
    std::variant<std::unique_ptr<FillingStream>, std::unique_ptr<SelbergPermutationStream>> stream;
};

struct ybk_poly {
    MultiPoly poly;
};

struct ybk_report {
    VerifyReport report;
};

namespace {

thread_local std::string last_error;

ybk_status fail(ybk_status status, const std::string& message)
{
    last_error = message;
    return status;
}

template <class F>
ybk_status guarded(F&& body)
{
    try {
        last_error.clear();
        body();
        return YBK_OK;
    } catch (const ShapeError& e) {
        return fail(YBK_SHAPE, e.what());
    } catch (const ConstraintError& e) {
        return fail(YBK_CONSTRAINT, e.what());
    } catch (const BudgetError& e) {
        return fail(YBK_BUDGET, e.what());
    } catch (const IntegralityError& e) {
        return fail(YBK_INTEGRALITY, e.what());
    } catch (const ParseError& e) {
        return fail(YBK_PARSE, e.what());
    } catch (const ArgumentError& e) {
        return fail(YBK_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(YBK_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(YBK_INTERNAL, e.what());
    }
}

char* dup(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (!p) throw ArgumentError(std::string(what) + " is null");
}

Composition composition(const int* parts, size_t pages)
{
    if (pages > 0) require(parts, "composition array");
    return Composition(std::vector<int>(parts, parts + pages));
}

OrderKind order_kind(ybk_kind kind)
{
    switch (kind) {
    case YBK_SELBERG: return OrderKind::Selberg;
    case YBK_YOUNG: return OrderKind::Young;
    }
    throw ArgumentError("unknown order kind " + std::to_string(static_cast<int>(kind)));
}

std::vector<int> row_lengths(const PageShape& page)
{
    std::vector<int> rows;
    for (int row = 1; row <= page.row_count(); ++row) {
        int length = 0;
        for (int col = 1; col <= page.col_count(); ++col) length += page.element_at(row, col) >= 0 ? 1 : 0;
        if (length > 0) rows.push_back(length);
    }
    return rows;
}

ExactInt page_tableau_count(const PageShape& page, std::uint64_t budget)
{
    switch (page.kind()) {
    case PageKind::ShiftedStaircase:
    case PageKind::Shifted:
        return hook_count_shifted(Partition(row_lengths(page)));
    case PageKind::Skew: {
        // The page label keeps lambda and mu, which the cells alone lose
        // when a row is empty.
        std::string label = page.describe();
        auto colon = label.find(':');
        auto slash = label.find('/');
        Partition lambda(parse_int_list(label.substr(colon + 1, slash - colon - 1)));
        Partition mu(parse_int_list(label.substr(slash + 1)));
        if (mu.length() == 0) return hook_count_straight(lambda);
        return skew_count_determinant(lambda, mu);
    }
    default:
        return count_linear_extensions(young_order(page), budget);
    }
}

std::string filling_text(const Filling& f)
{
    const BookShape& book = f.book();
    std::string out;
    for (std::size_t p = 0; p < book.page_count(); ++p) {
        const PageShape& page = book.pages()[p];
        if (p > 0) out += '\n';
        for (int row = 1; row <= page.row_count(); ++row) {
            if (row > 1) out += " / ";
            bool first = true;
            for (int col = 1; col <= page.col_count(); ++col) {
                int id = book.global_id_at(p, {row, col});
                if (id < 0) continue;
                if (!first) out += ' ';
                first = false;
                out += std::to_string(f.label(static_cast<std::size_t>(id)));
            }
        }
    }
    return out;
}

std::string factorize(const std::string& decimal)
{
    ExactInt n(0);
    if (decimal.empty() || n.set_str(decimal, 10) != 0) throw ParseError("not a decimal integer: '" + decimal + "'");
    std::string out;
    auto append = [&out](const std::string& factor, unsigned long e) {
        if (!out.empty()) out += "·";
        out += factor;
        if (e > 1) out += "^" + std::to_string(e);
    };
    if (n < 0) {
        out = "-1";
        n = -n;
    }
    if (n <= 1) return out.empty() ? n.get_str() : out + "·" + n.get_str();
    for (unsigned long p = 2; p <= 1000000 && n > 1; ++p) {
        if (ExactInt(p) * p > n) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) append(std::to_string(p), e);
    }
    if (n > 1) append(n.get_str(), 1);
    return out;
}

}  // namespace

extern "C" {

const char* ybk_last_error(void) { return last_error.c_str(); }

const char* ybk_status_name(ybk_status status)
{
    switch (status) {
    case YBK_OK: return "ok";
    case YBK_INVALID_ARGUMENT: return "invalid argument";
    case YBK_SHAPE: return "shape error";
    case YBK_CONSTRAINT: return "constraint error";
    case YBK_BUDGET: return "budget exceeded";
    case YBK_INTEGRALITY: return "integrality error";
    case YBK_PARSE: return "parse error";
    case YBK_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ybk_string_free(char* text) { std::free(text); }

ybk_status ybk_count_sp(int n, int r, int s, int m, char** value)
{
    return guarded([&] {
        require(value, "value");
        *value = dup(to_string(sp_count(n, r, s, m)));
    });
}

ybk_status ybk_count_sb(int n, int m, char** value)
{
    return guarded([&] {
        require(value, "value");
        *value = dup(to_string(sb_count(n, m)));
    });
}

ybk_status ybk_count_yb(int n, int m, char** value)
{
    return guarded([&] {
        require(value, "value");
        *value = dup(to_string(yb_count(n, m)));
    });
}

ybk_status ybk_count_yb_nrs(int n, const int* r, const int* s, size_t pages, char** value)
{
    return guarded([&] {
        require(value, "value");
        *value = dup(to_string(yb_count_nrs(n, composition(r, pages), composition(s, pages))));
    });
}

ybk_status ybk_count_yb_ars(int k, int n, const int* r, const int* s, size_t pages, char** value)
{
    return guarded([&] {
        require(value, "value");
        *value = dup(to_string(yb_count_ars_kn(k, n, composition(r, pages), composition(s, pages))));
    });
}

ybk_status ybk_count_syt(const char* shape, uint64_t state_budget, char** value)
{
    return guarded([&] {
        require(shape, "shape");
        require(value, "value");
        *value = dup(to_string(page_tableau_count(parse_page(shape), state_budget)));
    });
}

ybk_status ybk_book_parse(const char* text, ybk_book** book)
{
    return guarded([&] {
        require(text, "text");
        require(book, "book");
        *book = new ybk_book{std::make_shared<const BookShape>(parse_book(text))};
    });
}

void ybk_book_free(ybk_book* book) { delete book; }

size_t ybk_book_cells(const ybk_book* book) { return book ? book->shape->total_cells() : 0; }

size_t ybk_book_pages(const ybk_book* book) { return book ? book->shape->page_count() : 0; }

ybk_status ybk_book_describe(const ybk_book* book, char** text)
{
    return guarded([&] {
        require(book, "book");
        require(text, "text");
        *text = dup(book->shape->describe());
    });
}

ybk_status ybk_book_element(const ybk_book* book, size_t element, int* page, int* row, int* col)
{
    return guarded([&] {
        require(book, "book");
        require(page, "page");
        require(row, "row");
        require(col, "col");
        if (element >= book->shape->total_cells()) throw ArgumentError("element id out of range");
        const BookElement& e = book->shape->element(element);
        *page = e.diagonal ? -1 : e.page;
        *row = e.diagonal ? e.diagonal_index : e.cell.row;
        *col = e.diagonal ? e.diagonal_index : e.cell.col;
    });
}

ybk_status ybk_book_count(const ybk_book* book, ybk_kind kind, uint64_t state_budget, char** value)
{
    return guarded([&] {
        require(book, "book");
        require(value, "value");
        auto constraints = order_constraints(*book->shape, order_kind(kind));
        *value = dup(to_string(count_linear_extensions(constraints, state_budget)));
    });
}

ybk_status ybk_book_gap_polynomial(const ybk_book* book, ybk_kind kind, uint64_t state_budget, ybk_poly** poly)
{
    return guarded([&] {
        require(book, "book");
        require(poly, "poly");
        *poly = new ybk_poly{gap_polynomial(*book->shape, order_kind(kind), state_budget)};
    });
}

ybk_status ybk_enum_fillings(const ybk_book* book, ybk_kind kind, size_t cell_budget, uint64_t limit,
                             ybk_enum** stream)
{
    return guarded([&] {
        require(book, "book");
        require(stream, "stream");
        EnumerationOptions opt{cell_budget, limit ? std::optional<std::uint64_t>(limit) : std::nullopt};
        auto s = std::make_unique<FillingStream>(book->shape, order_kind(kind), opt);
        *stream = new ybk_enum{book->shape, std::move(s)};
    });
}

ybk_status ybk_enum_permutations(int n, int r, int s, int m, size_t cell_budget, uint64_t limit, ybk_enum** stream)
{
    return guarded([&] {
        require(stream, "stream");
        EnumerationOptions opt{cell_budget, limit ? std::optional<std::uint64_t>(limit) : std::nullopt};
        auto ps = std::make_unique<SelbergPermutationStream>(n, r, s, m, opt);
        *stream = new ybk_enum{nullptr, std::move(ps)};
    });
}

ybk_status ybk_enum_next(ybk_enum* stream, char** text, int* done)
{
    return guarded([&] {
        require(stream, "stream");
        require(text, "text");
        require(done, "done");
        std::optional<std::string> item;
        if (auto* fs = std::get_if<std::unique_ptr<FillingStream>>(&stream->stream)) {
            if (auto f = (*fs)->next()) item = filling_text(*f);
        } else {
            auto& ps = std::get<std::unique_ptr<SelbergPermutationStream>>(stream->stream);
            if (auto p = ps->next()) item = p->to_string();
        }
        *done = item ? 0 : 1;
        *text = dup(item.value_or(""));
    });
}

ybk_status ybk_enum_next_labels(ybk_enum* stream, int* labels, size_t capacity, int* done)
{
    return guarded([&] {
        require(stream, "stream");
        require(done, "done");
        auto* fs = std::get_if<std::unique_ptr<FillingStream>>(&stream->stream);
        if (!fs) throw ArgumentError("labels are only available for filling streams");
        if (capacity < stream->book->total_cells()) throw ArgumentError("label buffer smaller than the book");
        require(labels, "labels");
        auto f = (*fs)->next();
        *done = f ? 0 : 1;
        if (f) std::copy(f->labels().begin(), f->labels().end(), labels);
    });
}

void ybk_enum_free(ybk_enum* stream) { delete stream; }

ybk_status ybk_genfun_sb(int n, int m, ybk_poly** poly)
{
    return guarded([&] {
        require(poly, "poly");
        *poly = new ybk_poly{sb_genfun(n, m)};
    });
}

ybk_status ybk_genfun_yb(int n, int m, ybk_poly** poly)
{
    return guarded([&] {
        require(poly, "poly");
        *poly = new ybk_poly{yb_genfun(n, m)};
    });
}

ybk_status ybk_genfun_sb_nrs(int n, const int* r, const int* s, size_t pages, int minus, ybk_poly** poly)
{
    return guarded([&] {
        require(poly, "poly");
        *poly = new ybk_poly{sb_genfun_nrs(n, composition(r, pages), composition(s, pages), minus != 0)};
    });
}

ybk_status ybk_genfun_yb_nrs(int n, const int* r, const int* s, size_t pages, ybk_poly** poly)
{
    return guarded([&] {
        require(poly, "poly");
        *poly = new ybk_poly{yb_genfun_nrs(n, composition(r, pages), composition(s, pages))};
    });
}

void ybk_poly_free(ybk_poly* poly) { delete poly; }

size_t ybk_poly_variables(const ybk_poly* poly) { return poly ? poly->poly.variable_count() : 0; }

int ybk_poly_first_index(const ybk_poly* poly) { return poly ? poly->poly.first_index() : 0; }

ybk_status ybk_poly_text(const ybk_poly* poly, char** text)
{
    return guarded([&] {
        require(poly, "poly");
        require(text, "text");
        *text = dup(poly->poly.to_text());
    });
}

ybk_status ybk_poly_json(const ybk_poly* poly, char** text)
{
    return guarded([&] {
        require(poly, "poly");
        require(text, "text");
        *text = dup(poly->poly.to_json());
    });
}

ybk_status ybk_poly_coefficient(const ybk_poly* poly, const int* exponents, size_t count, char** value)
{
    return guarded([&] {
        require(poly, "poly");
        require(value, "value");
        if (count > 0) require(exponents, "exponents");
        *value = dup(to_string(poly->poly.coefficient(Exponents(exponents, exponents + count))));
    });
}

ybk_status ybk_poly_gap_count(const ybk_poly* poly, const long* gaps, size_t count, char** value)
{
    return guarded([&] {
        require(poly, "poly");
        require(value, "value");
        if (count > 0) require(gaps, "gaps");
        *value = dup(to_string(gap_count(poly->poly, std::vector<long>(gaps, gaps + count))));
    });
}

ybk_status ybk_poly_exp_moment(const ybk_poly* poly, char** value)
{
    return guarded([&] {
        require(poly, "poly");
        require(value, "value");
        *value = dup(to_string(exp_moment(poly->poly)));
    });
}

ybk_status ybk_selberg(int n, const char* alpha, const char* beta, const char* gamma, char** value)
{
    return guarded([&] {
        require(alpha, "alpha");
        require(beta, "beta");
        require(gamma, "gamma");
        require(value, "value");
        SelbergParams params{n, parse_rational(alpha), parse_rational(beta), parse_rational(gamma)};
        *value = dup(selberg_exact(params).to_string());
    });
}

ybk_status ybk_factorize(const char* decimal, char** text)
{
    return guarded([&] {
        require(decimal, "decimal");
        require(text, "text");
        *text = dup(factorize(decimal));
    });
}

void ybk_verify_defaults(ybk_verify_options* options)
{
    if (!options) return;
    VerifyOptions d;
    *options = {d.max_n, d.max_m, d.max_rs, d.cell_budget, d.state_budget, d.max_alphabet};
}

size_t ybk_identity_count(void) { return identity_names().size(); }

const char* ybk_identity_name(size_t index)
{
    const auto& names = identity_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

ybk_status ybk_verify(const char* name, const ybk_verify_options* options, ybk_report** report)
{
    return guarded([&] {
        require(name, "name");
        require(report, "report");
        VerifyOptions opt;
        if (options) {
            opt.max_n = options->max_n;
            opt.max_m = options->max_m;
            opt.max_rs = options->max_rs;
            opt.cell_budget = options->cell_budget;
            opt.state_budget = options->state_budget;
            opt.max_alphabet = options->max_alphabet;
        }
        *report = new ybk_report{run_verification(name, opt)};
    });
}

size_t ybk_report_size(const ybk_report* report) { return report ? report->report.cases.size() : 0; }

ybk_status ybk_report_case(const ybk_report* report, size_t index, ybk_case_view* view)
{
    return guarded([&] {
        require(report, "report");
        require(view, "view");
        if (index >= report->report.cases.size()) throw ArgumentError("case index out of range");
        const VerifyCase& c = report->report.cases[index];
        view->identity = c.identity.c_str();
        view->check = c.check.c_str();
        view->params = c.params.c_str();
        view->lhs = c.lhs.c_str();
        view->rhs = c.rhs.c_str();
        view->note = c.note.c_str();
        switch (c.status) {
        case CaseStatus::Pass: view->status = YBK_CASE_PASS; break;
        case CaseStatus::Fail: view->status = YBK_CASE_FAIL; break;
        case CaseStatus::Erratum: view->status = YBK_CASE_ERRATUM; break;
        }
    });
}

size_t ybk_report_count(const ybk_report* report, ybk_case_status status)
{
    if (!report) return 0;
    switch (status) {
    case YBK_CASE_PASS: return report->report.count(CaseStatus::Pass);
    case YBK_CASE_FAIL: return report->report.count(CaseStatus::Fail);
    case YBK_CASE_ERRATUM: return report->report.count(CaseStatus::Erratum);
    }
    return 0;
}

void ybk_report_free(ybk_report* report) { delete report; }

}  // extern "C"
