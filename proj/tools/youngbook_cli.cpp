// Command-line front end. Talks to the library only through youngbook.h.

#include "youngbook/youngbook.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLibrary = 3;

struct LibraryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ybk_status status)
{
    if (status != YBK_OK) {
        throw LibraryError(std::string(ybk_status_name(status)) + ": " + ybk_last_error());
    }
}

// Takes ownership of a library string.
std::string take(char* text)
{
    std::string out = text ? text : "";
    ybk_string_free(text);
    return out;
}

template <class F>
std::string call_string(F&& f)
{
    char* out = nullptr;
    check(f(&out));
    return take(out);
}

struct BookDeleter {
    void operator()(ybk_book* b) const { ybk_book_free(b); }
};
struct EnumDeleter {
    void operator()(ybk_enum* e) const { ybk_enum_free(e); }
};
struct PolyDeleter {
    void operator()(ybk_poly* p) const { ybk_poly_free(p); }
};
struct ReportDeleter {
    void operator()(ybk_report* r) const { ybk_report_free(r); }
};
using BookHandle = std::unique_ptr<ybk_book, BookDeleter>;
using EnumHandle = std::unique_ptr<ybk_enum, EnumDeleter>;
using PolyHandle = std::unique_ptr<ybk_poly, PolyDeleter>;
using ReportHandle = std::unique_ptr<ybk_report, ReportDeleter>;

std::vector<long> parse_list(const std::string& text, const std::string& flag)
{
    std::vector<long> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

std::vector<int> parse_ints(const std::string& text, const std::string& flag)
{
    std::vector<int> out;
    for (long v : parse_list(text, flag)) out.push_back(static_cast<int>(v));
    return out;
}

struct Options {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> k;
    std::string r;
    std::string s;
    std::string shape;
    std::string book;
    std::string kind = "young";
    std::string gaps;
    std::string alpha;
    std::string beta;
    std::string gamma;
    std::optional<std::uint64_t> budget;
    std::uint64_t limit = 0;
    bool minus = false;
    bool json = false;
    int max_n = 3;
    int max_m = 2;
    int max_rs = 2;
    int max_alphabet = 10;
};

int need(const std::optional<int>& v, const char* flag)
{
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

int single(const std::string& text, const char* flag, int fallback = 0)
{
    auto values = parse_ints(text, flag);
    if (values.empty()) return fallback;
    if (values.size() != 1) throw UsageError(std::string(flag) + " takes a single value here");
    return values.front();
}

struct Pages {
    std::vector<int> r;
    std::vector<int> s;
};

Pages pages(const Options& o)
{
    Pages p{parse_ints(o.r, "-r"), parse_ints(o.s, "-s")};
    if (p.r.empty() && p.s.empty()) throw UsageError("-r and -s must list one entry per page");
    if (p.r.empty()) p.r.assign(p.s.size(), 0);
    if (p.s.empty()) p.s.assign(p.r.size(), 0);
    if (p.r.size() != p.s.size()) throw UsageError("-r and -s need the same number of entries");
    return p;
}

ybk_kind kind_of(const std::string& name)
{
    if (name == "young") return YBK_YOUNG;
    if (name == "selberg") return YBK_SELBERG;
    throw UsageError("--kind must be young or selberg");
}

BookHandle load_book(const Options& o)
{
    const std::string& text = !o.book.empty() ? o.book : o.shape;
    if (text.empty()) throw UsageError("give the diagram with --book or --shape");
    ybk_book* b = nullptr;
    check(ybk_book_parse(text.c_str(), &b));
    return BookHandle(b);
}

std::uint64_t state_budget(const Options& o)
{
    ybk_verify_options d;
    ybk_verify_defaults(&d);
    return o.budget.value_or(d.state_budget);
}

std::size_t cell_budget(const Options& o)
{
    ybk_verify_options d;
    ybk_verify_defaults(&d);
    return static_cast<std::size_t>(o.budget.value_or(d.cell_budget));
}

bool is_natural(const std::string& value)
{
    return !value.empty() && value.find_first_not_of("0123456789") == std::string::npos;
}

struct Result {
    std::string command;
    ordered_json params = ordered_json::object();
    std::string value;
    std::optional<std::string> factorization;
    ordered_json cases = ordered_json::array();
    ordered_json extra = ordered_json::object();
    std::vector<std::string> lines;  // human output beyond the value
    int exit_code = 0;
};

void add_factorization(Result& res)
{
    if (is_natural(res.value) && res.value != "0") {
        res.factorization = call_string([&](char** out) { return ybk_factorize(res.value.c_str(), out); });
    }
}

void set_param(Result& res, const char* key, const std::optional<int>& v)
{
    if (v) res.params[key] = std::to_string(*v);
}

void set_param(Result& res, const char* key, const std::string& v)
{
    if (!v.empty()) res.params[key] = v;
}

Result run_count(const std::string& what, const Options& o)
{
    Result res;
    res.command = "count " + what;
    set_param(res, "n", o.n);
    set_param(res, "m", o.m);
    set_param(res, "k", o.k);
    set_param(res, "r", o.r);
    set_param(res, "s", o.s);
    if (what == "sp") {
        int n = need(o.n, "-n");
        int m = need(o.m, "-m");
        int r = single(o.r, "-r");
        int s = single(o.s, "-s");
        res.value = call_string([&](char** out) { return ybk_count_sp(n, r, s, m, out); });
    } else if (what == "sb") {
        int n = need(o.n, "-n");
        int m = need(o.m, "-m");
        res.value = call_string([&](char** out) { return ybk_count_sb(n, m, out); });
    } else if (what == "yb") {
        int n = need(o.n, "-n");
        int m = need(o.m, "-m");
        res.value = call_string([&](char** out) { return ybk_count_yb(n, m, out); });
    } else if (what == "yb-nrs") {
        int n = need(o.n, "-n");
        Pages p = pages(o);
        res.value = call_string(
            [&](char** out) { return ybk_count_yb_nrs(n, p.r.data(), p.s.data(), p.r.size(), out); });
    } else if (what == "yb-ars") {
        int k = need(o.k, "-k");
        int n = need(o.n, "-n");
        Pages p = pages(o);
        res.value = call_string(
            [&](char** out) { return ybk_count_yb_ars(k, n, p.r.data(), p.s.data(), p.r.size(), out); });
    } else if (what == "syt") {
        if (o.shape.empty()) throw UsageError("count syt needs --shape");
        set_param(res, "shape", o.shape);
        res.value = call_string([&](char** out) { return ybk_count_syt(o.shape.c_str(), state_budget(o), out); });
    } else if (what == "book") {
        BookHandle book = load_book(o);
        ybk_kind kind = kind_of(o.kind);
        res.params["book"] = call_string([&](char** out) { return ybk_book_describe(book.get(), out); });
        res.params["kind"] = o.kind;
        if (o.gaps.empty()) {
            res.value =
                call_string([&](char** out) { return ybk_book_count(book.get(), kind, state_budget(o), out); });
        } else {
            res.params["gaps"] = o.gaps;
            ybk_poly* raw = nullptr;
            check(ybk_book_gap_polynomial(book.get(), kind, state_budget(o), &raw));
            PolyHandle poly(raw);
            auto gaps = parse_ints(o.gaps, "--gaps");
            if (gaps.size() != ybk_poly_variables(poly.get())) {
                throw UsageError("--gaps needs " + std::to_string(ybk_poly_variables(poly.get())) + " entries");
            }
            res.value = call_string(
                [&](char** out) { return ybk_poly_coefficient(poly.get(), gaps.data(), gaps.size(), out); });
        }
    } else {
        throw UsageError("unknown count target '" + what + "'");
    }
    add_factorization(res);
    return res;
}

Result run_enumerate(const std::string& what, const Options& o)
{
    Result res;
    res.command = "enumerate " + what;
    ybk_enum* raw = nullptr;
    BookHandle book;
    if (what == "book") {
        book = load_book(o);
        res.params["book"] = call_string([&](char** out) { return ybk_book_describe(book.get(), out); });
        res.params["kind"] = o.kind;
        check(ybk_enum_fillings(book.get(), kind_of(o.kind), cell_budget(o), o.limit, &raw));
    } else if (what == "sp") {
        int n = need(o.n, "-n");
        int m = need(o.m, "-m");
        int r = single(o.r, "-r");
        int s = single(o.s, "-s");
        res.params["n"] = std::to_string(n);
        res.params["r"] = std::to_string(r);
        res.params["s"] = std::to_string(s);
        res.params["m"] = std::to_string(m);
        check(ybk_enum_permutations(n, r, s, m, cell_budget(o), o.limit, &raw));
    } else {
        throw UsageError("unknown enumerate target '" + what + "'");
    }
    if (o.limit) res.params["limit"] = std::to_string(o.limit);
    EnumHandle stream(raw);
    ordered_json items = ordered_json::array();
    std::uint64_t count = 0;
    for (;;) {
        char* text = nullptr;
        int done = 0;
        check(ybk_enum_next(stream.get(), &text, &done));
        std::string item = take(text);
        if (done) break;
        ++count;
        if (what == "book" && count > 1) res.lines.emplace_back("");
        res.lines.push_back(item);
        items.push_back(item);
    }
    res.value = std::to_string(count);
    res.extra["items"] = std::move(items);
    return res;
}

Result run_genfun(const std::string& what, const Options& o)
{
    Result res;
    res.command = "genfun " + what;
    ybk_poly* raw = nullptr;
    int n = need(o.n, "-n");
    res.params["n"] = std::to_string(n);
    if (what == "sb" || what == "yb") {
        int m = need(o.m, "-m");
        res.params["m"] = std::to_string(m);
        check(what == "sb" ? ybk_genfun_sb(n, m, &raw) : ybk_genfun_yb(n, m, &raw));
    } else if (what == "sb-nrs" || what == "yb-nrs") {
        Pages p = pages(o);
        set_param(res, "r", o.r);
        set_param(res, "s", o.s);
        if (what == "sb-nrs") {
            if (o.minus) res.params["minus"] = "true";
            check(ybk_genfun_sb_nrs(n, p.r.data(), p.s.data(), p.r.size(), o.minus ? 1 : 0, &raw));
        } else {
            if (o.minus) throw UsageError("--minus applies to sb-nrs only");
            check(ybk_genfun_yb_nrs(n, p.r.data(), p.s.data(), p.r.size(), &raw));
        }
    } else {
        throw UsageError("unknown genfun target '" + what + "'");
    }
    PolyHandle poly(raw);
    std::string text = call_string([&](char** out) { return ybk_poly_text(poly.get(), out); });
    std::string terms = call_string([&](char** out) { return ybk_poly_json(poly.get(), out); });
    res.extra["polynomial"] = text;
    res.extra["terms"] = ordered_json::parse(terms);
    res.extra["exp_moment"] = call_string([&](char** out) { return ybk_poly_exp_moment(poly.get(), out); });
    if (o.gaps.empty()) {
        res.value = text;
        res.lines.push_back("exp moment: " + res.extra["exp_moment"].get<std::string>());
    } else {
        res.params["gaps"] = o.gaps;
        auto gaps = parse_list(o.gaps, "--gaps");
        if (gaps.size() != ybk_poly_variables(poly.get())) {
            throw UsageError("--gaps needs " + std::to_string(ybk_poly_variables(poly.get())) +
                             " entries, starting at t" + std::to_string(ybk_poly_first_index(poly.get())));
        }
        res.value =
            call_string([&](char** out) { return ybk_poly_gap_count(poly.get(), gaps.data(), gaps.size(), out); });
        add_factorization(res);
    }
    return res;
}

Result run_selberg(const Options& o)
{
    Result res;
    res.command = "selberg";
    int n = need(o.n, "-n");
    std::string alpha = o.alpha.empty() ? "1" : o.alpha;
    std::string beta = o.beta.empty() ? "1" : o.beta;
    std::string gamma = o.gamma.empty() ? "0" : o.gamma;
    res.params["n"] = std::to_string(n);
    res.params["alpha"] = alpha;
    res.params["beta"] = beta;
    res.params["gamma"] = gamma;
    res.value = call_string(
        [&](char** out) { return ybk_selberg(n, alpha.c_str(), beta.c_str(), gamma.c_str(), out); });
    return res;
}

const char* status_word(ybk_case_status s)
{
    switch (s) {
    case YBK_CASE_PASS: return "pass";
    case YBK_CASE_FAIL: return "FAIL";
    case YBK_CASE_ERRATUM: return "erratum";
    }
    return "?";
}

Result run_verify(const std::string& name, const Options& o)
{
    Result res;
    res.command = "verify " + name;
    ybk_verify_options opt;
    ybk_verify_defaults(&opt);
    opt.max_n = o.max_n;
    opt.max_m = o.max_m;
    opt.max_rs = o.max_rs;
    opt.max_alphabet = o.max_alphabet;
    if (o.budget) opt.cell_budget = static_cast<std::size_t>(*o.budget);
    res.params["max_n"] = std::to_string(opt.max_n);
    res.params["max_m"] = std::to_string(opt.max_m);
    res.params["max_rs"] = std::to_string(opt.max_rs);
    res.params["cell_budget"] = std::to_string(opt.cell_budget);
    res.params["max_alphabet"] = std::to_string(opt.max_alphabet);

    ybk_report* raw = nullptr;
    check(ybk_verify(name.c_str(), &opt, &raw));
    ReportHandle report(raw);
    std::size_t size = ybk_report_size(report.get());
    for (std::size_t i = 0; i < size; ++i) {
        ybk_case_view v;
        check(ybk_report_case(report.get(), i, &v));
        ordered_json c{{"identity", v.identity}, {"check", v.check}, {"params", v.params},
                       {"lhs", v.lhs},           {"rhs", v.rhs},     {"status", status_word(v.status)}};
        if (*v.note) c["note"] = v.note;
        res.cases.push_back(c);
        std::string line = std::string(status_word(v.status)) + "\t" + v.identity + "\t" + v.check + "\t" +
                           v.params + "\t" + v.lhs + "\t" + v.rhs;
        if (*v.note) line += "\t# " + std::string(v.note);
        res.lines.push_back(line);
    }
    std::size_t failed = ybk_report_count(report.get(), YBK_CASE_FAIL);
    std::size_t errata = ybk_report_count(report.get(), YBK_CASE_ERRATUM);
    res.value = failed == 0 ? "pass" : "fail";
    res.extra["summary"] = {{"cases", std::to_string(size)},
                            {"passed", std::to_string(ybk_report_count(report.get(), YBK_CASE_PASS))},
                            {"failed", std::to_string(failed)},
                            {"erratum", std::to_string(errata)}};
    res.extra["warning"] = errata > 0;
    res.lines.push_back(std::to_string(size) + " cases, " + std::to_string(failed) + " failed, " +
                        std::to_string(errata) + " erratum findings");
    if (errata > 0) std::cerr << "warning: " << errata << " erratum findings (counted as passing)\n";
    res.exit_code = failed == 0 ? 0 : kExitChecksFailed;
    return res;
}

void emit(const Result& res, bool json)
{
    if (json) {
        ordered_json out{{"command", res.command}, {"params", res.params}, {"value", res.value}};
        out["factorization"] = res.factorization ? ordered_json(*res.factorization) : ordered_json(nullptr);
        out["cases"] = res.cases;
        for (const auto& [key, value] : res.extra.items()) out[key] = value;
        std::cout << out.dump(2) << "\n";
        return;
    }
    bool listing = res.command.rfind("enumerate", 0) == 0;
    for (const std::string& line : res.lines) {
        if (listing) std::cout << line << "\n";
    }
    std::cout << (listing ? "count: " : "value: ") << res.value << "\n";
    if (res.factorization) std::cout << "factorization: " << *res.factorization << "\n";
    if (!listing) {
        for (const std::string& line : res.lines) std::cout << line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Selberg books, Young books and Selberg permutations, counted exactly"};
    app.require_subcommand(1);
    Options o;
    std::string count_target;
    std::string enumerate_target = "book";
    std::string genfun_target;
    std::string verify_target = "all";

    auto shared = [&](CLI::App* sub) {
        sub->add_option("-n", o.n, "diagonal size");
        sub->add_option("-m", o.m, "page count");
        sub->add_option("-r", o.r, "rows above the diagonal (comma list per page)");
        sub->add_option("-s", o.s, "columns right of the diagonal (comma list per page)");
        sub->add_flag("--json", o.json, "machine-readable output");
    };

    auto* count = app.add_subcommand("count", "closed-form or down-set counts");
    shared(count);
    count->add_option("target", count_target, "sp|sb|yb|yb-nrs|yb-ars|syt|book")
        ->required()
        ->check(CLI::IsMember({"sp", "sb", "yb", "yb-nrs", "yb-ars", "syt", "book"}));
    count->add_option("-k", o.k, "block height of (k^n) staircases");
    count->add_option("--shape", o.shape, "page in the shape DSL");
    count->add_option("--book", o.book, "book in the shape DSL");
    count->add_option("--kind", o.kind, "young or selberg")->check(CLI::IsMember({"young", "selberg"}));
    count->add_option("--gaps", o.gaps, "gap vector d0,d1,... (book only)");
    count->add_option("--budget", o.budget, "down-set state budget");

    auto* enumerate = app.add_subcommand("enumerate", "list fillings of a book or Selberg permutations");
    shared(enumerate);
    enumerate->add_option("target", enumerate_target, "book|sp")->check(CLI::IsMember({"book", "sp"}));
    enumerate->add_option("--shape", o.shape, "page in the shape DSL");
    enumerate->add_option("--book", o.book, "book in the shape DSL");
    enumerate->add_option("--kind", o.kind, "young or selberg")->check(CLI::IsMember({"young", "selberg"}));
    enumerate->add_option("--budget", o.budget, "largest number of cells (or letters) to enumerate");
    enumerate->add_option("--limit", o.limit, "stop after this many items");

    auto* genfun = app.add_subcommand("genfun", "gap generating functions");
    shared(genfun);
    genfun->add_option("target", genfun_target, "sb|yb|sb-nrs|yb-nrs")
        ->required()
        ->check(CLI::IsMember({"sb", "yb", "sb-nrs", "yb-nrs"}));
    genfun->add_option("--gaps", o.gaps, "gap vector; prints the count instead of the polynomial");
    genfun->add_flag("--minus", o.minus, "leave out the corner rectangles (sb-nrs)");

    auto* selberg = app.add_subcommand("selberg", "exact Selberg integral");
    selberg->add_option("-n", o.n, "dimension")->required();
    selberg->add_option("--alpha", o.alpha, "rational, default 1");
    selberg->add_option("--beta", o.beta, "rational, default 1");
    selberg->add_option("--gamma", o.gamma, "rational, default 0");
    selberg->add_flag("--json", o.json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("target", verify_target, "all or an identity name");
    verify->add_option("--max-n", o.max_n, "largest diagonal size")->capture_default_str();
    verify->add_option("--max-m", o.max_m, "largest page count")->capture_default_str();
    verify->add_option("--max-rs", o.max_rs, "largest r and s")->capture_default_str();
    verify->add_option("--max-alphabet", o.max_alphabet, "largest Selberg alphabet")->capture_default_str();
    verify->add_option("--budget", o.budget, "cells enumerated by backtracking");
    verify->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Result res;
        if (count->parsed()) {
            res = run_count(count_target, o);
        } else if (enumerate->parsed()) {
            res = run_enumerate(enumerate_target, o);
        } else if (genfun->parsed()) {
            res = run_genfun(genfun_target, o);
        } else if (selberg->parsed()) {
            res = run_selberg(o);
        } else {
            res = run_verify(verify_target, o);
        }
        emit(res, o.json);
        return res.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const LibraryError& e) {
        std::cerr << e.what() << "\n";
        return kExitLibrary;
    }
}
