#include "youngbook/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace youngbook;

namespace {

VerifyOptions small()
{
    VerifyOptions opt;
    opt.max_n = 3;
    opt.max_m = 2;
    opt.max_rs = 1;
    opt.cell_budget = 10;
    opt.max_alphabet = 7;
    return opt;
}

bool has(const VerifyReport& report, CaseStatus status)
{
    return std::any_of(report.cases.begin(), report.cases.end(), [&](const VerifyCase& c) { return c.status == status; });
}

}  // namespace

TEST_CASE("identity names")
{
    const auto& names = identity_names();
    CHECK(names.size() == 12);
    CHECK(names.front() == "big-young-book");
    CHECK(is_identity_name("gap-refinement"));
    CHECK_FALSE(is_identity_name("all"));
    CHECK_THROWS_AS(run_verification("no-such-identity", small()), ArgumentError);
    CHECK(to_string(CaseStatus::Erratum) == "erratum");
}

TEST_CASE("every identity holds on a small grid")
{
    for (const std::string& name : identity_names()) {
        CAPTURE(name);
        VerifyReport report = run_verification(name, small());
        CHECK_FALSE(report.cases.empty());
        for (const VerifyCase& c : report.cases) {
            CAPTURE(c.check);
            CAPTURE(c.params);
            CAPTURE(c.lhs);
            CAPTURE(c.rhs);
            CHECK(c.identity == name);
            CHECK(c.status != CaseStatus::Fail);
        }
        CHECK(report.passed());
    }
}

TEST_CASE("known discrepancies are reported, never silent")
{
    VerifyReport skew = run_verification("skew-double-erratum", small());
    CHECK(has(skew, CaseStatus::Erratum));
    CHECK(has(skew, CaseStatus::Pass));
    VerifyReport notes = run_verification("erratum-notes", small());
    CHECK(notes.count(CaseStatus::Erratum) == notes.cases.size());
    for (const VerifyCase& c : notes.cases) CHECK_FALSE(c.note.empty());
}

TEST_CASE("reports are deterministic")
{
    VerifyOptions opt = small();
    opt.max_n = 2;
    VerifyReport a = run_verification("all", opt);
    VerifyReport b = run_verification("all", opt);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].check == b.cases[i].check);
        CHECK(a.cases[i].params == b.cases[i].params);
        CHECK(a.cases[i].lhs == b.cases[i].lhs);
        CHECK(a.cases[i].rhs == b.cases[i].rhs);
        CHECK(a.cases[i].status == b.cases[i].status);
    }
}

TEST_CASE("report counters")
{
    VerifyReport r;
    r.cases.push_back({"x", "c", "p", "1", "1", CaseStatus::Pass, ""});
    r.cases.push_back({"x", "c", "p", "1", "2", CaseStatus::Erratum, "n"});
    CHECK(r.passed());
    r.cases.push_back({"x", "c", "p", "1", "3", CaseStatus::Fail, ""});
    CHECK_FALSE(r.passed());
    CHECK(r.count(CaseStatus::Fail) == 1);
}
