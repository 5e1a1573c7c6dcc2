#include "youngbook/genfun.hpp"

namespace youngbook {

namespace {

void check_n(int n)
{
    if (n < 1) throw ArgumentError("n must be at least 1, got " + std::to_string(n));
}

void check_m(int m)
{
    if (m < 0) throw ArgumentError("m must be nonnegative, got " + std::to_string(m));
}

// prod_{i<j} (t_i + ... + t_{j-1}) over variables t_offset.. (position of
// t_i is i - first).
MultiPoly interval_product(int n, std::size_t vars, int first)
{
    MultiPoly out = MultiPoly::constant(vars, first, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out *= MultiPoly::variable_sum(vars, first, static_cast<std::size_t>(i - first),
                                           static_cast<std::size_t>(j - first));
        }
    }
    return out;
}

}  // namespace

MultiPoly sb_genfun(int n, int m)
{
    check_n(n);
    check_m(m);
    return interval_product(n, static_cast<std::size_t>(n - 1), 1).pow(static_cast<unsigned>(m));
}

MultiPoly yb_genfun(int n, int m)
{
    check_n(n);
    check_m(m);
    auto vars = static_cast<std::size_t>(n - 1);
    MultiPoly base = MultiPoly::constant(vars, 1, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            base *= MultiPoly::variable_sum(vars, 1, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) *
                    ExactRational(1, j - i);
        }
    }
    return base.pow(static_cast<unsigned>(m));
}

MultiPoly sb_genfun_minus(int n, int r, int s, int m)
{
    check_n(n);
    check_m(m);
    if (r < 0 || s < 0) throw ArgumentError("r and s must be nonnegative");
    auto vars = static_cast<std::size_t>(n + 1);
    auto un = static_cast<std::size_t>(n);
    MultiPoly out = MultiPoly::constant(vars, 0, 1);
    for (std::size_t i = 1; i <= un; ++i) {
        out *= MultiPoly::variable_sum(vars, 0, 0, i).pow(static_cast<unsigned>(r));
        out *= MultiPoly::variable_sum(vars, 0, i, un + 1).pow(static_cast<unsigned>(s));
    }
    out *= interval_product(n, vars, 0).pow(static_cast<unsigned>(m));
    return out;
}

MultiPoly sb_genfun_nrs(int n, const Composition& rvec, const Composition& svec, bool minus)
{
    if (rvec.length() != svec.length() || rvec.length() == 0) {
        throw ArgumentError("r and s compositions must have the same positive length");
    }
    MultiPoly out = sb_genfun_minus(n, rvec.total(), svec.total(), static_cast<int>(rvec.length()));
    if (!minus) {
        unsigned corner = 0;
        for (std::size_t p = 0; p < rvec.length(); ++p) corner += static_cast<unsigned>(rvec[p] * svec[p]);
        auto vars = static_cast<std::size_t>(n + 1);
        out *= MultiPoly::variable_sum(vars, 0, 0, vars).pow(corner);
    }
    return out;
}

MultiPoly yb_genfun_nrs(int n, const Composition& rvec, const Composition& svec)
{
    MultiPoly out = sb_genfun_nrs(n, rvec, svec, false);
    ExactRational scale = 1;
    for (std::size_t p = 0; p < rvec.length(); ++p) {
        scale *= ExactRational(superfactorial(rvec[p]) * superfactorial(svec[p]));
        scale /= ExactRational(superfactorial(n + rvec[p] + svec[p]));
    }
    return out * scale;
}

ExactInt gap_count(const MultiPoly& poly, const std::vector<long>& gaps)
{
    if (gaps.size() != poly.variable_count()) {
        throw ArgumentError("gap vector has " + std::to_string(gaps.size()) + " entries, the generating function has " +
                            std::to_string(poly.variable_count()) + " variables");
    }
    Exponents e;
    ExactInt weight = 1;
    for (long d : gaps) {
        if (d < 0) throw ArgumentError("gaps must be nonnegative");
        e.push_back(static_cast<int>(d));
        weight *= factorial(d);
    }
    return require_integral(poly.coefficient(e) * weight, "gap-refined count");
}

ExactRational exp_moment(const MultiPoly& poly)
{
    ExactRational total = 0;
    for (const auto& [e, c] : poly.terms()) {
        ExactInt weight = 1;
        for (int d : e) weight *= factorial(d);
        total += c * weight;
    }
    return total;
}

}  // namespace youngbook
