#include "youngbook/formulas.hpp"

#include "youngbook/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace youngbook {

namespace {

void require_positive_n(int n)
{
    if (n < 1) throw ArgumentError("n must be at least 1, got " + std::to_string(n));
}

void require_nonnegative(int value, const char* name)
{
    if (value < 0) throw ArgumentError(std::string(name) + " must be nonnegative, got " + std::to_string(value));
}

void require_same_length(const Composition& rvec, const Composition& svec)
{
    if (rvec.length() != svec.length()) {
        throw ArgumentError("r and s compositions must have the same length (" + std::to_string(rvec.length()) +
                            " vs " + std::to_string(svec.length()) + ")");
    }
    if (rvec.length() == 0) throw ArgumentError("at least one page is required");
}

long choose2(long n) { return n * (n - 1) / 2; }

long corner_sum(const Composition& rvec, const Composition& svec)
{
    long total = 0;
    for (std::size_t i = 0; i < rvec.length(); ++i) total += static_cast<long>(rvec[i]) * svec[i];
    return total;
}

ExactRational rat(const ExactInt& num, const ExactInt& den)
{
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

// prod_{j=1}^n (jm)!! (2r+(j-1)m)!! (2s+(j-1)m)!! / (m!! (2r+2s+2+(n+j-2)m)!!)
// for integer exponent parameter m and "doubled" edge parameters 2r, 2s.
ExactRational selberg_product(long n, long two_r, long two_s, long m)
{
    ExactRational out = 1;
    for (long j = 1; j <= n; ++j) {
        ExactInt num = double_factorial(j * m) * double_factorial(two_r + (j - 1) * m) *
                       double_factorial(two_s + (j - 1) * m);
        ExactInt den = double_factorial(m) * double_factorial(two_r + two_s + 2 + (n + j - 2) * m);
        out *= rat(num, den);
    }
    return out;
}

ExactRational pow2_over_nfact(int n) { return rat(power(ExactInt(2), static_cast<unsigned long>(n)), factorial(n)); }

}  // namespace

ExactInt sp_count(int n, int r, int s, int m)
{
    require_positive_n(n);
    require_nonnegative(r, "r");
    require_nonnegative(s, "s");
    require_nonnegative(m, "m");
    ExactRational v = pow2_over_nfact(n) * factorial((r + s + 1L) * n + m * choose2(n)) *
                      selberg_product(n, 2L * r, 2L * s, m);
    return require_integral(v, "Selberg permutation count");
}

ExactInt sb_count(int n, int m)
{
    require_positive_n(n);
    require_nonnegative(m, "m");
    ExactRational v = rat(power(ExactInt(2), n) * factorial(n + m * choose2(n)),
                          factorial(n) * power(double_factorial(m), n));
    for (long j = 1; j <= n; ++j) {
        ExactInt num = power(double_factorial((j - 1) * m), 2) * double_factorial(j * m);
        v *= rat(num, double_factorial(2 + (n + j - 2) * m));
    }
    return require_integral(v, "Selberg book count");
}

ExactInt yb_count(int n, int m)
{
    require_positive_n(n);
    require_nonnegative(m, "m");
    ExactRational v = rat(power(ExactInt(2), n) * factorial(n + m * choose2(n)),
                          factorial(n) * power(double_factorial(m), n));
    for (long j = 1; j <= n; ++j) {
        ExactInt num = power(double_factorial((j - 1) * m), 2) * double_factorial(j * m);
        ExactInt den = power(factorial(j - 1), m) * double_factorial(2 + (n + j - 2) * m);
        v *= rat(num, den);
    }
    return require_integral(v, "Young book count");
}

ExactInt yb_count_nrs(int n, const Composition& rvec, const Composition& svec)
{
    require_positive_n(n);
    require_same_length(rvec, svec);
    long m = static_cast<long>(rvec.length());
    long r = rvec.total();
    long s = svec.total();
    ExactRational v = factorial((r + s + 1) * n + m * choose2(n) + corner_sum(rvec, svec));
    for (std::size_t i = 0; i < rvec.length(); ++i) {
        v *= rat(superfactorial(rvec[i]) * superfactorial(svec[i]), superfactorial(n + rvec[i] + svec[i]));
    }
    v *= pow2_over_nfact(n) * selberg_product(n, 2 * r, 2 * s, m);
    return require_integral(v, "Young book count on (n,r,s)-staircases");
}

ExactInt syt_truncated_staircase(int n, int r, int s)
{
    require_positive_n(n);
    require_nonnegative(r, "r");
    require_nonnegative(s, "s");
    ExactRational v = factorial((r + s + 1L) * n + choose2(n) + static_cast<long>(r) * s);
    v *= rat(power(ExactInt(2), n) * superfactorial(r) * superfactorial(s), factorial(n) * superfactorial(n + r + s));
    for (long j = 1; j <= n; ++j) {
        ExactInt num = double_factorial(j) * double_factorial(2L * r + j - 1) * double_factorial(2L * s + j - 1);
        v *= rat(num, double_factorial(2L * r + 2L * s + n + j));
    }
    return require_integral(v, "truncated staircase tableau count");
}

ExactInt syt_skew_double(int n, int r1, int r2, int s1, int s2)
{
    return yb_count_nrs(n, Composition({r1, r2}), Composition({s1, s2}));
}

ExactRational syt_skew_double_printed(int n, int r1, int r2, int s1, int s2)
{
    require_positive_n(n);
    for (int v : {r1, r2, s1, s2}) require_nonnegative(v, "r/s part");
    long r = r1 + r2;
    long s = s1 + s2;
    ExactRational v = factorial((r + s) * n + static_cast<long>(n) * n + static_cast<long>(r1) * s1 +
                                static_cast<long>(r2) * s2);
    v *= rat(power(ExactInt(2), n) * superfactorial(r1) * superfactorial(r2) * superfactorial(s1) * superfactorial(s2),
             factorial(n) * superfactorial(n + r1 + s1) * superfactorial(n + r2 + s2));
    for (long j = 1; j <= n; ++j) {
        ExactInt num = double_factorial(2 * j) * double_factorial(2 * r + 2 * j - 2) * double_factorial(2 * s + 2 * j - 2);
        v *= rat(num, double_factorial(2 * r + 2 * s + 2L * n + 2 * j - 2));
    }
    return v;
}

ExactInt yb_count_ars_kn(int k, int n, const Composition& rvec, const Composition& svec)
{
    if (k < 1) throw ArgumentError("k must be at least 1, got " + std::to_string(k));
    require_positive_n(n);
    require_same_length(rvec, svec);
    long m = static_cast<long>(rvec.length());
    long r = rvec.total();
    long s = svec.total();
    long kk = static_cast<long>(k) * k;
    ExactRational v = pow2_over_nfact(n) *
                      factorial((k * r + k * s + 1) * n + kk * m * choose2(n) + corner_sum(rvec, svec));
    for (std::size_t i = 0; i < rvec.length(); ++i) {
        v *= rat(power(superfactorial(k), n) * superfactorial(rvec[i]) * superfactorial(svec[i]),
                 superfactorial(static_cast<long>(k) * n + rvec[i] + svec[i]));
    }
    v *= selberg_product(n, 2 * k * r, 2 * k * s, kk * m);
    return require_integral(v, "Young book count on ((k^n),r,s)-staircases");
}

ExactInt syt_truncated_block(int k, int n, int r, int s)
{
    if (k < 1) throw ArgumentError("k must be at least 1, got " + std::to_string(k));
    require_positive_n(n);
    require_nonnegative(r, "r");
    require_nonnegative(s, "s");
    long kk = static_cast<long>(k) * k;
    ExactRational v = pow2_over_nfact(n) *
                      factorial((static_cast<long>(k) * r + static_cast<long>(k) * s + 1) * n + kk * choose2(n) +
                                static_cast<long>(r) * s);
    v *= rat(power(superfactorial(k), n) * superfactorial(r) * superfactorial(s),
             superfactorial(static_cast<long>(k) * n + r + s));
    v *= selberg_product(n, 2L * k * r, 2L * k * s, kk);
    return require_integral(v, "truncated shape tableau count");
}

PiHalfScalar selberg_exact(const SelbergParams& raw)
{
    SelbergParams params = raw;
    params.alpha.canonicalize();
    params.beta.canonicalize();
    params.gamma.canonicalize();
    require_positive_n(params.n);
    auto half_or_integer = [](const ExactRational& q, const char* name) {
        if (q.get_den() != 1 && q.get_den() != 2) {
            throw ArgumentError(std::string(name) + " must be an integer or half-integer, got " + to_string(q));
        }
    };
    half_or_integer(params.alpha, "alpha");
    half_or_integer(params.beta, "beta");
    half_or_integer(params.gamma, "gamma");
    if (params.alpha <= 0 || params.beta <= 0) throw ArgumentError("alpha and beta must be positive");
    // convergence: gamma > -min(1/n, alpha/(n-1), beta/(n-1))
    ExactRational bound(1, params.n);
    if (params.n > 1) {
        bound = std::min({bound, ExactRational(params.alpha / (params.n - 1)), ExactRational(params.beta / (params.n - 1))});
    }
    if (params.gamma <= -bound) throw ArgumentError("gamma is below the convergence bound " + to_string(ExactRational(-bound)));

    ExactRational a = params.alpha;
    ExactRational b = params.beta;
    ExactRational g = params.gamma;
    a.canonicalize();
    b.canonicalize();
    g.canonicalize();
    PiHalfScalar out;
    for (int j = 1; j <= params.n; ++j) {
        out *= gamma_half_integer(a + (j - 1) * g);
        out *= gamma_half_integer(b + (j - 1) * g);
        out *= gamma_half_integer(1 + j * g);
        out /= gamma_half_integer(a + b + (params.n + j - 2) * g);
        out /= gamma_half_integer(1 + g);
    }
    return out;
}

ExactRational selberg_combinatorial(int n, int r, int s, int m)
{
    ExactInt sp = sp_count(n, r, s, m);
    return rat(factorial(n) * sp, factorial((r + s + 1L) * n + m * choose2(n)));
}

ExactInt sb_minus_count(int n, const Composition& rvec, const Composition& svec)
{
    require_same_length(rvec, svec);
    return sp_count(n, rvec.total(), svec.total(), static_cast<int>(rvec.length()));
}

ExactInt sb_full_count(int n, const Composition& rvec, const Composition& svec)
{
    ExactInt minus = sb_minus_count(n, rvec, svec);
    long m = static_cast<long>(rvec.length());
    long minus_cells = (rvec.total() + svec.total() + 1L) * n + m * choose2(n);
    long cells = minus_cells + corner_sum(rvec, svec);
    return require_integral(rat(minus * factorial(cells), factorial(minus_cells)), "Selberg book count");
}

ExactInt sb_yb_factor(int n, const Composition& rvec, const Composition& svec)
{
    require_positive_n(n);
    require_same_length(rvec, svec);
    ExactRational v = 1;
    for (std::size_t i = 0; i < rvec.length(); ++i) {
        v *= rat(superfactorial(n + rvec[i] + svec[i]), superfactorial(rvec[i]) * superfactorial(svec[i]));
    }
    return require_integral(v, "Selberg/Young factor");
}

ExactInt sb_yb_factor_ars(const Composition& a, const Composition& rvec, const Composition& svec)
{
    if (a.length() == 0) throw ArgumentError("a must have at least one part");
    for (int part : a.parts()) {
        if (part < 1) throw ArgumentError("parts of a must be positive");
    }
    require_same_length(rvec, svec);
    ExactInt diag = 1;
    for (int part : a.parts()) diag *= superfactorial(part);
    ExactRational v = 1;
    for (std::size_t i = 0; i < rvec.length(); ++i) {
        v *= rat(superfactorial(static_cast<long>(a.total()) + rvec[i] + svec[i]),
                 diag * superfactorial(rvec[i]) * superfactorial(svec[i]));
    }
    return require_integral(v, "Selberg/Young factor");
}

ExactInt book_minus_cells(const Composition& a, const Composition& rvec, const Composition& svec)
{
    require_same_length(rvec, svec);
    long pairs = 0;
    for (std::size_t i = 0; i < a.length(); ++i) {
        for (std::size_t j = i + 1; j < a.length(); ++j) pairs += static_cast<long>(a[i]) * a[j];
    }
    long m = static_cast<long>(rvec.length());
    return ExactInt(static_cast<long>(a.length()) + static_cast<long>(a.total()) * (rvec.total() + svec.total()) +
                    m * pairs);
}

ExactInt book_cells(const Composition& a, const Composition& rvec, const Composition& svec)
{
    return book_minus_cells(a, rvec, svec) + corner_sum(rvec, svec);
}

ExactInt hook_count_straight(const Partition& lambda)
{
    const auto& parts = lambda.parts();
    ExactInt hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 1; j <= parts[i]; ++j) {
            long below = 0;
            for (std::size_t k = i + 1; k < parts.size() && parts[k] >= j; ++k) ++below;
            hooks *= parts[i] - j + below + 1;
        }
    }
    return require_integral(rat(factorial(lambda.size()), hooks), "hook length count");
}

ExactInt hook_count_shifted(const Partition& lambda)
{
    if (!lambda.is_strict()) throw ShapeError("shifted shapes need a strict partition");
    const auto& parts = lambda.parts();
    ExactRational v = factorial(lambda.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        v /= factorial(parts[i]);
        for (std::size_t j = i + 1; j < parts.size(); ++j) v *= rat(parts[i] - parts[j], parts[i] + parts[j]);
    }
    v.canonicalize();
    return require_integral(v, "shifted hook count");
}

ExactInt skew_count_determinant(const Partition& lambda, const Partition& mu)
{
    if (mu.length() > lambda.length()) throw ShapeError("mu is not contained in lambda");
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (mu[i] > lambda[i]) throw ShapeError("mu is not contained in lambda");
    }
    std::size_t l = lambda.length();
    if (l == 0) return 1;
    std::vector<std::vector<ExactRational>> a(l, std::vector<ExactRational>(l));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            long arg = static_cast<long>(lambda[i]) - mu[j] - static_cast<long>(i) + static_cast<long>(j);
            a[i][j] = arg < 0 ? ExactRational(0) : rat(1, factorial(arg));
        }
    }
    ExactRational det = 1;
    for (std::size_t col = 0; col < l; ++col) {
        std::size_t pivot = col;
        while (pivot < l && a[pivot][col] == 0) ++pivot;
        if (pivot == l) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < l; ++row) {
            if (a[row][col] == 0) continue;
            ExactRational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < l; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return require_integral(det * factorial(lambda.size() - mu.size()), "skew determinant count");
}

ExactRational box_integral_exact(const BoxIntegrand& in, int degree_budget)
{
    int n = in.n;
    require_positive_n(n);
    if (n > kMaxBoxDimension) {
        throw BudgetError("box integral supports at most " + std::to_string(kMaxBoxDimension) + " variables");
    }
    auto un = static_cast<std::size_t>(n);
    if (in.p.size() != un || in.q.size() != un || in.e.size() != un) {
        throw ArgumentError("box integrand exponent lists must have n entries");
    }
    long degree = 0;
    for (std::size_t i = 0; i < un; ++i) {
        if (in.e[i].size() != un) throw ArgumentError("box integrand pair exponents must be n x n");
        if (in.p[i] < 0 || in.q[i] < 0) throw ArgumentError("box integrand exponents must be nonnegative");
        degree += in.p[i] + in.q[i];
        for (std::size_t j = i + 1; j < un; ++j) {
            if (in.e[i][j] < 0) throw ArgumentError("box integrand exponents must be nonnegative");
            degree += in.e[i][j];
        }
    }
    if (degree > degree_budget) {
        throw BudgetError("box integrand degree " + std::to_string(degree) + " exceeds budget " +
                          std::to_string(degree_budget));
    }

    auto y = [&](std::size_t k) {
        Exponents e(un, 0);
        e[k] = 1;
        return MultiPoly::monomial(0, e);
    };
    MultiPoly one = MultiPoly::constant(un, 0, 1);

    // order[k] is the variable at position k of 0 < y_0 < ... < y_{n-1} < 1
    std::vector<std::size_t> order(un);
    std::iota(order.begin(), order.end(), 0);
    ExactRational total = 0;
    do {
        std::vector<std::size_t> pos(un);
        for (std::size_t k = 0; k < un; ++k) pos[order[k]] = k;
        MultiPoly f = one;
        for (std::size_t i = 0; i < un; ++i) {
            f *= y(pos[i]).pow(static_cast<unsigned>(in.p[i]));
            f *= (one - y(pos[i])).pow(static_cast<unsigned>(in.q[i]));
            for (std::size_t j = i + 1; j < un; ++j) {
                std::size_t hi = std::max(pos[i], pos[j]);
                std::size_t lo = std::min(pos[i], pos[j]);
                f *= (y(hi) - y(lo)).pow(static_cast<unsigned>(in.e[i][j]));
            }
        }
        for (const auto& [e, c] : f.terms()) {
            ExactInt den = 1;
            long partial = 0;
            for (std::size_t k = 0; k < un; ++k) {
                partial += e[k];
                den *= partial + static_cast<long>(k) + 1;
            }
            total += c / ExactRational(den);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    total.canonicalize();
    return total;
}

BoxIntegrand ars_integrand(const Composition& a, int r, int s, int m)
{
    require_nonnegative(r, "r");
    require_nonnegative(s, "s");
    require_nonnegative(m, "m");
    BoxIntegrand out;
    out.n = static_cast<int>(a.length());
    require_positive_n(out.n);
    out.e.assign(a.length(), std::vector<int>(a.length(), 0));
    for (std::size_t i = 0; i < a.length(); ++i) {
        out.p.push_back(r * a[i]);
        out.q.push_back(s * a[i]);
        for (std::size_t j = i + 1; j < a.length(); ++j) out.e[i][j] = m * a[i] * a[j];
    }
    return out;
}

}  // namespace youngbook
