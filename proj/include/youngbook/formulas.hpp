#pragma once

// Closed-form counts, exact Selberg integral values and independent
// tableau-counting oracles.

#include "youngbook/exact.hpp"
#include "youngbook/shapes.hpp"

#include <vector>

namespace youngbook {

/// Number of Selberg permutations of A(n,r,s,m).
ExactInt sp_count(int n, int r, int s, int m);

/// Selberg books of m shifted staircases of size n.
ExactInt sb_count(int n, int m);
/// Young books of m shifted staircases of size n.
ExactInt yb_count(int n, int m);

/// Young books on (n, r_i, s_i)-staircase pages, one page per entry of the
/// compositions.
ExactInt yb_count_nrs(int n, const Composition& rvec, const Composition& svec);

/// Standard tableaux of the truncated shape ((n+s)^(r+n)) \ (n-1, ..., 1).
ExactInt syt_truncated_staircase(int n, int r, int s);

/// Standard tableaux of the skew shape obtained by gluing an (n,r1,s1)- and
/// a flipped (n,r2,s2)-staircase. Computed from the general (n, r, s) Young
/// book count with two pages.
ExactInt syt_skew_double(int n, int r1, int r2, int s1, int s2);
/// The same quantity from the closed form with all double factorials of even
/// arguments, as it is commonly printed. Off by 2^n; kept for reporting.
ExactRational syt_skew_double_printed(int n, int r1, int r2, int s1, int s2);

/// Young books on ((k^n), r_i, s_i)-staircase pages.
ExactInt yb_count_ars_kn(int k, int n, const Composition& rvec, const Composition& svec);
/// Standard tableaux of the truncated shape ((kn+s)^(r+kn)) \ mu with
/// mu = ((kn)^(k-1), kn-1, (kn-k)^(k-1), kn-k-1, ..., k^(k-1), k-1).
ExactInt syt_truncated_block(int k, int n, int r, int s);

/// Parameters of the integral over [0,1]^n of
/// prod x_i^(alpha-1) (1-x_i)^(beta-1) prod_{i<j} |x_i-x_j|^(2 gamma).
struct SelbergParams {
    int n = 1;
    ExactRational alpha = 1;
    ExactRational beta = 1;
    ExactRational gamma = 0;
};

/// Closed-form Gamma product. Requires alpha, beta positive and every Gamma
/// argument a positive integer or half-integer.
PiHalfScalar selberg_exact(const SelbergParams& params);

/// n! |SP(n,r,s,m)| / ((r+s+1)n + m n(n-1)/2)!.
ExactRational selberg_combinatorial(int n, int r, int s, int m);

/// Selberg books on (n, r_i, s_i)^- pages (corner rectangles removed).
ExactInt sb_minus_count(int n, const Composition& rvec, const Composition& svec);
/// Selberg books on full (n, r_i, s_i) pages.
ExactInt sb_full_count(int n, const Composition& rvec, const Composition& svec);

/// prod_i F(n+r_i+s_i) / (F(r_i) F(s_i)).
ExactInt sb_yb_factor(int n, const Composition& rvec, const Composition& svec);
/// prod_i F(a+r_i+s_i) / (F(a_1)...F(a_n) F(r_i) F(s_i)), a = a_1+...+a_n.
ExactInt sb_yb_factor_ars(const Composition& a, const Composition& rvec, const Composition& svec);

/// Label counts of books: N and N^- for (a, rvec, svec) books.
ExactInt book_cells(const Composition& a, const Composition& rvec, const Composition& svec);
ExactInt book_minus_cells(const Composition& a, const Composition& rvec, const Composition& svec);

/// Standard tableaux of a straight shape (hook length formula).
ExactInt hook_count_straight(const Partition& lambda);
/// Standard tableaux of a shifted strict shape (shifted hook product).
ExactInt hook_count_shifted(const Partition& lambda);
/// Standard tableaux of lambda/mu: N! det[1/(lambda_i - mu_j - i + j)!].
ExactInt skew_count_determinant(const Partition& lambda, const Partition& mu);

/// Integrand prod x_i^p_i (1-x_i)^q_i prod_{i<j} |x_i-x_j|^e_ij on [0,1]^n.
/// `e` is n x n; only entries above the diagonal are read.
struct BoxIntegrand {
    int n = 1;
    std::vector<int> p;
    std::vector<int> q;
    std::vector<std::vector<int>> e;
};

inline constexpr int kDefaultBoxDegreeBudget = 48;
inline constexpr int kMaxBoxDimension = 4;

/// Exact value of the integral, summing over the n! orderings of the
/// variables. Throws BudgetError when n or the total degree is too large.
ExactRational box_integral_exact(const BoxIntegrand& integrand, int degree_budget = kDefaultBoxDegreeBudget);

/// The Selberg-type integrand for an (a, r, s, m) book: p_i = r a_i,
/// q_i = s a_i, e_ij = m a_i a_j.
BoxIntegrand ars_integrand(const Composition& a, int r, int s, int m);

}  // namespace youngbook
