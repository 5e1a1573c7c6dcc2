#pragma once

// Exponential generating functions of Selberg and Young books refined by the
// gaps between consecutive diagonal entries.

#include "youngbook/exact.hpp"
#include "youngbook/multipoly.hpp"
#include "youngbook/shapes.hpp"

#include <vector>

namespace youngbook {

/// prod_{1<=i<j<=n} (t_i + ... + t_{j-1})^m in t_1..t_{n-1}.
MultiPoly sb_genfun(int n, int m);

/// (prod_{i<j} (t_i + ... + t_{j-1}) / (j-i))^m in t_1..t_{n-1}.
MultiPoly yb_genfun(int n, int m);

/// Selberg books on (n, r_i, s_i) pages, in t_0..t_n:
/// prod_i (t_0+...+t_{i-1})^r (t_i+...+t_n)^s prod_p (t_0+...+t_n)^(r_p s_p)
/// prod_{i<j} (t_i+...+t_{j-1})^m. With `minus` the corner factor is left
/// out, giving the function of the (n, r_i, s_i)^- book.
MultiPoly sb_genfun_nrs(int n, const Composition& rvec, const Composition& svec, bool minus = false);

/// The minus function depends only on the totals r, s and the page count m;
/// this form also allows m = 0.
MultiPoly sb_genfun_minus(int n, int r, int s, int m);

/// Young books on (n, r_i, s_i) pages: sb_genfun_nrs scaled by
/// prod_p F(r_p) F(s_p) / F(n + r_p + s_p).
MultiPoly yb_genfun_nrs(int n, const Composition& rvec, const Composition& svec);

/// Coefficient of t^d times d_0! d_1! ...; throws IntegralityError when the
/// product is not an integer and ArgumentError on a dimension mismatch.
ExactInt gap_count(const MultiPoly& poly, const std::vector<long>& gaps);

/// Sum over terms of coefficient * prod (exponent_i)!, the integral of the
/// polynomial against prod e^(-t_i) over the positive orthant.
ExactRational exp_moment(const MultiPoly& poly);

}  // namespace youngbook
