#pragma once

#include <vector>

#include "postlie/lift.hpp"
#include "postlie/partitions.hpp"

namespace postlie {

/// Formal polynomial in a grading parameter t with enveloping-algebra
/// coefficients; index = power of t. Orders beyond size() are discarded.
struct UeaSeries {
    std::vector<UEAElement> c;

    explicit UeaSeries(int order) : c(order + 1) {}
    int order() const { return static_cast<int>(c.size()) - 1; }
};

UeaSeries series_add(const UeaSeries& a, const UeaSeries& b);
UeaSeries series_sub(const UeaSeries& a, const UeaSeries& b);
UeaSeries series_scale(const Rational& s, const UeaSeries& a);
UeaSeries series_mul(const Uea& U, const UeaSeries& a, const UeaSeries& b);
UeaSeries series_star(const PostLieLift& lift, const UeaSeries& a, const UeaSeries& b);
UeaSeries series_triangle(const PostLieLift& lift, const UeaSeries& a, const UeaSeries& b);
/// exp of a series with zero constant term, in the ordinary product.
UeaSeries series_exp(const Uea& U, const UeaSeries& a);
/// exp of a series with zero constant term, in the star product.
UeaSeries series_exp_star(const PostLieLift& lift, const UeaSeries& a);
/// d/dt.
UeaSeries series_derivative(const UeaSeries& a);
bool series_equal(const UeaSeries& a, const UeaSeries& b, int up_to_order);

/// Order-by-order coefficients of the post-Lie Magnus expansion:
/// chi(xt) = xt + sum_{n>=2} chi_n(x) t^n, each chi_n a Lie-algebra element.
struct MagnusSeries {
    GVector x;
    std::vector<GVector> chi;  // chi[n] for n = 1..N; chi[0] is zero

    int order() const { return static_cast<int>(chi.size()) - 1; }
    /// chi as a t-series of degree-1 enveloping-algebra elements.
    UeaSeries as_series(const Uea& U) const;
    /// sum of all orders (the truncated chi(x) itself).
    GVector truncated_sum() const;
};

/// chi_n(x) = x^n/n! - sum_{k=2}^{n} 1/k! sum_{p_1+...+p_k=n, p_i>0}
///            chi_{p_1} * ... * chi_{p_k}   (ordered compositions).
/// Throws if some chi_n fails to reduce to degree 1; the theory guarantees
/// primitivity, so that signals an implementation bug.
MagnusSeries chi_series(const PostLieLift& lift, const GVector& x, int N);

/// Same series through the partition sum
/// chi_n(x) = -(1/n!) sum_{minimal < pi in P_n} X_pi - (composition tail).
MagnusSeries chi_via_partitions(const PostLieLift& lift, const GVector& x, int N);

/// dexp*_beta(y) = sum_n 1/(n+1)! ad*^n_beta(y) and its inverse with
/// Bernoulli weights (b_1 = -1/2 convention); ad*_a(b) = a*b - b*a.
UeaSeries dexp_star(const PostLieLift& lift, const UeaSeries& beta, const UEAElement& y);
UeaSeries dexpinv_star(const PostLieLift& lift, const UeaSeries& beta, const UEAElement& y);
/// dexpinv applied termwise to a series argument.
UeaSeries dexpinv_star_series(const PostLieLift& lift, const UeaSeries& beta, const UeaSeries& y);

/// Residual of  chi'(xt) = dexp*^{-1}_{-chi}( exp*(-chi) |> x ),
/// meaningful through order N-1.
UeaSeries ode_residual(const PostLieLift& lift, const MagnusSeries& ms);

/// Termwise check of exp(xt) = exp*(chi(xt)) through order N.
Report check_exp_identity(const PostLieLift& lift, const MagnusSeries& ms);

/// Graded Lie-algebra-valued series, index = order in x; entry 0 unused.
using GLieSeries = std::vector<GVector>;

GLieSeries glie_bracket(const LieAlgebraSpec& L, const GLieSeries& a, const GLieSeries& b);

/// BCH(a,b) - a - b with the closed coefficients through bracket depth 4:
/// [a,b]/2 + [a,[a,b]]/12 + [b,[b,a]]/12 - [b,[a,[a,b]]]/24.
/// Valid through total order 4.
GLieSeries bch_bar(const LieAlgebraSpec& L, const GLieSeries& a, const GLieSeries& b);

/// Graded fixed point of chi(x) = x + BCHbar(-R_-(chi(x)), x); N <= 4.
MagnusSeries bch_recursion(const LieAlgebraSpec& L, const LinearEndo& R, const GVector& x, int N);

/// chi_2 = -[R_- x, x]/2 and
/// chi_3 = [R_-[R_- x, x], x]/4 + ([[R_- x, x], x] + [R_- x, [R_- x, x]])/12
/// against a MagnusSeries.
Report check_chi_r_matrix_forms(const LieAlgebraSpec& L, const LinearEndo& R, const MagnusSeries& ms);

}  // namespace postlie
