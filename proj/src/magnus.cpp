#include "postlie/magnus.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace postlie {

UeaSeries series_add(const UeaSeries& a, const UeaSeries& b) {
    UeaSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n)
        r.c[n] = n <= b.order() ? uea_add(a.c[n], b.c[n]) : a.c[n];
    return r;
}

UeaSeries series_sub(const UeaSeries& a, const UeaSeries& b) {
    UeaSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n)
        r.c[n] = n <= b.order() ? uea_sub(a.c[n], b.c[n]) : a.c[n];
    return r;
}

UeaSeries series_scale(const Rational& s, const UeaSeries& a) {
    UeaSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.c[n] = uea_scale(s, a.c[n]);
    return r;
}

UeaSeries series_mul(const Uea& U, const UeaSeries& a, const UeaSeries& b) {
    UeaSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = uea_add(r.c[i + j], U.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

UeaSeries series_star(const PostLieLift& lift, const UeaSeries& a, const UeaSeries& b) {
    UeaSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = uea_add(r.c[i + j], lift.star(a.c[i], b.c[j]));
        }
    }
    return r;
}

UeaSeries series_triangle(const PostLieLift& lift, const UeaSeries& a, const UeaSeries& b) {
    UeaSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = uea_add(r.c[i + j], lift.triangle(a.c[i], b.c[j]));
        }
    }
    return r;
}

namespace {

template <typename Mul>
UeaSeries series_exp_impl(const Uea& U, const UeaSeries& a, Mul&& mul) {
    if (!a.c[0].is_zero()) throw std::invalid_argument("series exp: nonzero constant term");
    const int N = a.order();
    UeaSeries result(N);
    result.c[0] = U.one();
    UeaSeries power(N);
    power.c[0] = U.one();
    for (int k = 1; k <= N; ++k) {
        power = mul(power, a);
        bool all_zero = true;
        for (const auto& e : power.c)
            if (!e.is_zero()) all_zero = false;
        if (all_zero) break;
        result = series_add(result, series_scale(Rational(1) / factorial(k), power));
    }
    return result;
}

}  // namespace

UeaSeries series_exp(const Uea& U, const UeaSeries& a) {
    return series_exp_impl(U, a, [&](const UeaSeries& p, const UeaSeries& q) {
        return series_mul(U, p, q);
    });
}

UeaSeries series_exp_star(const PostLieLift& lift, const UeaSeries& a) {
    return series_exp_impl(lift.uea(), a, [&](const UeaSeries& p, const UeaSeries& q) {
        return series_star(lift, p, q);
    });
}

UeaSeries series_derivative(const UeaSeries& a) {
    UeaSeries r(a.order());
    for (int n = 0; n < a.order(); ++n) r.c[n] = uea_scale(Rational(n + 1), a.c[n + 1]);
    return r;
}

bool series_equal(const UeaSeries& a, const UeaSeries& b, int up_to_order) {
    for (int n = 0; n <= up_to_order; ++n) {
        const UEAElement za{}, *pa = &za, *pb = &za;
        if (n <= a.order()) pa = &a.c[n];
        if (n <= b.order()) pb = &b.c[n];
        if (!(*pa == *pb)) return false;
    }
    return true;
}

UeaSeries MagnusSeries::as_series(const Uea& U) const {
    UeaSeries s(order());
    for (int n = 1; n <= order(); ++n) s.c[n] = U.from_gvector(chi[n]);
    return s;
}

GVector MagnusSeries::truncated_sum() const {
    GVector acc = gvec_zero(static_cast<int>(x.size()));
    for (int n = 1; n <= order(); ++n) acc = gvec_add(acc, chi[n]);
    return acc;
}

namespace {

// Ordered compositions of n into k positive parts, invoking f per tuple.
void for_each_composition(int n, int k, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& f) {
    if (k == 1) {
        parts.push_back(n);
        f(parts);
        parts.pop_back();
        return;
    }
    for (int first = 1; first <= n - (k - 1); ++first) {
        parts.push_back(first);
        for_each_composition(n - first, k - 1, parts, f);
        parts.pop_back();
    }
}

// sum over k in [kmin, n] of 1/k! sum over compositions of chi_{p1}*...*chi_{pk}
UEAElement composition_tail(const PostLieLift& lift, const std::vector<UEAElement>& chi_elems,
                            int n, int kmin, int kmax) {
    UEAElement acc = lift.uea().zero();
    for (int k = kmin; k <= kmax; ++k) {
        UEAElement inner = lift.uea().zero();
        std::vector<int> parts;
        for_each_composition(n, k, parts, [&](const std::vector<int>& p) {
            UEAElement term = chi_elems[p.back()];
            for (int idx = static_cast<int>(p.size()) - 2; idx >= 0; --idx)
                term = lift.star(chi_elems[p[idx]], term);
            inner = uea_add(inner, term);
        });
        acc = uea_add(acc, uea_scale(Rational(1) / factorial(k), inner));
    }
    return acc;
}

MagnusSeries chi_common(const PostLieLift& lift, const GVector& x, int N, bool via_partitions) {
    const Uea& U = lift.uea();
    if (N < 1) throw std::invalid_argument("chi: order must be >= 1");
    if (N > U.trunc()) throw std::invalid_argument("chi: order exceeds truncation degree");
    MagnusSeries ms;
    ms.x = x;
    ms.chi.assign(N + 1, gvec_zero(U.algebra().dim()));
    ms.chi[1] = x;
    std::vector<UEAElement> chi_elems(N + 1);
    chi_elems[1] = U.from_gvector(x);
    UEAElement xe = U.from_gvector(x);
    UEAElement xpow = U.one();
    for (int n = 1; n <= N; ++n) {
        xpow = U.mul(xpow, xe);
        if (n == 1) continue;
        UEAElement value;
        if (via_partitions) {
            // -(1/n!) sum_{minimal < pi} X_pi - compositions with k in 2..n-1
            UEAElement psum = U.zero();
            for (const auto& pi : enumerate_partitions(n)) {
                if (static_cast<int>(pi.blocks.size()) == n) continue;
                psum = uea_add(psum, x_pi(lift, pi, BarWord(n, x)));
            }
            value = uea_scale(Rational(-1) / factorial(n), psum);
            value = uea_sub(value, composition_tail(lift, chi_elems, n, 2, n - 1));
        } else {
            // x^n/n! - compositions with k in 2..n
            value = uea_scale(Rational(1) / factorial(n), xpow);
            value = uea_sub(value, composition_tail(lift, chi_elems, n, 2, n));
        }
        GVector coords;
        try {
            coords = U.to_gvector(value);
        } catch (const std::invalid_argument&) {
            std::ostringstream os;
            os << "chi_" << n << " failed to reduce to a Lie-algebra element: "
               << U.to_string(value);
            throw std::logic_error(os.str());
        }
        ms.chi[n] = coords;
        chi_elems[n] = U.from_gvector(coords);
    }
    return ms;
}

}  // namespace

MagnusSeries chi_series(const PostLieLift& lift, const GVector& x, int N) {
    return chi_common(lift, x, N, false);
}

MagnusSeries chi_via_partitions(const PostLieLift& lift, const GVector& x, int N) {
    if (N > 8) throw std::invalid_argument("chi_via_partitions: order must be <= 8");
    return chi_common(lift, x, N, true);
}

namespace {

UeaSeries ad_star(const PostLieLift& lift, const UeaSeries& a, const UeaSeries& b) {
    return series_sub(series_star(lift, a, b), series_star(lift, b, a));
}

UeaSeries dexp_weighted(const PostLieLift& lift, const UeaSeries& beta, const UeaSeries& y,
                        const std::function<Rational(int)>& weight) {
    if (!beta.c[0].is_zero())
        throw std::invalid_argument("dexp: beta must have no order-0 term");
    const int N = beta.order();
    UeaSeries result(N);
    UeaSeries adpow = y;
    result = series_add(result, series_scale(weight(0), adpow));
    // beta has no constant term, so ad^n raises the minimal order to >= n.
    for (int n = 1; n <= N; ++n) {
        adpow = ad_star(lift, beta, adpow);
        result = series_add(result, series_scale(weight(n), adpow));
    }
    return result;
}

}  // namespace

UeaSeries dexp_star(const PostLieLift& lift, const UeaSeries& beta, const UEAElement& y) {
    UeaSeries ys(beta.order());
    ys.c[0] = y;
    return dexp_weighted(lift, beta, ys,
                         [](int n) -> Rational { return Rational(1) / factorial(n + 1); });
}

UeaSeries dexpinv_star(const PostLieLift& lift, const UeaSeries& beta, const UEAElement& y) {
    UeaSeries ys(beta.order());
    ys.c[0] = y;
    return dexpinv_star_series(lift, beta, ys);
}

UeaSeries dexpinv_star_series(const PostLieLift& lift, const UeaSeries& beta, const UeaSeries& y) {
    auto bern = bernoulli_numbers(beta.order());
    return dexp_weighted(lift, beta, y,
                         [bern](int n) -> Rational { return bern[n] / factorial(n); });
}

UeaSeries ode_residual(const PostLieLift& lift, const MagnusSeries& ms) {
    const Uea& U = lift.uea();
    const int N = ms.order();
    UeaSeries chi = ms.as_series(U);
    UeaSeries minus_chi = series_scale(Rational(-1), chi);
    UeaSeries expstar = series_exp_star(lift, minus_chi);
    UeaSeries xs(N);
    xs.c[0] = U.from_gvector(ms.x);
    UeaSeries rhs = dexpinv_star_series(lift, minus_chi, series_triangle(lift, expstar, xs));
    UeaSeries residual = series_sub(series_derivative(chi), rhs);
    for (int n = N; n <= residual.order(); ++n) residual.c[n] = UEAElement{};
    return residual;
}

Report check_exp_identity(const PostLieLift& lift, const MagnusSeries& ms) {
    const Uea& U = lift.uea();
    const int N = ms.order();
    Report rep;
    UeaSeries xs(N);
    xs.c[1] = U.from_gvector(ms.x);
    UeaSeries lhs = series_exp(U, xs);
    UeaSeries rhs = series_exp_star(lift, ms.as_series(U));
    for (int n = 0; n <= N; ++n) {
        if (!(lhs.c[n] == rhs.c[n])) {
            std::ostringstream os;
            os << "exp(x) != exp*(chi(x)) at order " << n;
            rep.fail(os.str());
        }
    }
    return rep;
}

GLieSeries glie_bracket(const LieAlgebraSpec& L, const GLieSeries& a, const GLieSeries& b) {
    const int N = static_cast<int>(a.size()) - 1;
    GLieSeries r(N + 1, gvec_zero(L.dim()));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; i + j <= N; ++j)
            r[i + j] = gvec_add(r[i + j], L.bracket(a[i], b[j]));
    return r;
}

namespace {

GLieSeries glie_add(const GLieSeries& a, const GLieSeries& b) {
    GLieSeries r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = gvec_add(r[i], b[i]);
    return r;
}

GLieSeries glie_scale(const Rational& c, const GLieSeries& a) {
    GLieSeries r = a;
    for (auto& v : r) v = gvec_scale(c, v);
    return r;
}

}  // namespace

GLieSeries bch_bar(const LieAlgebraSpec& L, const GLieSeries& a, const GLieSeries& b) {
    GLieSeries ab = glie_bracket(L, a, b);                     // [a,b]
    GLieSeries aab = glie_bracket(L, a, ab);                   // [a,[a,b]]
    GLieSeries bba = glie_bracket(L, b, glie_bracket(L, b, a));  // [b,[b,a]]
    GLieSeries baab = glie_bracket(L, b, aab);                 // [b,[a,[a,b]]]
    GLieSeries r = glie_scale(Rational(1, 2), ab);
    r = glie_add(r, glie_scale(Rational(1, 12), aab));
    r = glie_add(r, glie_scale(Rational(1, 12), bba));
    r = glie_add(r, glie_scale(Rational(-1, 24), baab));
    return r;
}

MagnusSeries bch_recursion(const LieAlgebraSpec& L, const LinearEndo& R, const GVector& x, int N) {
    if (N < 1 || N > 4)
        throw std::invalid_argument("bch_recursion: closed BCH coefficients cover orders 1..4");
    auto [rp, rm] = r_plus_minus(R);
    GLieSeries chi(N + 1, gvec_zero(L.dim()));
    chi[1] = x;
    GLieSeries xs(N + 1, gvec_zero(L.dim()));
    xs[1] = x;
    // x = BCH(chi_+, -chi_-) pulls back to chi = x - BCHbar(R_+ chi, -R_- chi).
    // Order n stabilizes after n iterations of the graded fixed point.
    for (int iter = 0; iter < N; ++iter) {
        GLieSeries a(N + 1, gvec_zero(L.dim()));
        GLieSeries b(N + 1, gvec_zero(L.dim()));
        for (int n = 1; n <= N; ++n) {
            a[n] = rp.apply(chi[n]);
            b[n] = gvec_scale(Rational(-1), rm.apply(chi[n]));
        }
        chi = glie_add(xs, glie_scale(Rational(-1), bch_bar(L, a, b)));
    }
    MagnusSeries ms;
    ms.x = x;
    ms.chi.assign(N + 1, gvec_zero(L.dim()));
    for (int n = 1; n <= N; ++n) ms.chi[n] = chi[n];
    return ms;
}

Report check_chi_r_matrix_forms(const LieAlgebraSpec& L, const LinearEndo& R,
                                const MagnusSeries& ms) {
    Report rep;
    auto [rp, rm] = r_plus_minus(R);
    (void)rp;
    const GVector& x = ms.x;
    GVector rmx_x = L.bracket(rm.apply(x), x);  // [R_- x, x]
    if (ms.order() >= 2) {
        GVector chi2 = gvec_scale(Rational(-1, 2), rmx_x);
        if (ms.chi[2] != chi2) rep.fail("chi_2 != -[R_- x, x]/2");
    }
    if (ms.order() >= 3) {
        GVector chi3 = gvec_scale(Rational(1, 4), L.bracket(rm.apply(rmx_x), x));
        chi3 = gvec_add(chi3, gvec_scale(Rational(1, 12), L.bracket(rmx_x, x)));
        chi3 = gvec_add(chi3, gvec_scale(Rational(1, 12), L.bracket(rm.apply(x), rmx_x)));
        if (ms.chi[3] != chi3) rep.fail("chi_3 does not match its r-matrix closed form");
    }
    return rep;
}

}  // namespace postlie
