#include "postlie/matrix_numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "postlie/factorization.hpp"

namespace postlie {

DMat DMat::identity(int n) {
    DMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DMat dmat_add(const DMat& x, const DMat& y) {
    DMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

DMat dmat_sub(const DMat& x, const DMat& y) {
    DMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

DMat dmat_scale(double c, const DMat& x) {
    DMat r = x;
    for (auto& v : r.a) v *= c;
    return r;
}

DMat dmat_mul(const DMat& x, const DMat& y) {
    DMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

double frobenius_norm(const DMat& x) {
    double s = 0.0;
    for (double v : x.a) s += v * v;
    return std::sqrt(s);
}

DMat expm(const DMat& x) {
    double norm = frobenius_norm(x);
    if (!std::isfinite(norm)) throw std::invalid_argument("expm: non-finite input");
    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }
    DMat xs = dmat_scale(std::ldexp(1.0, -squarings), x);
    DMat result = DMat::identity(x.n);
    DMat term = DMat::identity(x.n);
    for (int k = 1; k <= 40; ++k) {
        term = dmat_scale(1.0 / k, dmat_mul(term, xs));
        result = dmat_add(result, term);
        if (frobenius_norm(term) < 1e-18 * (1.0 + frobenius_norm(result))) break;
    }
    for (int s = 0; s < squarings; ++s) result = dmat_mul(result, result);
    return result;
}

namespace {

GVector dmat_to_gvector(const DMat& x) {
    GVector v(static_cast<size_t>(x.n) * x.n, Rational(0));
    for (int i = 0; i < x.n * x.n; ++i) v[i] = Rational(x.a[i]);  // doubles are exact rationals
    return v;
}

DMat gvector_to_dmat(const GVector& v, int n) {
    DMat m(n);
    for (int i = 0; i < n * n; ++i) m.a[i] = v[i].get_d();
    return m;
}

}  // namespace

namespace {

// chi_pm as per-order double matrices, computed exactly once per input.
struct ChiFactors {
    std::vector<DMat> plus, minus;  // index 1..N
};

ChiFactors compute_chi_factors(const DMat& x, int N) {
    const int n = x.n;
    LieAlgebraSpec L = LieAlgebraSpec::gl(n);
    LinearEndo R = triangular_r_gl(n);
    Uea U(L, N);
    PostLieLift lift(U, post_lie_from_r(L, R));
    RMatrixFactorization fact(lift, R);
    MagnusSeries ms = chi_series(lift, dmat_to_gvector(x), N);
    auto [plus, minus] = fact.exp_factorize(ms);
    ChiFactors cf;
    cf.plus.assign(N + 1, DMat(n));
    cf.minus.assign(N + 1, DMat(n));
    for (int m = 1; m <= N; ++m) {
        cf.plus[m] = gvector_to_dmat(plus[m], n);
        cf.minus[m] = gvector_to_dmat(minus[m], n);
    }
    return cf;
}

double error_at(const DMat& x, const ChiFactors& cf, double t, int N) {
    DMat chip(x.n), chim(x.n);
    double tp = 1.0;
    for (int m = 1; m <= N; ++m) {
        tp *= t;
        chip = dmat_add(chip, dmat_scale(tp, cf.plus[m]));
        chim = dmat_add(chim, dmat_scale(tp, cf.minus[m]));
    }
    DMat lhs = expm(dmat_scale(t, x));
    DMat rhs = dmat_mul(expm(chip), expm(dmat_scale(-1.0, chim)));
    return frobenius_norm(dmat_sub(lhs, rhs));
}

}  // namespace

double matrix_factor_error(const DMat& x, double t, int N) {
    return error_at(x, compute_chi_factors(x, N), t, N);
}

std::vector<FactorCheckRow> matrix_factor_check(const DMat& x, const std::vector<double>& ts,
                                                int N) {
    ChiFactors cf = compute_chi_factors(x, N);
    std::vector<FactorCheckRow> rows;
    for (double t : ts) {
        FactorCheckRow row;
        row.t = t;
        row.error = error_at(x, cf, t, N);
        if (t != 0.0) {
            double half = error_at(x, cf, t / 2.0, N);
            if (half > 0.0) {
                row.ratio = row.error / half;
                row.has_ratio = true;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace postlie
