#pragma once

#include <vector>

#include "postlie/magnus.hpp"

namespace postlie {

/// Dense square double matrix, row-major. Float mode lives only here.
struct DMat {
    int n = 0;
    std::vector<double> a;

    explicit DMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}
    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }

    static DMat identity(int n);
};

DMat dmat_add(const DMat& x, const DMat& y);
DMat dmat_sub(const DMat& x, const DMat& y);
DMat dmat_scale(double c, const DMat& x);
DMat dmat_mul(const DMat& x, const DMat& y);
double frobenius_norm(const DMat& x);

/// Matrix exponential by scaling and squaring with a truncated Taylor
/// kernel; the Taylor tail is driven below 1e-12 relative to the scaled
/// norm. Intended for desk-scale matrices (n <= 6).
DMat expm(const DMat& x);

struct FactorCheckRow {
    double t = 0.0;
    double error = 0.0;
    /// error(t) / error(t/2); expected near 2^{N+1} for chi truncated at N.
    double ratio = 0.0;
    bool has_ratio = false;
};

/// Numeric shadow of the group factorization on gl(n) with the triangular
/// splitting r-matrix: compares exp(tx) against
/// exp(sum t^m chi_+m) exp(-sum t^m chi_-m) with chi truncated at order N.
/// chi itself is computed exactly (double entries are exact rationals) and
/// only the final evaluation is floating point.
std::vector<FactorCheckRow> matrix_factor_check(const DMat& x, const std::vector<double>& ts,
                                                int N);

/// Error at a single t, same computation.
double matrix_factor_error(const DMat& x, double t, int N);

}  // namespace postlie
