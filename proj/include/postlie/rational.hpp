#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace postlie {

/// Exact scalar type. All symbolic computations run over arbitrary-precision
/// rationals; floating point appears only in the numeric factorization checks.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

/// First N+1 Bernoulli numbers b_0..b_N with the b_1 = -1/2 convention,
/// via the recurrence sum_{j=0}^{n} C(n+1,j) b_j = 0.
inline std::vector<Rational> bernoulli_numbers(unsigned N) {
    std::vector<Rational> b(N + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (unsigned j = 0; j < n; ++j) {
            acc += binomial(n + 1, j) * b[j];
        }
        b[n] = -acc / binomial(n + 1, n);
    }
    return b;
}

}  // namespace postlie
