#pragma once

#include "postlie/factorization.hpp"
#include "postlie/lift.hpp"

namespace postlie::testing {

// gl(n) basis index of E_{ab} (0-based rows/cols).
inline int gl_idx(int n, int a, int b) { return a * n + b; }

inline GVector basis_vec(int dim, int i) {
    GVector v = gvec_zero(dim);
    v[i] = 1;
    return v;
}

// Two-dimensional pre-Lie algebra (abelian bracket): basis {d/dx, x d/dx},
// product f |> g = f g' on polynomial coefficients.
inline PostLieProduct prelie_vector_fields() {
    PostLieProduct P(2, PostLieProduct::Provenance::Explicit);
    P.set_t(0, 1, 0, 1);  // e0 |> e1 = e0
    P.set_t(1, 1, 1, 1);  // e1 |> e1 = e1
    return P;
}

struct GlFixture {
    LieAlgebraSpec L;
    LinearEndo R;
    PostLieProduct P;
    Uea U;
    PostLieLift lift;

    GlFixture(int n, int trunc)
        : L(LieAlgebraSpec::gl(n)),
          R(triangular_r_gl(n)),
          P(post_lie_from_r(L, R)),
          U(L, trunc),
          lift(U, P) {}
};

struct Sl2Fixture {
    LieAlgebraSpec L;
    LinearEndo R;
    PostLieProduct P;
    Uea U;
    PostLieLift lift;

    explicit Sl2Fixture(int trunc)
        : L(LieAlgebraSpec::sl2()),
          R(triangular_r_sl2()),
          P(post_lie_from_r(L, R)),
          U(L, trunc),
          lift(U, P) {}
};

// All PBW monomials over a d-dimensional algebra with degree in [lo, hi].
inline std::vector<Monomial> monomials_up_to(int d, int lo, int hi) {
    std::vector<Monomial> result;
    std::vector<Monomial> current{{}};
    if (lo == 0) result.push_back({});
    for (int deg = 1; deg <= hi; ++deg) {
        std::vector<Monomial> next;
        for (const auto& m : current)
            for (int i = m.empty() ? 0 : m.back(); i < d; ++i) {
                Monomial ext = m;
                ext.push_back(i);
                next.push_back(ext);
            }
        if (deg >= lo)
            for (const auto& m : next) result.push_back(m);
        current = std::move(next);
    }
    return result;
}

}  // namespace postlie::testing
