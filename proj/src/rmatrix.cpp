#include "postlie/rmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace postlie {

GVector LinearEndo::apply(const GVector& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("endo: dimension mismatch");
    GVector r = gvec_zero(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
    return r;
}

LinearEndo LinearEndo::compose(const LinearEndo& other) const {
    LinearEndo r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < dim_; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
        }
    return r;
}

LinearEndo LinearEndo::add(const LinearEndo& other) const {
    LinearEndo r = *this;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) += other.at(i, j);
    return r;
}

LinearEndo LinearEndo::scale(const Rational& c) const {
    LinearEndo r = *this;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) *= c;
    return r;
}

LinearEndo LinearEndo::identity(int dim) {
    LinearEndo r(dim);
    for (int i = 0; i < dim; ++i) r.at(i, i) = 1;
    return r;
}

GVector PostLieProduct::apply_basis(int i, int j) const {
    GVector r = gvec_zero(dim_);
    for (int k = 0; k < dim_; ++k) r[k] = t(i, j, k);
    return r;
}

GVector PostLieProduct::apply(const GVector& x, const GVector& y) const {
    GVector r = gvec_zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rational cij = x[i] * y[j];
            for (int k = 0; k < dim_; ++k)
                if (t(i, j, k) != 0) r[k] += cij * t(i, j, k);
        }
    }
    return r;
}

GVector b_r(const LieAlgebraSpec& L, const LinearEndo& R, const GVector& x, const GVector& y) {
    GVector rx = R.apply(x), ry = R.apply(y);
    GVector inner = gvec_add(L.bracket(rx, y), L.bracket(x, ry));
    return gvec_sub(R.apply(inner), L.bracket(rx, ry));
}

Report check_mcybe(const LieAlgebraSpec& L, const LinearEndo& R, const Rational& theta) {
    Report rep;
    const int d = L.dim();
    auto basis = [d](int i) {
        GVector v = gvec_zero(d);
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            GVector lhs = b_r(L, R, basis(i), basis(j));
            GVector rhs = gvec_scale(theta, L.bracket_basis(i, j));
            if (lhs != rhs) {
                std::ostringstream os;
                os << "MCYBE fails at pair (" << L.labels()[i] << "," << L.labels()[j] << ")";
                rep.fail(os.str());
            }
        }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                GVector x = basis(i), y = basis(j), z = basis(k);
                GVector cyc = gvec_add(gvec_add(L.bracket(b_r(L, R, x, y), z),
                                                L.bracket(b_r(L, R, z, x), y)),
                                       L.bracket(b_r(L, R, y, z), x));
                if (!gvec_is_zero(cyc)) {
                    std::ostringstream os;
                    os << "B_R Jacobi condition fails at triple (" << L.labels()[i] << ","
                       << L.labels()[j] << "," << L.labels()[k] << ")";
                    rep.fail(os.str());
                }
            }
    return rep;
}

std::pair<LinearEndo, LinearEndo> r_plus_minus(const LinearEndo& R) {
    Rational half(1, 2);
    LinearEndo id = LinearEndo::identity(R.dim());
    return {R.add(id).scale(half), R.add(id.scale(Rational(-1))).scale(half)};
}

GVector double_bracket(const LieAlgebraSpec& L, const LinearEndo& R, const GVector& x,
                       const GVector& y) {
    GVector s = gvec_add(L.bracket(R.apply(x), y), L.bracket(x, R.apply(y)));
    return gvec_scale(Rational(1, 2), s);
}

PostLieProduct post_lie_from_r(const LieAlgebraSpec& L, const LinearEndo& R) {
    const int d = L.dim();
    auto [rp, rm] = r_plus_minus(R);
    (void)rp;
    PostLieProduct P(d, PostLieProduct::Provenance::DerivedFromR);
    for (int i = 0; i < d; ++i) {
        GVector ei = gvec_zero(d);
        ei[i] = 1;
        GVector rmi = rm.apply(ei);
        for (int j = 0; j < d; ++j) {
            GVector ej = gvec_zero(d);
            ej[j] = 1;
            GVector v = L.bracket(rmi, ej);
            for (int k = 0; k < d; ++k) P.set_t(i, j, k, v[k]);
        }
    }
    return P;
}

GVector induced_bracket(const LieAlgebraSpec& L, const PostLieProduct& P, const GVector& x,
                        const GVector& y) {
    return gvec_add(gvec_sub(P.apply(x, y), P.apply(y, x)), L.bracket(x, y));
}

LieAlgebraSpec induced_lie_algebra(const LieAlgebraSpec& L, const PostLieProduct& P) {
    const int d = L.dim();
    LieAlgebraSpec Lbar(d, L.labels());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                Lbar.set_c(i, j, k, P.t(i, j, k) - P.t(j, i, k) + L.c(i, j, k));
    return Lbar;
}

Report validate_post_lie(const LieAlgebraSpec& L, const PostLieProduct& P) {
    Report rep;
    const int d = L.dim();
    auto basis = [d](int i) {
        GVector v = gvec_zero(d);
        v[i] = 1;
        return v;
    };
    auto assoc = [&](const GVector& x, const GVector& y, const GVector& z) {
        return gvec_sub(P.apply(x, P.apply(y, z)), P.apply(P.apply(x, y), z));
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                GVector x = basis(i), y = basis(j), z = basis(k);
                // x |> [y,z] = [x|>y, z] + [y, x|>z]
                GVector lhs1 = P.apply(x, L.bracket_basis(j, k));
                GVector rhs1 = gvec_add(L.bracket(P.apply(x, y), z), L.bracket(y, P.apply(x, z)));
                if (lhs1 != rhs1) {
                    rep.fail("derivation axiom fails at (" + L.labels()[i] + "," + L.labels()[j] +
                             "," + L.labels()[k] + ")");
                }
                // [x,y] |> z = a(x,y,z) - a(y,x,z)
                GVector lhs2 = P.apply(L.bracket_basis(i, j), z);
                GVector rhs2 = gvec_sub(assoc(x, y, z), assoc(y, x, z));
                if (lhs2 != rhs2) {
                    rep.fail("associator axiom fails at (" + L.labels()[i] + "," + L.labels()[j] +
                             "," + L.labels()[k] + ")");
                }
            }
    // Jacobi for the induced bracket [[.,.]]
    LieAlgebraSpec Lbar = induced_lie_algebra(L, P);
    Report jac = Lbar.validate();
    for (auto& f : jac.failures) rep.fail("induced bracket: " + f);
    return rep;
}

LinearEndo triangular_r_gl(int n) {
    LinearEndo R(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int i = a * n + b;
            R.at(i, i) = (a <= b) ? 1 : -1;
        }
    return R;
}

LinearEndo triangular_r_sl2() {
    LinearEndo R(3);
    R.at(0, 0) = 1;
    R.at(1, 1) = 1;
    R.at(2, 2) = -1;
    return R;
}

}  // namespace postlie
