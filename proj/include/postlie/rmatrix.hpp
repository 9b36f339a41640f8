#pragma once

#include <utility>

#include "postlie/lie_algebra.hpp"

namespace postlie {

/// Linear self-map of the Lie algebra, dense d x d, row-major:
/// (apply(x))[i] = sum_j m(i,j) x[j].
class LinearEndo {
public:
    explicit LinearEndo(int dim) : dim_(dim), m_(static_cast<size_t>(dim) * dim, Rational(0)) {}

    int dim() const { return dim_; }
    const Rational& at(int i, int j) const { return m_[i * dim_ + j]; }
    Rational& at(int i, int j) { return m_[i * dim_ + j]; }

    GVector apply(const GVector& x) const;
    LinearEndo compose(const LinearEndo& other) const;  // this o other
    LinearEndo add(const LinearEndo& other) const;
    LinearEndo scale(const Rational& c) const;

    static LinearEndo identity(int dim);
    static LinearEndo zero(int dim) { return LinearEndo(dim); }

    bool operator==(const LinearEndo& other) const { return m_ == other.m_; }

private:
    int dim_;
    std::vector<Rational> m_;
};

/// Post-Lie product table: e_i |> e_j = sum_k t(i,j,k) e_k.
class PostLieProduct {
public:
    enum class Provenance { Explicit, DerivedFromR };

    PostLieProduct(int dim, Provenance prov)
        : dim_(dim), prov_(prov), t_(static_cast<size_t>(dim) * dim * dim, Rational(0)) {}

    int dim() const { return dim_; }
    Provenance provenance() const { return prov_; }
    const Rational& t(int i, int j, int k) const { return t_[(i * dim_ + j) * dim_ + k]; }
    void set_t(int i, int j, int k, Rational v) { t_[(i * dim_ + j) * dim_ + k] = std::move(v); }

    GVector apply_basis(int i, int j) const;
    GVector apply(const GVector& x, const GVector& y) const;

private:
    int dim_;
    Provenance prov_;
    std::vector<Rational> t_;
};

/// B_R(x,y) = R([Rx,y] + [x,Ry]) - [Rx,Ry].
GVector b_r(const LieAlgebraSpec& L, const LinearEndo& R, const GVector& x, const GVector& y);

/// Checks B_R(x,y) = theta [x,y] on all basis pairs and the general Jacobi
/// condition sum_cyc [B_R(x,y), z] = 0 on all basis triples.
Report check_mcybe(const LieAlgebraSpec& L, const LinearEndo& R, const Rational& theta);

/// R_pm = (R +- id)/2.
std::pair<LinearEndo, LinearEndo> r_plus_minus(const LinearEndo& R);

/// [x,y]_R = ([Rx,y] + [x,Ry])/2.
GVector double_bracket(const LieAlgebraSpec& L, const LinearEndo& R, const GVector& x,
                       const GVector& y);

/// x |> y = [R_- x, y].
PostLieProduct post_lie_from_r(const LieAlgebraSpec& L, const LinearEndo& R);

/// Both post-Lie axioms on all basis triples, plus Jacobi for the induced
/// bracket [[x,y]] = x|>y - y|>x + [x,y].
Report validate_post_lie(const LieAlgebraSpec& L, const PostLieProduct& P);

/// [[x,y]] = x|>y - y|>x + [x,y].
GVector induced_bracket(const LieAlgebraSpec& L, const PostLieProduct& P, const GVector& x,
                        const GVector& y);

/// The Lie algebra with bracket [[.,.]], on the same underlying space.
LieAlgebraSpec induced_lie_algebra(const LieAlgebraSpec& L, const PostLieProduct& P);

/// For gl(n): R = pi_+ - pi_- with pi_+ the projection onto the
/// upper-triangular-including-diagonal span and pi_- onto the strictly lower
/// span. Solves the MCYBE with theta = 1 and satisfies R o R = id.
LinearEndo triangular_r_gl(int n);

/// Same splitting for sl(2) in the {h, e, f} basis: R = diag(1, 1, -1).
LinearEndo triangular_r_sl2();

}  // namespace postlie
