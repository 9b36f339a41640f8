#pragma once

#include <string>
#include <vector>

#include "postlie/rational.hpp"

namespace postlie {

/// Element of the Lie algebra, as coordinates in the fixed basis.
using GVector = std::vector<Rational>;

GVector gvec_zero(int dim);
GVector gvec_add(const GVector& a, const GVector& b);
GVector gvec_sub(const GVector& a, const GVector& b);
GVector gvec_scale(const Rational& c, const GVector& a);
bool gvec_is_zero(const GVector& a);

/// Outcome of an exhaustive axiom check. Empty failure list means pass.
struct Report {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string msg) { failures.push_back(std::move(msg)); }
};

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebraSpec {
public:
    LieAlgebraSpec(int dim, std::vector<std::string> labels);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& c(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    void set_c(int i, int j, int k, Rational v);

    /// [e_i, e_j] as a coordinate vector.
    GVector bracket_basis(int i, int j) const;
    GVector bracket(const GVector& x, const GVector& y) const;

    /// Antisymmetry and the Jacobi identity, checked over all basis tuples.
    Report validate() const;

    /// gl(n) with the elementary-matrix basis E_ab at index a*n+b.
    static LieAlgebraSpec gl(int n);
    /// sl(2) with basis {h, e, f}: [h,e]=2e, [h,f]=-2f, [e,f]=h.
    static LieAlgebraSpec sl2();
    /// Structure constants from explicit n x n basis matrices; the commutator
    /// of any two basis elements must lie in their span.
    static LieAlgebraSpec from_matrices(const std::vector<std::vector<Rational>>& basis, int n,
                                        std::vector<std::string> labels);
    /// Abelian Lie algebra of the given dimension.
    static LieAlgebraSpec abelian(int dim);

private:
    int dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
};

}  // namespace postlie
