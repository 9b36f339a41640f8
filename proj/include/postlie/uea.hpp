#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "postlie/lie_algebra.hpp"

namespace postlie {

/// PBW monomial: nondecreasing sequence of basis indices. Empty = unit.
using Monomial = std::vector<int>;

/// Element of the truncated enveloping algebra: monomial -> coefficient.
/// Monomials longer than the truncation degree are dropped everywhere.
struct UEAElement {
    std::map<Monomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // max stored degree; 0 for zero or scalars
    bool operator==(const UEAElement& other) const { return terms == other.terms; }
};

UEAElement uea_add(const UEAElement& a, const UEAElement& b);
UEAElement uea_sub(const UEAElement& a, const UEAElement& b);
UEAElement uea_scale(const Rational& c, const UEAElement& a);
void uea_accumulate(UEAElement& acc, const Monomial& m, const Rational& c);

/// Output of the coproduct: (left monomial, right monomial) -> coefficient.
struct TensorElement {
    std::map<std::pair<Monomial, Monomial>, Rational> terms;
    bool operator==(const TensorElement& other) const { return terms == other.terms; }
};

/// Truncated universal enveloping algebra of a fixed Lie algebra, with its
/// standard Hopf structure. All elements handled through a Uea instance share
/// its truncation degree.
class Uea {
public:
    Uea(LieAlgebraSpec L, int trunc);

    const LieAlgebraSpec& algebra() const { return L_; }
    int trunc() const { return trunc_; }

    UEAElement zero() const { return {}; }
    UEAElement one() const;
    UEAElement scalar(const Rational& c) const;
    UEAElement letter(int i) const;
    /// Degree-1 element from Lie-algebra coordinates.
    UEAElement from_gvector(const GVector& x) const;
    /// Inverse of from_gvector; throws if the element is not primitive-degree.
    GVector to_gvector(const UEAElement& a) const;

    /// PBW normal form of an arbitrary word of basis indices. Rewrites each
    /// descent xy -> yx + [x,y]; terminates since every swap strictly lowers
    /// the defect degree of the correction term.
    UEAElement normalize_word(const std::vector<int>& word) const;

    UEAElement mul(const UEAElement& a, const UEAElement& b) const;
    UEAElement mul_word(const Monomial& a, const Monomial& b) const;

    /// Unshuffle coproduct: letters are primitive, extended multiplicatively.
    TensorElement coproduct(const UEAElement& a) const;
    Rational counit(const UEAElement& a) const;
    /// S(x_1...x_n) = (-1)^n x_n...x_1, PBW-normalized.
    UEAElement antipode(const UEAElement& a) const;

    /// exp of an augmentation-ideal element, truncated.
    UEAElement exp_trunc(const UEAElement& x) const;
    /// log of an element with unit coefficient 1, truncated.
    UEAElement log_trunc(const UEAElement& g) const;

    /// Tensor-component product: (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
    TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) const;

    /// Deterministic text form "coeff*label1*label2" sorted by monomial.
    std::string to_string(const UEAElement& a) const;

private:
    LieAlgebraSpec L_;
    int trunc_;
    mutable std::map<std::vector<int>, UEAElement> normalize_cache_;
};

}  // namespace postlie
