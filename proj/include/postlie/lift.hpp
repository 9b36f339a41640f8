#pragma once

#include <map>
#include <utility>

#include "postlie/rmatrix.hpp"
#include "postlie/uea.hpp"

namespace postlie {

/// Extension of a post-Lie product from the Lie algebra to its (truncated)
/// enveloping algebra, together with the associated Grossman-Larson-type
/// star product and its antipode.
///
/// triangle is evaluated by structural recursion: peel the leftmost letter of
/// the first argument via  xA |> B = x |> (A |> B) - (x |> A) |> B,  and act
/// on single letters through the derivation rule. Each call strictly lowers
/// the degree of one argument, so the recursion terminates. Monomial pairs
/// are memoized; the identity-heavy cross-checks revisit the same subcalls
/// constantly.
class PostLieLift {
public:
    PostLieLift(const Uea& uea, PostLieProduct product);

    const Uea& uea() const { return uea_; }
    const PostLieProduct& product() const { return product_; }

    /// Lifted post-Lie product A |> B.
    UEAElement triangle(const UEAElement& a, const UEAElement& b) const;

    /// d(x)(x_1...x_n) = sum_i x_1...(x |> x_i)...x_n.
    UEAElement derivation(const GVector& x, const Monomial& w) const;

    /// A * B = A_(1) (A_(2) |> B).
    UEAElement star(const UEAElement& a, const UEAElement& b) const;

    /// n-fold star product of degree-1 elements, left to right.
    UEAElement star_word(const std::vector<GVector>& letters) const;

    /// Star-Hopf antipode, from the defining relation
    /// m_* o (id (x) S_*) o Delta = unit o counit.
    UEAElement star_antipode(const UEAElement& a) const;

private:
    UEAElement triangle_mono(const Monomial& a, const Monomial& b) const;
    UEAElement star_antipode_mono(const Monomial& m) const;

    const Uea& uea_;
    PostLieProduct product_;
    mutable std::map<std::pair<Monomial, Monomial>, UEAElement> triangle_cache_;
    mutable std::map<Monomial, UEAElement> antipode_cache_;
};

}  // namespace postlie
