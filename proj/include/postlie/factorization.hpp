#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "postlie/magnus.hpp"

namespace postlie {

/// log of a series with constant term 1, in the ordinary product.
UeaSeries series_log(const Uea& U, const UeaSeries& g);

/// The explicit Hopf isomorphism F = m o (id (x) S) o (R_+ (x) R_-) o Delta
/// between the enveloping algebra of the double bracket and the star Hopf
/// algebra, together with the factorization statements it carries.
class RMatrixFactorization {
public:
    RMatrixFactorization(const PostLieLift& lift, LinearEndo R);

    const PostLieLift& lift() const { return lift_; }
    const LinearEndo& R() const { return R_; }
    const LinearEndo& r_plus() const { return rp_; }
    const LinearEndo& r_minus() const { return rm_; }
    bool r_involutive() const;

    /// F on a word, through the signed shuffle expansion: for each position
    /// subset S, (-1)^{k-|S|} R_+(letters in S, increasing) . R_-(letters
    /// outside S, decreasing).
    UEAElement f_map(const BarWord& word) const;
    UEAElement f_map_bar(const BarElement& elem) const;

    /// Presentation A = sum_i c_i . left_i . right_i with
    /// left = R_+(A'_(1)), right = S(R_-(A'_(2))), A' = F^{-1}(A).
    struct Decomposition {
        std::vector<std::tuple<Rational, UEAElement, UEAElement>> terms;
    };
    Decomposition decompose(const UEAElement& a) const;
    UEAElement recompose(const Decomposition& dec) const;

    /// A * B = sum R_+(A'_(1)) B S(R_-(A'_(2))).
    UEAElement star_via_f(const UEAElement& a, const UEAElement& b) const;

    /// Termwise exp*(xt) = exp(t x_+) exp(-t x_-) through order N; requires
    /// R o R = id.
    Report check_grouplike_star_factorization(const GVector& x, int N) const;

    /// chi_+ and chi_- as graded series R_pm(chi_n).
    std::pair<GLieSeries, GLieSeries> exp_factorize(const MagnusSeries& ms) const;

    /// Termwise exp(xt) = exp(chi_+(xt)) exp(-chi_-(xt)) through order N,
    /// plus the uniqueness check: logs of the two factors are fixed by the
    /// idempotent projections R_pm.
    Report check_exp_factorization(const MagnusSeries& ms) const;

private:
    const PostLieLift& lift_;
    LinearEndo R_, rp_, rm_;
};

}  // namespace postlie
