#include "postlie/factorization.hpp"

#include <sstream>
#include <stdexcept>

namespace postlie {

UeaSeries series_log(const Uea& U, const UeaSeries& g) {
    if (!(g.c[0] == U.one())) throw std::invalid_argument("series log: constant term must be 1");
    const int N = g.order();
    UeaSeries z = g;
    z.c[0] = UEAElement{};
    UeaSeries result(N);
    UeaSeries power(N);
    power.c[0] = U.one();
    for (int k = 1; k <= N; ++k) {
        power = series_mul(U, power, z);
        Rational coeff((k % 2 == 1) ? 1 : -1, k);
        result = series_add(result, series_scale(coeff, power));
    }
    return result;
}

RMatrixFactorization::RMatrixFactorization(const PostLieLift& lift, LinearEndo R)
    : lift_(lift), R_(std::move(R)), rp_(R_.dim()), rm_(R_.dim()) {
    if (R_.dim() != lift.uea().algebra().dim())
        throw std::invalid_argument("R dimension does not match algebra");
    auto [rp, rm] = r_plus_minus(R_);
    rp_ = rp;
    rm_ = rm;
}

bool RMatrixFactorization::r_involutive() const {
    return R_.compose(R_) == LinearEndo::identity(R_.dim());
}

UEAElement RMatrixFactorization::f_map(const BarWord& word) const {
    const Uea& U = lift_.uea();
    const size_t k = word.size();
    UEAElement result;
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        size_t l = 0;
        UEAElement term = U.one();
        for (size_t i = 0; i < k; ++i) {
            if (mask & (size_t{1} << i)) {
                term = U.mul(term, U.from_gvector(rp_.apply(word[i])));
                ++l;
            }
        }
        for (size_t i = k; i-- > 0;) {
            if (!(mask & (size_t{1} << i))) term = U.mul(term, U.from_gvector(rm_.apply(word[i])));
        }
        Rational sign = ((k - l) % 2 == 0) ? Rational(1) : Rational(-1);
        result = uea_add(result, uea_scale(sign, term));
    }
    return result;
}

UEAElement RMatrixFactorization::f_map_bar(const BarElement& elem) const {
    UEAElement result;
    for (const auto& [w, c] : elem) result = uea_add(result, uea_scale(c, f_map(w)));
    return result;
}

RMatrixFactorization::Decomposition RMatrixFactorization::decompose(const UEAElement& a) const {
    const Uea& U = lift_.uea();
    Decomposition dec;
    BarElement aprime = phi_inverse(lift_, a);
    for (const auto& [word, coeff] : aprime) {
        const size_t k = word.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            UEAElement left = U.one();
            UEAElement right = U.one();
            size_t complement = 0;
            for (size_t i = 0; i < k; ++i) {
                if (mask & (size_t{1} << i))
                    left = U.mul(left, U.from_gvector(rp_.apply(word[i])));
                else
                    ++complement;
            }
            // S(R_-(x_{j1}...x_{jm})) = (-1)^m R_-(x_{jm})...R_-(x_{j1})
            for (size_t i = k; i-- > 0;) {
                if (!(mask & (size_t{1} << i)))
                    right = U.mul(right, U.from_gvector(rm_.apply(word[i])));
            }
            Rational sign = (complement % 2 == 0) ? Rational(1) : Rational(-1);
            dec.terms.emplace_back(coeff * sign, std::move(left), std::move(right));
        }
    }
    return dec;
}

UEAElement RMatrixFactorization::recompose(const Decomposition& dec) const {
    const Uea& U = lift_.uea();
    UEAElement result;
    for (const auto& [c, left, right] : dec.terms)
        result = uea_add(result, uea_scale(c, U.mul(left, right)));
    return result;
}

UEAElement RMatrixFactorization::star_via_f(const UEAElement& a, const UEAElement& b) const {
    const Uea& U = lift_.uea();
    UEAElement result;
    BarElement aprime = phi_inverse(lift_, a);
    for (const auto& [word, coeff] : aprime) {
        const size_t k = word.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            UEAElement term = U.one();
            size_t complement = 0;
            for (size_t i = 0; i < k; ++i) {
                if (mask & (size_t{1} << i)) term = U.mul(term, U.from_gvector(rp_.apply(word[i])));
            }
            term = U.mul(term, b);
            for (size_t i = k; i-- > 0;) {
                if (!(mask & (size_t{1} << i))) {
                    term = U.mul(term, U.from_gvector(rm_.apply(word[i])));
                    ++complement;
                }
            }
            Rational sign = (complement % 2 == 0) ? Rational(1) : Rational(-1);
            result = uea_add(result, uea_scale(coeff * sign, term));
        }
    }
    return result;
}

Report RMatrixFactorization::check_grouplike_star_factorization(const GVector& x, int N) const {
    Report rep;
    if (!r_involutive()) {
        rep.fail("R is not involutive; the star factorization requires R o R = id");
        return rep;
    }
    const Uea& U = lift_.uea();
    UeaSeries xs(N);
    xs.c[1] = U.from_gvector(x);
    UeaSeries lhs = series_exp_star(lift_, xs);
    UeaSeries plus(N), minus(N);
    plus.c[1] = U.from_gvector(rp_.apply(x));
    minus.c[1] = uea_scale(Rational(-1), U.from_gvector(rm_.apply(x)));
    UeaSeries rhs = series_mul(U, series_exp(U, plus), series_exp(U, minus));
    for (int n = 0; n <= N; ++n) {
        if (!(lhs.c[n] == rhs.c[n])) {
            std::ostringstream os;
            os << "exp*(x) != exp(x_+)exp(-x_-) at order " << n;
            rep.fail(os.str());
        }
    }
    return rep;
}

std::pair<GLieSeries, GLieSeries> RMatrixFactorization::exp_factorize(const MagnusSeries& ms) const {
    const int N = ms.order();
    const int d = R_.dim();
    GLieSeries plus(N + 1, gvec_zero(d)), minus(N + 1, gvec_zero(d));
    for (int n = 1; n <= N; ++n) {
        plus[n] = rp_.apply(ms.chi[n]);
        minus[n] = rm_.apply(ms.chi[n]);
    }
    return {plus, minus};
}

Report RMatrixFactorization::check_exp_factorization(const MagnusSeries& ms) const {
    Report rep;
    if (!r_involutive()) {
        rep.fail("R is not involutive; the exp factorization requires R o R = id");
        return rep;
    }
    const Uea& U = lift_.uea();
    const int N = ms.order();
    auto [plus, minus] = exp_factorize(ms);
    UeaSeries plus_s(N), minus_s(N);
    for (int n = 1; n <= N; ++n) {
        plus_s.c[n] = U.from_gvector(plus[n]);
        minus_s.c[n] = uea_scale(Rational(-1), U.from_gvector(minus[n]));
    }
    UeaSeries exp_plus = series_exp(U, plus_s);
    UeaSeries exp_minus = series_exp(U, minus_s);
    UeaSeries xs(N);
    xs.c[1] = U.from_gvector(ms.x);
    UeaSeries lhs = series_exp(U, xs);
    UeaSeries rhs = series_mul(U, exp_plus, exp_minus);
    for (int n = 0; n <= N; ++n) {
        if (!(lhs.c[n] == rhs.c[n])) {
            std::ostringstream os;
            os << "exp(x) != exp(chi_+)exp(-chi_-) at order " << n;
            rep.fail(os.str());
        }
    }
    // chi_+ - chi_- = chi order by order
    for (int n = 1; n <= N; ++n) {
        if (gvec_sub(plus[n], minus[n]) != ms.chi[n])
            rep.fail("chi_+ - chi_- != chi at order " + std::to_string(n));
    }
    // Uniqueness: recover the factors' logs and project with the idempotent
    // maps R_+ and -R_-; both must reproduce the factors exactly.
    UeaSeries log_plus = series_log(U, exp_plus);
    UeaSeries log_minus = series_log(U, exp_minus);
    for (int n = 1; n <= N; ++n) {
        GVector lp = U.to_gvector(log_plus.c[n]);
        GVector lm = U.to_gvector(log_minus.c[n]);
        if (rp_.apply(lp) != lp || lp != plus[n])
            rep.fail("log of plus factor not fixed by R_+ at order " + std::to_string(n));
        if (rm_.apply(lm) != gvec_scale(Rational(-1), lm) ||
            lm != gvec_scale(Rational(-1), minus[n]))
            rep.fail("log of minus factor not fixed by -R_- at order " + std::to_string(n));
    }
    return rep;
}

}  // namespace postlie
