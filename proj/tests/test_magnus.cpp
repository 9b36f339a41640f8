#include <doctest.h>

#include "fixtures.hpp"
#include "postlie/magnus.hpp"

using namespace postlie;
using namespace postlie::testing;

namespace {

GVector sl2_sample() { return {Rational(1), Rational(2), Rational(-1)}; }

}  // namespace

TEST_CASE("series arithmetic") {
    Sl2Fixture fx(4);
    const Uea& U = fx.U;
    UeaSeries a(4);
    a.c[1] = U.letter(1);
    a.c[2] = U.letter(2);
    SUBCASE("exp/log round trip") {
        UeaSeries g = series_exp(U, a);
        CHECK(g.c[0] == U.one());
        CHECK(series_equal(series_log(U, g), a, 4));
    }
    SUBCASE("derivative shifts and scales") {
        UeaSeries d = series_derivative(a);
        CHECK(d.c[0] == U.letter(1));
        CHECK(d.c[1] == uea_scale(Rational(2), U.letter(2)));
    }
    SUBCASE("mul is the Cauchy product") {
        UeaSeries p = series_mul(U, a, a);
        CHECK(p.c[0].is_zero());
        CHECK(p.c[1].is_zero());
        CHECK(p.c[2] == U.mul(U.letter(1), U.letter(1)));
        CHECK(p.c[3] == uea_add(U.mul(U.letter(1), U.letter(2)),
                                U.mul(U.letter(2), U.letter(1))));
    }
}

TEST_CASE("second and third expansion coefficients") {
    Sl2Fixture fx(4);
    GVector x = sl2_sample();
    MagnusSeries ms = chi_series(fx.lift, x, 3);
    CHECK(ms.chi[1] == x);
    // chi_2 = -(x |> x)/2
    CHECK(ms.chi[2] == gvec_scale(Rational(-1, 2), fx.P.apply(x, x)));
    CHECK(check_chi_r_matrix_forms(fx.L, fx.R, ms).ok());
}

TEST_CASE("closed-form coefficients on gl(2)") {
    GlFixture fx(2, 4);
    GVector x = {Rational(1), Rational(1), Rational(1), Rational(-1)};
    MagnusSeries ms = chi_series(fx.lift, x, 3);
    CHECK(check_chi_r_matrix_forms(fx.L, fx.R, ms).ok());
}

TEST_CASE("expansion routes agree") {
    Sl2Fixture fx(5);
    GVector x = sl2_sample();
    MagnusSeries a = chi_series(fx.lift, x, 5);
    MagnusSeries b = chi_via_partitions(fx.lift, x, 5);
    REQUIRE(a.order() == b.order());
    for (int n = 1; n <= 5; ++n) CHECK(a.chi[n] == b.chi[n]);
}

TEST_CASE("exponential identity, termwise") {
    Sl2Fixture fx(5);
    MagnusSeries ms = chi_series(fx.lift, sl2_sample(), 5);
    CHECK(check_exp_identity(fx.lift, ms).ok());
}

TEST_CASE("derivative maps are mutually inverse") {
    Sl2Fixture fx(4);
    const Uea& U = fx.U;
    UeaSeries beta(4);
    beta.c[1] = U.letter(2);
    beta.c[2] = uea_scale(Rational(1, 3), U.letter(1));
    UEAElement y = U.letter(0);
    UeaSeries d = dexp_star(fx.lift, beta, y);
    UeaSeries back = dexpinv_star_series(fx.lift, beta, d);
    UeaSeries target(4);
    target.c[0] = y;
    CHECK(series_equal(back, target, 4));
}

TEST_CASE("differential equation residual vanishes") {
    Sl2Fixture fx(5);
    MagnusSeries ms = chi_series(fx.lift, sl2_sample(), 5);
    UeaSeries r = ode_residual(fx.lift, ms);
    for (int n = 0; n <= 4; ++n) CHECK(r.c[n].is_zero());
}

TEST_CASE("bracket fixed-point recursion matches the expansion") {
    SUBCASE("sl(2)") {
        Sl2Fixture fx(4);
        GVector x = sl2_sample();
        MagnusSeries a = chi_series(fx.lift, x, 4);
        MagnusSeries b = bch_recursion(fx.L, fx.R, x, 4);
        for (int n = 1; n <= 4; ++n) CHECK(a.chi[n] == b.chi[n]);
    }
    SUBCASE("gl(2)") {
        GlFixture fx(2, 4);
        GVector x = {Rational(2), Rational(1), Rational(-1), Rational(1)};
        MagnusSeries a = chi_series(fx.lift, x, 4);
        MagnusSeries b = bch_recursion(fx.L, fx.R, x, 4);
        for (int n = 1; n <= 4; ++n) CHECK(a.chi[n] == b.chi[n]);
    }
}
