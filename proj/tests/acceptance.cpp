// Full property suite over the bundled fixtures. Prints one PASS/FAIL line
// per criterion and exits nonzero if any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "postlie/factorization.hpp"
#include "postlie/matrix_numerics.hpp"

using namespace postlie;

namespace {

int failures = 0;

template <typename F>
void criterion(const char* name, double budget_seconds, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail = "over time budget";
    }
    if (!ok) ++failures;
    std::printf("%s  %-58s [%6.2fs]%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
}

GVector basis_vec(int dim, int i) {
    GVector v = gvec_zero(dim);
    v[i] = 1;
    return v;
}

std::vector<Monomial> monomials_up_to(int d, int lo, int hi) {
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

UEAElement mono(const Monomial& m) {
    UEAElement a;
    a.terms.emplace(m, Rational(1));
    return a;
}

TensorElement tensor_of(const UEAElement& a, const UEAElement& b, const Rational& c) {
    TensorElement out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            auto key = std::make_pair(ma, mb);
            out.terms[key] += c * ca * cb;
            if (out.terms[key] == 0) out.terms.erase(key);
        }
    return out;
}

TensorElement tensor_add(TensorElement a, const TensorElement& b) {
    for (const auto& [k, c] : b.terms) {
        a.terms[k] += c;
        if (a.terms[k] == 0) a.terms.erase(k);
    }
    return a;
}

// componentwise application of a binary UEA operation to two tensors
template <typename Op>
TensorElement tensor_map2(const TensorElement& a, const TensorElement& b, Op&& op) {
    TensorElement out;
    for (const auto& [pa, ca] : a.terms)
        for (const auto& [pb, cb] : b.terms) {
            UEAElement left = op(mono(pa.first), mono(pb.first));
            UEAElement right = op(mono(pa.second), mono(pb.second));
            out = tensor_add(out, tensor_of(left, right, ca * cb));
        }
    return out;
}

bool axiom_suite(std::string& detail) {
    for (int n : {2, 3}) {
        auto L = LieAlgebraSpec::gl(n);
        auto R = triangular_r_gl(n);
        if (!check_mcybe(L, R, Rational(1)).ok()) {
            detail = "modified Yang-Baxter check failed on gl(" + std::to_string(n) + ")";
            return false;
        }
        auto P = post_lie_from_r(L, R);
        if (!validate_post_lie(L, P).ok()) {
            detail = "post-Lie axioms failed on gl(" + std::to_string(n) + ")";
            return false;
        }
        int d = L.dim();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                GVector lhs = induced_bracket(L, P, basis_vec(d, i), basis_vec(d, j));
                GVector rhs = double_bracket(L, R, basis_vec(d, i), basis_vec(d, j));
                if (lhs != rhs) {
                    detail = "induced bracket != double bracket on gl(" + std::to_string(n) + ")";
                    return false;
                }
            }
    }
    return true;
}

bool hopf_suite(std::string& detail) {
    Uea U(LieAlgebraSpec::sl2(), 4);
    for (const auto& m : monomials_up_to(3, 0, 4)) {
        UEAElement w = mono(m);
        TensorElement d = U.coproduct(w);
        // cocommutativity
        TensorElement flipped;
        for (const auto& [pair, c] : d.terms) flipped.terms[{pair.second, pair.first}] = c;
        if (!(d == flipped)) {
            detail = "coproduct not cocommutative";
            return false;
        }
        // coassociativity
        std::map<std::tuple<Monomial, Monomial, Monomial>, Rational> lhs, rhs;
        for (const auto& [pair, c] : d.terms) {
            for (const auto& [p2, c2] : U.coproduct(mono(pair.first)).terms) {
                auto key = std::make_tuple(p2.first, p2.second, pair.second);
                lhs[key] += c * c2;
                if (lhs[key] == 0) lhs.erase(key);
            }
            for (const auto& [p2, c2] : U.coproduct(mono(pair.second)).terms) {
                auto key = std::make_tuple(pair.first, p2.first, p2.second);
                rhs[key] += c * c2;
                if (rhs[key] == 0) rhs.erase(key);
            }
        }
        if (!(lhs == rhs)) {
            detail = "coproduct not coassociative";
            return false;
        }
        // antipode axiom, both sides
        UEAElement target = U.scalar(U.counit(w));
        UEAElement accL, accR;
        for (const auto& [pair, c] : d.terms) {
            accL = uea_add(accL, uea_scale(c, U.mul(U.antipode(mono(pair.first)),
                                                    mono(pair.second))));
            accR = uea_add(accR, uea_scale(c, U.mul(mono(pair.first),
                                                    U.antipode(mono(pair.second)))));
        }
        if (!(accL == target) || !(accR == target)) {
            detail = "antipode axiom failed";
            return false;
        }
    }
    return true;
}

bool lifted_product_suite(std::string& detail) {
    auto L = LieAlgebraSpec::sl2();
    auto R = triangular_r_sl2();
    auto P = post_lie_from_r(L, R);
    Uea U(L, 5);
    PostLieLift lift(U, P);
    auto all = monomials_up_to(3, 0, 5);
    auto deg = [](const Monomial& m) { return static_cast<int>(m.size()); };

    for (const auto& ma : all) {
        UEAElement a = mono(ma);
        // 1 |> A = A ;  A |> 1 = eps(A) 1
        if (!(lift.triangle(U.one(), a) == a) ||
            !(lift.triangle(a, U.one()) == U.scalar(U.counit(a)))) {
            detail = "unit identities failed";
            return false;
        }
    }
    for (const auto& ma : all)
        for (const auto& mb : all) {
            if (deg(ma) + deg(mb) > 5) continue;
            UEAElement a = mono(ma), b = mono(mb);
            UEAElement ab = lift.triangle(a, b);
            if (!(U.counit(ab) == U.counit(a) * U.counit(b))) {
                detail = "counit not multiplicative over the lifted product";
                return false;
            }
            if (!(U.coproduct(ab) ==
                  tensor_map2(U.coproduct(a), U.coproduct(b),
                              [&](const UEAElement& u, const UEAElement& v) {
                                  return lift.triangle(u, v);
                              }))) {
                detail = "lifted product is not a coalgebra morphism";
                return false;
            }
            if (!ma.empty()) {
                // peel rule x A' |> B with x the first letter of ma
                int x = ma.front();
                Monomial rest(ma.begin() + 1, ma.end());
                UEAElement xa = U.mul(U.letter(x), mono(rest));
                UEAElement lhs = lift.triangle(xa, b);
                UEAElement rhs = uea_sub(
                    lift.triangle(U.letter(x), lift.triangle(mono(rest), b)),
                    lift.triangle(lift.triangle(U.letter(x), mono(rest)), b));
                if (!(lhs == rhs)) {
                    detail = "left-letter peel identity failed";
                    return false;
                }
            }
            if (!(U.coproduct(lift.star(a, b)) ==
                  tensor_map2(U.coproduct(a), U.coproduct(b),
                              [&](const UEAElement& u, const UEAElement& v) {
                                  return lift.star(u, v);
                              }))) {
                detail = "coproduct is not a star morphism";
                return false;
            }
        }
    for (const auto& ma : all)
        for (const auto& mb : all)
            for (const auto& mc : all) {
                if (deg(ma) + deg(mb) + deg(mc) > 5) continue;
                UEAElement a = mono(ma), b = mono(mb), c = mono(mc);
                // A |> BC through the coproduct
                UEAElement rhs;
                for (const auto& [pa, coef] : U.coproduct(a).terms)
                    rhs = uea_add(rhs, uea_scale(coef,
                              U.mul(lift.triangle(mono(pa.first), b),
                                    lift.triangle(mono(pa.second), c))));
                if (!(lift.triangle(a, U.mul(b, c)) == rhs)) {
                    detail = "product splitting identity failed";
                    return false;
                }
                if (!(lift.triangle(a, lift.triangle(b, c)) ==
                      lift.triangle(lift.star(a, b), c))) {
                    detail = "A |> (B |> C) != (A * B) |> C";
                    return false;
                }
                if (!(lift.star(lift.star(a, b), c) == lift.star(a, lift.star(b, c)))) {
                    detail = "star product not associative";
                    return false;
                }
            }
    // coproduct of star words: Delta(x1*...*xn) unshuffles into star factors
    std::vector<GVector> letters = {
        {Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(1), Rational(-1)},
        {Rational(2), Rational(-1), Rational(0)},
        {Rational(0), Rational(1, 2), Rational(3)},
    };
    for (int n = 1; n <= 4; ++n) {
        std::vector<GVector> w(letters.begin(), letters.begin() + n);
        UEAElement sw = lift.star_word(w);
        TensorElement expected;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<GVector> in, out;
            for (int i = 0; i < n; ++i)
                (mask & (1 << i) ? in : out).push_back(w[i]);
            expected = tensor_add(expected,
                                  tensor_of(lift.star_word(in), lift.star_word(out),
                                            Rational(1)));
        }
        if (!(U.coproduct(sw) == expected)) {
            detail = "star-word coproduct shape failed at length " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool partition_suite(std::string& detail) {
    std::vector<long> bell = {1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) {
        if ((long)enumerate_partitions(n).size() != bell[n - 1] ||
            bell_number(n) != bell[n - 1]) {
            detail = "partition count mismatch at n = " + std::to_string(n);
            return false;
        }
    }
    auto L = LieAlgebraSpec::sl2();
    auto R = triangular_r_sl2();
    auto P = post_lie_from_r(L, R);
    Uea U(L, 5);
    PostLieLift lift(U, P);
    std::vector<GVector> pool = {
        {Rational(1), Rational(2), Rational(0)},
        {Rational(0), Rational(1), Rational(1)},
        {Rational(-1), Rational(0), Rational(2)},
        {Rational(1, 2), Rational(1), Rational(-1)},
        {Rational(3), Rational(-2), Rational(1)},
    };
    for (int len = 1; len <= 5; ++len) {
        BarWord w(pool.begin(), pool.begin() + len);
        UEAElement a = phi(lift, w);
        if (!(a == phi_recursive(lift, w)) || !(a == lift.star_word(w))) {
            detail = "phi routes disagree at length " + std::to_string(len);
            return false;
        }
    }
    for (const auto& m : monomials_up_to(3, 0, 4)) {
        UEAElement w = mono(m);
        if (!(phi_on_bar(lift, phi_inverse(lift, w)) == w)) {
            detail = "phi o phi_inverse != id";
            return false;
        }
    }
    return true;
}

bool magnus_suite(std::string& detail) {
    auto L = LieAlgebraSpec::gl(2);
    auto R = triangular_r_gl(2);
    auto P = post_lie_from_r(L, R);
    Uea U(L, 6);
    PostLieLift lift(U, P);
    GVector x = {Rational(1), Rational(2), Rational(3), Rational(-1)};
    // chi_series throws if any chi_n is not primitive, so reaching order 6
    // also certifies primitivity for n <= 6.
    MagnusSeries ms = chi_series(lift, x, 6);
    if (!check_chi_r_matrix_forms(L, R, ms).ok()) {
        detail = "chi_2 / chi_3 closed forms failed";
        return false;
    }
    if (!check_exp_identity(lift, ms).ok()) {
        detail = "exp(x) != exp*(chi) termwise";
        return false;
    }
    MagnusSeries viap = chi_via_partitions(lift, x, 6);
    for (int n = 1; n <= 6; ++n)
        if (ms.chi[n] != viap.chi[n]) {
            detail = "partition route disagrees at order " + std::to_string(n);
            return false;
        }
    UeaSeries resid = ode_residual(lift, ms);
    for (int n = 0; n <= 5; ++n)
        if (!resid.c[n].is_zero()) {
            detail = "differential-equation residual nonzero at order " + std::to_string(n);
            return false;
        }
    MagnusSeries bch = bch_recursion(L, R, x, 4);
    for (int n = 1; n <= 4; ++n)
        if (ms.chi[n] != bch.chi[n]) {
            detail = "bracket recursion disagrees at order " + std::to_string(n);
            return false;
        }
    if (!check_chi_r_matrix_forms(L, R, bch).ok()) {
        detail = "bracket recursion fails the closed forms";
        return false;
    }
    return true;
}

bool f_map_suite(std::string& detail) {
    auto L = LieAlgebraSpec::sl2();
    auto R = triangular_r_sl2();
    auto P = post_lie_from_r(L, R);
    Uea U(L, 4);
    PostLieLift lift(U, P);
    RMatrixFactorization fac(lift, R);
    auto [rp, rm] = r_plus_minus(R);
    std::vector<GVector> pool = {
        {Rational(1), Rational(0), Rational(1)},
        {Rational(0), Rational(2), Rational(-1)},
        {Rational(1), Rational(-1), Rational(0)},
        {Rational(1, 3), Rational(1), Rational(2)},
    };
    for (int len = 1; len <= 4; ++len) {
        BarWord w(pool.begin(), pool.begin() + len);
        UEAElement fw = fac.f_map(w);
        if (!(fw == phi(lift, w))) {
            detail = "F != phi at length " + std::to_string(len);
            return false;
        }
        // coalgebra intertwining: (F (x) F) o Delta_bar = Delta o F,
        // with Delta_bar the letter unshuffle on bar words
        TensorElement lhs;
        for (int mask = 0; mask < (1 << len); ++mask) {
            BarWord in, out;
            for (int i = 0; i < len; ++i)
                (mask & (1 << i) ? in : out).push_back(w[i]);
            lhs = tensor_add(lhs, tensor_of(fac.f_map(in), fac.f_map(out), Rational(1)));
        }
        if (!(lhs == U.coproduct(fw))) {
            detail = "coalgebra intertwining failed at length " + std::to_string(len);
            return false;
        }
        // antipode intertwining: F(S_bar(w)) = S*(F(w)),
        // S_bar(x1...xn) = (-1)^n xn...x1
        BarWord rev(w.rbegin(), w.rend());
        UEAElement lhs_s = uea_scale(Rational(len % 2 == 0 ? 1 : -1), fac.f_map(rev));
        if (!(lhs_s == lift.star_antipode(fw))) {
            detail = "antipode intertwining failed at length " + std::to_string(len);
            return false;
        }
    }
    // two-letter closed form on gl(2)
    {
        auto L2 = LieAlgebraSpec::gl(2);
        auto R2 = triangular_r_gl(2);
        Uea U2(L2, 4);
        PostLieLift lift2(U2, post_lie_from_r(L2, R2));
        RMatrixFactorization fac2(lift2, R2);
        auto [rp2, rm2] = r_plus_minus(R2);
        GVector a = basis_vec(4, 2), b = basis_vec(4, 1);  // E21, E12
        UEAElement expected =
            uea_add(U2.mul(U2.from_gvector(a), U2.from_gvector(b)),
                    U2.from_gvector(L2.bracket(rm2.apply(a), b)));
        if (!(fac2.f_map({a, b}) == expected)) {
            detail = "two-letter closed form failed";
            return false;
        }
    }
    auto words = monomials_up_to(3, 0, 2);
    for (const auto& ma : words)
        for (const auto& mb : words) {
            if (ma.size() + mb.size() > 4) continue;
            if (!(fac.star_via_f(mono(ma), mono(mb)) == lift.star(mono(ma), mono(mb)))) {
                detail = "star through F disagrees with the direct star";
                return false;
            }
        }
    for (const auto& m : monomials_up_to(3, 0, 4)) {
        UEAElement a = mono(m);
        if (!(fac.recompose(fac.decompose(a)) == a)) {
            detail = "decomposition does not reconstruct";
            return false;
        }
    }
    return true;
}

bool symbolic_factorization_suite(std::string& detail) {
    auto L = LieAlgebraSpec::gl(2);
    auto R = triangular_r_gl(2);
    auto P = post_lie_from_r(L, R);
    Uea U(L, 6);
    PostLieLift lift(U, P);
    RMatrixFactorization fac(lift, R);
    if (!fac.r_involutive()) {
        detail = "fixture R is not involutive";
        return false;
    }
    GVector x = {Rational(1), Rational(-1), Rational(2), Rational(1)};
    auto rep1 = fac.check_grouplike_star_factorization(x, 6);
    if (!rep1.ok()) {
        detail = rep1.failures.front();
        return false;
    }
    MagnusSeries ms = chi_series(lift, x, 6);
    auto rep2 = fac.check_exp_factorization(ms);
    if (!rep2.ok()) {
        detail = rep2.failures.front();
        return false;
    }
    return true;
}

bool numeric_factorization_suite(std::string& detail) {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DMat x(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) x.at(i, j) = dist(rng);
    const int N = 4;
    auto rows = matrix_factor_check(x, {0.25, 0.125, 0.0625}, N);
    for (const auto& row : rows) {
        if (!row.has_ratio) continue;
        if (row.ratio < 22.0 || row.ratio > 45.0) {
            detail = "error ratio " + std::to_string(row.ratio) + " outside [22, 45]";
            return false;
        }
    }
    DMat tri(3);
    tri.at(0, 1) = 0.7;
    tri.at(0, 2) = -0.3;
    tri.at(1, 2) = 1.1;
    if (matrix_factor_error(tri, 0.5, N) > 1e-10) {
        detail = "strictly triangular input not factored exactly";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion("axiom suite: gl(2)/gl(3), triangular splitting", 5.0, axiom_suite);
    criterion("Hopf suite: sl(2) monomials to degree 4", 30.0, hopf_suite);
    criterion("lifted-product suite: sl(2), total degree 5", 300.0, lifted_product_suite);
    criterion("partition suite: Bell counts, phi routes, inverse", 300.0, partition_suite);
    criterion("Magnus suite: gl(2) to order 6", 300.0, magnus_suite);
    criterion("isomorphism suite: F map, words to length 4", 300.0, f_map_suite);
    criterion("symbolic factorization: gl(2) to order 6", 300.0, symbolic_factorization_suite);
    criterion("numeric factorization: gl(3), seeded random", 10.0, numeric_factorization_suite);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
