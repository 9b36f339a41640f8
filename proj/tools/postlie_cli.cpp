// Command-line front end: validation, Magnus coefficients, factorization
// checks, partition listings and the cross-module identity suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "postlie/algebra_io.hpp"
#include "postlie/factorization.hpp"
#include "postlie/matrix_numerics.hpp"

using namespace postlie;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string algebra_path;
    int trunc = 4;
    std::string mode = "exact";
    std::string format = "text";
    unsigned long long seed = 0;
    bool check = false;
};

std::string gvec_to_string(const LieAlgebraSpec& L, const GVector& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < L.dim(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(v[i]) << "*" << L.labels()[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

json gvec_to_json(const GVector& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(rational_to_string(c));
    return arr;
}

AlgebraInput load_algebra_or_exit(const Options& opt) {
    if (opt.algebra_path.empty()) {
        std::fprintf(stderr, "error: --algebra PATH is required for this command\n");
        std::exit(kExitInputError);
    }
    try {
        return load_algebra_file(opt.algebra_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::exit(kExitInputError);
    }
}

GVector parse_coords(const LieAlgebraSpec& L, const std::string& text) {
    GVector v = gvec_zero(L.dim());
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= L.dim()) throw std::invalid_argument("too many coordinates");
        v[i++] = parse_rational(item);
    }
    if (i != L.dim()) throw std::invalid_argument("expected " + std::to_string(L.dim()) +
                                                  " coordinates, got " + std::to_string(i));
    return v;
}

std::vector<int> parse_indices(const LieAlgebraSpec& L, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int i = std::stoi(item);
        if (i < 0 || i >= L.dim()) throw std::invalid_argument("basis index out of range");
        out.push_back(i);
    }
    if (out.empty()) throw std::invalid_argument("empty word");
    return out;
}

int report_result(const Options& opt, const Report& rep, const char* what) {
    if (opt.format == "json") {
        json out;
        out["check"] = what;
        out["ok"] = rep.ok();
        out["failures"] = rep.failures;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        if (rep.ok()) {
            std::printf("PASS  %s\n", what);
        } else {
            std::printf("FAIL  %s\n", what);
            for (const auto& f : rep.failures) std::printf("      %s\n", f.c_str());
        }
    }
    return rep.ok() ? kExitOk : kExitMathFailure;
}

int cmd_validate(const Options& opt) {
    AlgebraInput in = load_algebra_or_exit(opt);
    Report rep = in.L.validate();
    Report mc = check_mcybe(in.L, in.R, in.theta);
    for (auto& f : mc.failures) rep.fail(std::move(f));
    if (mc.ok()) {
        Report pl = validate_post_lie(in.L, post_lie_from_r(in.L, in.R));
        for (auto& f : pl.failures) rep.fail(std::move(f));
    }
    return report_result(opt, rep, "algebra, r-matrix and post-Lie axioms");
}

int cmd_chi(const Options& opt, const std::string& x_text) {
    AlgebraInput in = load_algebra_or_exit(opt);
    GVector x;
    try {
        x = parse_coords(in.L, x_text);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    Uea U(in.L, opt.trunc);
    PostLieLift lift(U, post_lie_from_r(in.L, in.R));
    MagnusSeries ms;
    try {
        ms = chi_series(lift, x, opt.trunc);
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMathFailure;
    }
    if (opt.format == "json") {
        json out;
        out["x"] = gvec_to_json(x);
        json chis = json::array();
        for (int n = 1; n <= ms.order(); ++n) chis.push_back(gvec_to_json(ms.chi[n]));
        out["chi"] = chis;
        if (opt.check) {
            Report rep = check_exp_identity(lift, ms);
            UeaSeries resid = ode_residual(lift, ms);
            for (int n = 0; n < ms.order(); ++n)
                if (!resid.c[n].is_zero())
                    rep.fail("differential-equation residual nonzero at order " +
                             std::to_string(n));
            out["check_ok"] = rep.ok();
            out["failures"] = rep.failures;
            std::printf("%s\n", out.dump(2).c_str());
            return rep.ok() ? kExitOk : kExitMathFailure;
        }
        std::printf("%s\n", out.dump(2).c_str());
        return kExitOk;
    }
    for (int n = 1; n <= ms.order(); ++n)
        std::printf("chi_%d = %s\n", n, gvec_to_string(in.L, ms.chi[n]).c_str());
    if (opt.check) {
        Report rep = check_exp_identity(lift, ms);
        UeaSeries resid = ode_residual(lift, ms);
        for (int n = 0; n < ms.order(); ++n)
            if (!resid.c[n].is_zero())
                rep.fail("differential-equation residual nonzero at order " +
                         std::to_string(n));
        return report_result(opt, rep, "exponential identity and differential equation");
    }
    return kExitOk;
}

int cmd_factorize(const Options& opt, const std::string& matrix_text,
                  const std::string& t_text) {
    if (opt.mode != "float") {
        std::fprintf(stderr, "error: factorize requires --mode float\n");
        return kExitInputError;
    }
    DMat x(0);
    std::vector<double> ts;
    try {
        json jm = json::parse(matrix_text);
        int n = static_cast<int>(jm.size());
        x = DMat(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(jm[i].size()) != n)
                throw std::invalid_argument("matrix must be square");
            for (int j = 0; j < n; ++j) x.at(i, j) = jm[i][j].get<double>();
        }
        std::stringstream ss(t_text);
        std::string item;
        while (std::getline(ss, item, ',')) ts.push_back(std::stod(item));
        if (ts.empty()) throw std::invalid_argument("empty t list");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    auto rows = matrix_factor_check(x, ts, opt.trunc);
    double lo = std::pow(2.0, opt.trunc + 1) * 0.7;
    double hi = std::pow(2.0, opt.trunc + 1) * 1.4;
    bool ok = true;
    json jrows = json::array();
    for (const auto& row : rows) {
        json jr;
        jr["t"] = row.t;
        jr["error"] = row.error;
        if (row.has_ratio) {
            jr["ratio"] = row.ratio;
            if (row.ratio < lo || row.ratio > hi) ok = false;
        }
        jrows.push_back(jr);
        if (opt.format == "text") {
            if (row.has_ratio)
                std::printf("t = %-10g error = %-14.6e ratio = %.3f\n", row.t, row.error,
                            row.ratio);
            else
                std::printf("t = %-10g error = %-14.6e\n", row.t, row.error);
        }
    }
    if (opt.format == "json") {
        json out;
        out["rows"] = jrows;
        out["ok"] = ok;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("%s  error ratios within [%.1f, %.1f]\n", ok ? "PASS" : "FAIL", lo, hi);
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_partitions(const Options& opt, int n) {
    if (n < 1 || n > 12) {
        std::fprintf(stderr, "error: n must be in 1..12\n");
        return kExitInputError;
    }
    auto parts = enumerate_partitions(n);
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& p : parts) out.push_back(p.blocks);
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        for (const auto& p : parts) std::printf("%s\n", p.to_string().c_str());
        std::printf("%zu partitions\n", parts.size());
    }
    return kExitOk;
}

int cmd_star(const Options& opt, const std::string& a_text, const std::string& b_text) {
    AlgebraInput in = load_algebra_or_exit(opt);
    Uea U(in.L, opt.trunc);
    PostLieLift lift(U, post_lie_from_r(in.L, in.R));
    std::vector<int> wa, wb;
    try {
        wa = parse_indices(in.L, a_text);
        wb = parse_indices(in.L, b_text);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    UEAElement a = U.normalize_word(wa);
    UEAElement b = U.normalize_word(wb);
    UEAElement prod = lift.star(a, b);
    if (opt.format == "json") {
        json out;
        out["a"] = U.to_string(a);
        out["b"] = U.to_string(b);
        out["a_star_b"] = U.to_string(prod);
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("(%s) * (%s) = %s\n", U.to_string(a).c_str(), U.to_string(b).c_str(),
                    U.to_string(prod).c_str());
    }
    return kExitOk;
}

// Cross-module invariants on the loaded algebra, with seeded random vectors.
int cmd_identities(const Options& opt) {
    AlgebraInput in = load_algebra_or_exit(opt);
    const int d = in.L.dim();
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_vec = [&]() {
        GVector v = gvec_zero(d);
        for (int i = 0; i < d; ++i) v[i] = coeff(rng);
        return v;
    };
    Report rep = in.L.validate();
    Report mc = check_mcybe(in.L, in.R, in.theta);
    for (auto& f : mc.failures) rep.fail(std::move(f));
    if (!rep.ok()) return report_result(opt, rep, "identity suite");

    auto P = post_lie_from_r(in.L, in.R);
    Report pl = validate_post_lie(in.L, P);
    for (auto& f : pl.failures) rep.fail(std::move(f));
    const int trunc = std::max(opt.trunc, 4);
    Uea U(in.L, trunc);
    PostLieLift lift(U, P);

    // Hopf and star identities on random degree-1 elements
    std::vector<GVector> xs = {random_vec(), random_vec(), random_vec()};
    UEAElement a = U.from_gvector(xs[0]);
    UEAElement b = U.from_gvector(xs[1]);
    UEAElement c = U.from_gvector(xs[2]);
    if (!(lift.star(lift.star(a, b), c) == lift.star(a, lift.star(b, c))))
        rep.fail("star product not associative on sampled elements");
    if (!(lift.triangle(a, lift.triangle(b, c)) == lift.triangle(lift.star(a, b), c)))
        rep.fail("A |> (B |> C) != (A * B) |> C on sampled elements");
    BarWord word = {xs[0], xs[1], xs[2]};
    UEAElement viaP = phi(lift, word);
    if (!(viaP == phi_recursive(lift, word)) || !(viaP == lift.star_word(word)))
        rep.fail("phi routes disagree on the sampled word");
    if (!(phi_on_bar(lift, phi_inverse(lift, viaP)) == viaP))
        rep.fail("phi o phi_inverse != id on the sampled word");

    GVector x = random_vec();
    try {
        MagnusSeries ms = chi_series(lift, x, std::min(trunc, 4));
        Report forms = check_chi_r_matrix_forms(in.L, in.R, ms);
        for (auto& f : forms.failures) rep.fail(std::move(f));
        Report expid = check_exp_identity(lift, ms);
        for (auto& f : expid.failures) rep.fail(std::move(f));
        RMatrixFactorization fac(lift, in.R);
        if (!(fac.f_map(word) == viaP)) rep.fail("F != phi on the sampled word");
        if (fac.r_involutive()) {
            Report grp = fac.check_grouplike_star_factorization(x, std::min(trunc, 4));
            for (auto& f : grp.failures) rep.fail(std::move(f));
            Report exf = fac.check_exp_factorization(ms);
            for (auto& f : exf.failures) rep.fail(std::move(f));
        }
    } catch (const std::logic_error& e) {
        rep.fail(e.what());
    }
    return report_result(opt, rep, "identity suite");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"post-Lie algebra engine: validation, Magnus expansion and "
                 "r-matrix factorization"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--algebra", opt.algebra_path, "algebra description file (JSON)");
    app.add_option("--trunc", opt.trunc, "truncation / expansion order")->check(CLI::Range(1, 12));
    app.add_option("--mode", opt.mode, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_flag("--check", opt.check, "run the associated verification checks");

    auto* validate = app.add_subcommand("validate", "check all axioms of the algebra file");

    std::string x_text;
    auto* chi = app.add_subcommand("chi", "Magnus expansion coefficients of x");
    chi->add_option("--x", x_text, "coordinates of x, comma separated rationals")->required();

    std::string matrix_text, t_text = "0.25,0.125,0.0625";
    auto* factorize = app.add_subcommand("factorize", "numeric factorization error table");
    factorize->add_option("--matrix", matrix_text, "square matrix as JSON rows")->required();
    factorize->add_option("--t", t_text, "comma-separated list of t values");

    int part_n = 0;
    auto* partitions = app.add_subcommand("partitions", "canonical set partitions of {1..n}");
    partitions->add_option("n", part_n, "set size")->required();

    std::string a_text, b_text;
    auto* star = app.add_subcommand("star", "star product of two basis words");
    star->add_option("--a", a_text, "left word, comma-separated basis indices")->required();
    star->add_option("--b", b_text, "right word, comma-separated basis indices")->required();

    auto* identities = app.add_subcommand("identities", "run the cross-module identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (chi->parsed()) return cmd_chi(opt, x_text);
        if (factorize->parsed()) return cmd_factorize(opt, matrix_text, t_text);
        if (partitions->parsed()) return cmd_partitions(opt, part_n);
        if (star->parsed()) return cmd_star(opt, a_text, b_text);
        if (identities->parsed()) return cmd_identities(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    return kExitInputError;
}
