#include <cmath>

#include "doctest.h"
#include "lagcalc/norms.hpp"

using namespace lagcalc;

TEST_CASE("norm_b") {
    // ||z^n / n!||_a = a^{-n}
    for (int n : {0, 3, 10, 30}) {
        const PolyQ f = PolyQ::monomial(n, Rational(1) / factorial<Rational>(n));
        CHECK(norm_b_value(f, Rational(1, 2)) == pow_int(Rational(2), n));
        CHECK(norm_b_value(f, Rational(2)) == pow_int(Rational(1, 2), n));
    }
    CHECK(norm_b(Poly({-3.5}), 0.7).value == doctest::Approx(3.5));
    // truncated e^z at b = 2: sup of 2^{-k}, attained at k = 0
    std::vector<double> e(41);
    e[0] = 1.0;
    for (int k = 1; k <= 40; ++k) e[k] = e[k - 1] / double(k);
    CHECK(norm_b(Poly(e), 2.0).value == doctest::Approx(1.0));
    CHECK_THROWS_AS(norm_b(Poly({1.0}), 0.0), std::domain_error);
}

TEST_CASE("norm monotonicity in b") {
    const Poly f({0.2, -1.0, 3.0, 0.5, -0.1});
    double prev = norm_b(f, 0.25).value;
    for (double b : {0.5, 1.0, 2.0, 4.0}) {
        const double cur = norm_b(f, b).value;
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("mu_k") {
    const Form f(1.0, 0, 0.0, {0.5, 0.25});
    CHECK(mu_k(f, 1) == doctest::Approx(0.75));
    CHECK(mu_k(f, 2) == doctest::Approx(0.3125));
    CHECK(mu_k(Form(1.0, 0, 0.0, {}), 3) == 0.0);
}

TEST_CASE("sequence_bound") {
    const std::vector<Form> seq = {Form(0.5, 0, 0.3, {0.2}), Form(-0.9, 1, 0.0, {0.5, 0.25})};
    CHECK(sequence_bound(seq, 1.0, 1.0, 1, std::exp(1.0)) == doctest::Approx(std::exp(-1.0)));
    CHECK(sequence_bound(seq, 1.0, 2.0, 2, 2.0) == doctest::Approx(2.25));
    const std::vector<Form> flat = {Form(0.5, 0, 0.3, {0.2})};
    CHECK(sequence_bound(flat, 1.0, 3.0, 0, 2.0) == doctest::Approx(3.0));
    // hypothesis violations are reported with the offending member
    CHECK_THROWS_WITH_AS(sequence_bound({Form(1.0, 0, 2.0, {})}, 1.0, 1.0, 0, 2.0),
                         doctest::Contains("mu_1"), std::domain_error);
    CHECK_THROWS_WITH_AS(sequence_bound({Form(5.0, 0, 0.1, {})}, 1.0, 1.0, 0, 2.0),
                         doctest::Contains("|C|"), std::domain_error);
    CHECK_THROWS_WITH_AS(sequence_bound({Form(1.0, 3, 0.1, {})}, 1.0, 2.0, 1, 2.0),
                         doctest::Contains("l exceeds"), std::domain_error);
}

TEST_CASE("sequence bound dominates member norms") {
    const std::vector<Form> seq = {Form(0.5, 0, 0.3, {0.2}), Form(-0.9, 1, 0.1, {0.5, 0.25}),
                                   Form(1.0, 2, 0.0, {0.9})};
    const double a = 1.0, b = 2.5;
    const double K = sequence_bound(seq, a, 1.0, 2, b);
    for (const Form& f : seq) {
        const NormReport nr = laguerre_norm_b(f, b, 60);
        CHECK(nr.value + nr.tail_bound <= K * (1.0 + 1e-12));
    }
}

TEST_CASE("sandwich_constant") {
    CHECK(sandwich_constant(2.0, 1.0) == doctest::Approx(std::exp(1.0) / 2.0));
    CHECK(sandwich_constant(2.0, 2.0 - 1e-9) == doctest::Approx(1.0));
    // scan oracle for b = 3, eps = 1
    double best = 1.0;
    for (int k = 1; k <= 200; ++k)
        best = std::max(best, std::exp(std::lgamma(k + 1.0) - k * std::log(double(k)) +
                                       k * (1.0 + std::log(2.0 / 3.0))));
    CHECK(sandwich_constant(3.0, 1.0) == doctest::Approx(best));
    CHECK_THROWS_AS(sandwich_constant(1.0, 2.0), std::domain_error);
}

TEST_CASE("norm_N_laguerre") {
    // pure exponential: N_c = 1 for c > a
    CHECK(norm_N_laguerre(Form(1.0, 0, 0.7, {}), 1.0) == doctest::Approx(1.0));
    // 1 + beta z
    const double beta = 2.0;
    CHECK(norm_N_laguerre(Form(1.0, 0, 0.0, {beta}), 2.5) == doctest::Approx(1.0));
    const double c = 0.8;
    CHECK(norm_N_laguerre(Form(1.0, 0, 0.0, {beta}), c) ==
          doctest::Approx((beta / c) * std::exp(c / beta - 1.0)).epsilon(1e-10));
    // (1+z)^2 at c = 1: r_c = 1, N = 4/e
    CHECK(norm_N_laguerre(Form(1.0, 0, 0.0, {1.0, 1.0}), 1.0) ==
          doctest::Approx(4.0 / std::exp(1.0)).epsilon(1e-10));
    CHECK_THROWS_WITH_AS(norm_N_laguerre(Form(1.0, 0, 1.0, {}), 0.5),
                         doctest::Contains("outside A_alpha"), std::domain_error);
    CHECK_THROWS_AS(norm_N_laguerre(Form(-1.0, 0, 0.0, {}), 1.0), std::domain_error);
}

TEST_CASE("norm_N_laguerre with z^l prefactor matches a direct scan") {
    const Form f(1.3, 2, 0.4, {0.8, 0.2});
    const double c = 1.7;
    const double n = norm_N_laguerre(f, c);
    double scan = 0.0;
    for (double r = 0.0; r <= 200.0; r += 1e-3) {
        double v = f.C * std::pow(r, f.l) * std::exp((f.alpha - c) * r);
        for (double b : f.betas) v *= 1.0 + b * r;
        scan = std::max(scan, v);
    }
    CHECK(n == doctest::Approx(scan).epsilon(1e-6));
    CHECK(n >= scan * (1.0 - 1e-12));
}

TEST_CASE("operator_bound_check") {
    const Poly f({0.5, -1.0, 2.0});
    // phi == 1: identity
    auto rep = operator_bound_check(Poly({1.0}), f, 0.5, 0.5, 1.0);
    CHECK(rep.satisfied);
    CHECK(rep.c == doctest::Approx(0.5 / 0.75));
    // constant f
    rep = operator_bound_check(Poly({0.3, 0.7}), Poly({2.0}), 0.5, 0.5, 2.0);
    CHECK(rep.satisfied);
    CHECK_THROWS_WITH_AS(operator_bound_check(Poly({1.0}), f, 2.0, 0.5, 1.0),
                         doctest::Contains("composition domain"), std::domain_error);
}
