#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "lagcalc/evolution.hpp"
#include "lagcalc/laguerre_form.hpp"
#include "lagcalc/norms.hpp"
#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/polynomial.hpp"
#include "lagcalc/quadrature.hpp"
#include "lagcalc/scalar.hpp"
#include "lagcalc/zero_geometry.hpp"

namespace lagcalc::verify {

struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    double max_err = 0.0;
    bool pass() const { return failures == 0; }
    std::string detail;
};

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const int d = deg(rng);
    std::vector<double> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0.0) c.back() = 1.0;
    return Poly(std::move(c));
}

// polynomial with real nonpositive roots: roots -exp(U[-3,3]) plus a zero
// root count in {0, 1, 2}
inline Poly random_P_plus(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> zero_count(0, 2);
    std::uniform_real_distribution<double> log_root(-3.0, 3.0);
    const int d = deg(rng);
    const int zeros = std::min(zero_count(rng), d);
    Poly p = Poly::monomial(zeros);
    for (int i = zeros; i < d; ++i)
        p = p * Poly({std::exp(log_root(rng)), 1.0});  // factor (r + z), r > 0
    return p;
}

inline PolyQ random_poly_q(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-16, 16);
    const int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = Rational(num(rng), 16);
    if (c.back() == Rational{0}) c.back() = Rational{1};
    return PolyQ(std::move(c));
}

inline double coeff_distance(const Poly& a, const Poly& b) {
    double err = 0.0;
    const int deg = std::max(a.degree(), b.degree());
    for (int k = 0; k <= deg; ++k) {
        const double x = a.coeff(k), y = b.coeff(k);
        err = std::max(err, std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300}));
    }
    return err;
}

// criterion: laguerre_poly vs laguerre_rodrigues, exact for integer theta,
// rel err <= 1e-10 floating
inline SuiteResult suite_laguerre_oracle() {
    SuiteResult r{.name = "laguerre-oracle"};
    for (int theta_int : {1, 2}) {
        for (int n = 0; n <= 15; ++n) {
            ++r.trials;
            const PolyQ a = laguerre_poly(n, Rational(theta_int));
            const PolyQ b = laguerre_rodrigues(n, Rational(theta_int));
            if (!(a == b)) ++r.failures;
        }
    }
    for (double theta : {0.5, 3.5}) {
        for (int n = 0; n <= 15; ++n) {
            ++r.trials;
            const double err = coeff_distance(laguerre_poly(n, theta), laguerre_rodrigues(n, theta));
            r.max_err = std::max(r.max_err, err);
            if (err > 1e-10) ++r.failures;
        }
    }
    return r;
}

// criterion: the group law exp(a) exp(a') = exp(a + a'), exact in rational
// mode at theta = 1, rel err <= 1e-9 floating
inline SuiteResult suite_semigroup(int trials = 200, std::uint64_t seed = 0) {
    SuiteResult r{.name = "semigroup"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> th(0.0, 3.0);
    std::uniform_int_distribution<int> sixteenth(-16, 16);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        if (t % 2 == 0) {
            const PolyQ f = random_poly_q(rng, 12);
            const Rational a(sixteenth(rng), 16), a2(sixteenth(rng), 16);
            const Rational theta{1};
            const PolyQ two_step = exp_delta_closed(a, theta, exp_delta_closed(a2, theta, f));
            const PolyQ one_step = exp_delta_closed(Rational(a + a2), theta, f);
            if (!(two_step == one_step)) ++r.failures;
        } else {
            const Poly fd = random_poly(rng, 12);
            const double a = amp(rng), a2 = amp(rng), theta = th(rng);
            // extended precision for the composition: the intermediate
            // polynomial can be orders of magnitude larger than both
            // endpoints, and rounding it to double costs more than 1e-9
            using PolyL = Polynomial<long double>;
            const PolyL f(std::vector<long double>(fd.coeffs().begin(), fd.coeffs().end()));
            const PolyL two_step = exp_delta_closed<long double>(a, theta, exp_delta_closed<long double>(a2, theta, f));
            const PolyL one_step = exp_delta_closed<long double>(a + a2, theta, f);
            long double scale = 1.0L;
            for (int k = 0; k <= one_step.degree(); ++k)
                scale = std::max(scale, std::abs(one_step.coeff(k)));
            double err = 0.0;
            for (int k = 0; k <= std::max(two_step.degree(), one_step.degree()); ++k)
                err = std::max(err, double(std::abs(two_step.coeff(k) - one_step.coeff(k)) / scale));
            r.max_err = std::max(r.max_err, err);
            if (err > 1e-9) ++r.failures;
        }
    }
    return r;
}

// criterion: quadrature route vs closed form on monomials, rel err <= 1e-8
// at Q = 80
inline SuiteResult suite_integral_vs_closed() {
    SuiteResult r{.name = "integral-vs-closed"};
    const std::vector<std::complex<double>> grid = {
        {0.0, 0.0}, {1.0, 0.0},  {-1.0, 0.0}, {2.5, 0.0},  {-2.5, 0.0},
        {4.0, 0.0}, {-3.5, 0.0}, {2.0, 2.0},  {-2.0, 2.0}, {0.0, 3.0}};
    for (double theta : {0.5, 1.0, 2.0, 4.0}) {
        const QuadratureRule rule = gauss_laguerre_rule(theta, 80);
        for (double a : {0.25, 0.5, 1.0}) {
            for (int m = 0; m <= 10; ++m) {
                const Poly mono = Poly::monomial(m);
                const Poly closed = exp_delta_closed(a, theta, mono);
                for (const auto& z : grid) {
                    ++r.trials;
                    const std::complex<double> ref = closed.eval(z);
                    const std::complex<double> quad = exp_delta_integral(
                        a, theta, [&](double s) { return mono.eval(std::complex<double>(s, 0.0)); },
                        z, rule);
                    double scale = 0.0, pw = 1.0;
                    for (int k = 0; k <= closed.degree(); ++k) {
                        scale += std::abs(closed.coeff(k)) * pw;
                        pw *= std::max(1.0, std::abs(z));
                    }
                    const double denom = std::max(std::abs(ref), 1e-4 * scale);
                    const double err = std::abs(quad - ref) / denom;
                    r.max_err = std::max(r.max_err, err);
                    if (err > 1e-8) ++r.failures;
                }
            }
        }
    }
    return r;
}

// criterion: (kappa + Delta_theta) preserves real nonpositive zeros
inline SuiteResult suite_lemma_preservation(int trials = 1000, std::uint64_t seed = 0) {
    SuiteResult r{.name = "lemma-preservation"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> par(0.0, 3.0);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        const Poly p = random_P_plus(rng, 12);
        const PreservationReport rep = preservation_trial(p, par(rng), par(rng));
        r.max_err = std::max(r.max_err, rep.max_imag / rep.scale);
        if (!rep.pass) ++r.failures;
    }
    return r;
}

// criterion: staged phi(Delta_theta) preserves real nonpositive zeros
inline SuiteResult suite_theorem_preservation(int trials = 1000, std::uint64_t seed = 0) {
    SuiteResult r{.name = "theorem-preservation"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> th(0.0, 3.0);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        const Poly phi = random_P_plus(rng, 8);
        const Poly f = random_P_plus(rng, 8);
        const PreservationReport rep = phi_preservation_trial(phi, f, th(rng));
        if (!rep.vacuous) r.max_err = std::max(r.max_err, rep.max_imag / rep.scale);
        if (!rep.pass) ++r.failures;
    }
    return r;
}

// criterion: ||phi(Delta_theta) f||_c <= (1-ab)^{-theta} ||phi||_a ||f||_b
inline SuiteResult suite_operator_bound(int trials = 500, std::uint64_t seed = 0) {
    SuiteResult r{.name = "operator-bound"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ab(0.1, 0.9);
    std::uniform_real_distribution<double> th(0.0, 3.0);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        const Poly phi = random_poly(rng, 6);
        const Poly f = random_poly(rng, 10);
        const OperatorBoundReport rep = operator_bound_check(phi, f, ab(rng), ab(rng), th(rng));
        if (rep.bound > 0.0) r.max_err = std::max(r.max_err, rep.norm_g_c / rep.bound);
        if (!rep.satisfied) ++r.failures;
    }
    return r;
}

// criterion: ||z^n / n!||_a = a^{-n} exactly, in the exact-rational mode
inline SuiteResult suite_norm_identity() {
    SuiteResult r{.name = "norm-identity"};
    const std::vector<Rational> as = {Rational(1, 2), Rational(1), Rational(2)};
    for (const auto& a : as) {
        for (int n = 0; n <= 30; ++n) {
            ++r.trials;
            const PolyQ f = PolyQ::monomial(n, Rational(1) / factorial<Rational>(n));
            if (!(norm_b_value(f, a) == pow_int(Rational(1) / a, n))) ++r.failures;
        }
    }
    return r;
}

// criterion: N_b(f) <= ||f||_b <= C(b, eps) N_{b-eps}(f) on sampled L+ forms
inline SuiteResult suite_sandwich(int trials = 50, std::uint64_t seed = 0) {
    SuiteResult r{.name = "sandwich"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<int> nbeta(0, 3);
    std::uniform_int_distribution<int> lgen(0, 2);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        std::vector<double> betas(static_cast<std::size_t>(nbeta(rng)));
        for (auto& b : betas) b = uni(rng);
        const Form form(0.5 + uni(rng), lgen(rng), uni(rng), betas);
        const double a_eff = form.alpha + form.mu(1);
        const double b = a_eff + 0.3 + 2.2 * uni(rng);
        const double eps = (0.2 + 0.7 * uni(rng)) * std::min(b - form.alpha - 1e-3, b - a_eff);
        const NormReport nb = laguerre_norm_b(form, b, 60);
        const double lower = norm_N_laguerre(form, b);
        const double upper = sandwich_constant(b, eps) * norm_N_laguerre(form, b - eps);
        const bool ok = lower <= (nb.value + nb.tail_bound) * (1.0 + 1e-9) &&
                        nb.value + nb.tail_bound <= upper * (1.0 + 1e-9);
        if (!ok) ++r.failures;
        if (upper > 0.0) r.max_err = std::max(r.max_err, (nb.value + nb.tail_bound) / upper);
    }
    return r;
}

// criterion: the Gamma convolution identity, relative residual <= 1e-10
inline SuiteResult suite_vandermonde(int trials = 200, std::uint64_t seed = 0) {
    SuiteResult r{.name = "vandermonde"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> zr(0.5, 5.0);
    std::uniform_int_distribution<int> mk(0, 12);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        const std::complex<double> z =
            (t % 5 == 4) ? std::complex<double>(1.5, 0.5) : std::complex<double>(zr(rng), 0.0);
        const double res = vandermonde_residual(z, mk(rng), mk(rng));
        r.max_err = std::max(r.max_err, res);
        if (res > 1e-10) ++r.failures;
    }
    return r;
}

// criterion: the evolution solves df/dt = theta df/dz + z d2f/dz2 with
// residual <= 1e-8 on a 10x10 (t, z) grid for five initial data
inline SuiteResult suite_pde() {
    SuiteResult r{.name = "pde-residual"};
    const std::vector<std::pair<InitialData, double>> cases = {
        {{0.0, Poly({1.0, 2.0, 1.0})}, 1.0},             // (1+z)^2, eps = 0
        {{0.0, Poly({0.0, 1.0, 0.0, 0.5})}, 0.5},        // z + z^3/2
        {{0.0, Poly({1.0, 1.0, 0.5, 0.25, 0.1})}, 2.0},  // deg 4
        {{1.0, Poly({1.0})}, 1.0},                       // e^{-z}
        {{0.5, Poly({1.0, 1.0})}, 1.5},                  // e^{-z/2} (1+z)
    };
    for (const auto& [data, theta] : cases) {
        for (int i = 0; i < 10; ++i) {
            const double t = 0.3 + 0.1 * double(i);
            for (int j = 0; j < 10; ++j) {
                ++r.trials;
                const double ang = 2.0 * M_PI * double(j) / 10.0;
                const std::complex<double> z =
                    (0.2 + 0.08 * double(j)) * std::complex<double>(std::cos(ang), std::sin(ang));
                const double res = pde_residual(data, theta, t, z, 1e-4);
                r.max_err = std::max(r.max_err, res);
                if (res > 1e-8) ++r.failures;
            }
        }
    }
    return r;
}

// criterion: decay of the solution for g = e^{-z}, theta = 1, R = 1
inline SuiteResult suite_stabilization() {
    SuiteResult r{.name = "stabilization"};
    const InitialData data{1.0, Poly({1.0})};
    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(1.0 + 0.45 * double(i));  // 1 .. 10
    for (double t : {20.0, 50.0, 100.0, 300.0, 1000.0}) times.push_back(t);
    const StabilizationProfile prof = stabilization_profile(data, 1.0, times, 1.0);
    ++r.trials;
    const double final_sup = prof.values.back().second;
    r.max_err = final_sup;
    if (!(final_sup <= 1.1e-3)) ++r.failures;
    ++r.trials;
    if (prof.monotone_from_index != 0) ++r.failures;
    r.detail = "sup at t=1000: " + std::to_string(final_sup);
    return r;
}

// criterion: sum_i w_i s_i^j = Gamma(theta + j) for j <= 2Q - 1, checked in
// log space to keep s^j in range
inline SuiteResult suite_quadrature_moments() {
    SuiteResult r{.name = "quadrature-moments"};
    for (int Q : {16, 80}) {
        for (double theta : {0.5, 1.0, 2.0, 4.0}) {
            const QuadratureRule rule = gauss_laguerre_rule(theta, Q);
            std::vector<double> logw(rule.weights.size()), logs(rule.nodes.size());
            for (std::size_t i = 0; i < logw.size(); ++i) {
                logw[i] = std::log(rule.weights[i]);
                logs[i] = std::log(rule.nodes[i]);
            }
            for (int j = 0; j <= 2 * Q - 1; ++j) {
                ++r.trials;
                double peak = -1e308;
                for (std::size_t i = 0; i < logw.size(); ++i)
                    peak = std::max(peak, logw[i] + double(j) * logs[i]);
                double sum = 0.0;
                for (std::size_t i = 0; i < logw.size(); ++i)
                    sum += std::exp(logw[i] + double(j) * logs[i] - peak);
                const double log_moment = peak + std::log(sum);
                const double err = std::abs(std::expm1(log_moment - std::lgamma(theta + double(j))));
                r.max_err = std::max(r.max_err, err);
                if (err > 1e-10) ++r.failures;
            }
        }
    }
    return r;
}

}  // namespace lagcalc::verify
