#include <cmath>
#include <complex>

#include "doctest.h"
#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/quadrature.hpp"

using namespace lagcalc;
using cplx = std::complex<double>;

TEST_CASE("w_theta values") {
    CHECK(w_theta(2.5, cplx(0.0, 0.0)).real() == doctest::Approx(1.0 / std::tgamma(2.5)));
    CHECK(w_theta(0.0, cplx(0.0, 0.0)) == cplx(0.0, 0.0));
    // w_1(1) = sum 1/(k!)^2 = I_0(2)
    CHECK(w_theta(1.0, cplx(1.0, 0.0)).real() == doctest::Approx(2.2795853).epsilon(1e-7));
    CHECK_THROWS_AS(w_theta(-0.5, cplx(1.0, 0.0)), std::domain_error);
}

TEST_CASE("kernel K_theta") {
    const cplx z(0.7, 0.2);
    CHECK(kernel_K(1.5, z, 2.0) == std::exp(-z) * w_theta(1.5, z * 2.0));
}

TEST_CASE("one-point rules") {
    const QuadratureRule r1 = gauss_laguerre_rule(1.0, 1);
    CHECK(r1.nodes[0] == doctest::Approx(1.0));
    CHECK(r1.weights[0] == doctest::Approx(1.0));
    const QuadratureRule r2 = gauss_laguerre_rule(2.0, 1);
    CHECK(r2.nodes[0] == doctest::Approx(2.0));
    CHECK(r2.weights[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(gauss_laguerre_rule(0.0, 4), std::domain_error);
    CHECK_THROWS_AS(gauss_laguerre_rule(1.0, 0), std::domain_error);
}

TEST_CASE("rule invariants") {
    for (double theta : {0.5, 1.0, 3.0}) {
        const QuadratureRule r = gauss_laguerre_rule(theta, 16);
        double sum = 0.0;
        for (std::size_t i = 0; i < r.weights.size(); ++i) {
            CHECK(r.nodes[i] > 0.0);
            CHECK(r.weights[i] > 0.0);
            sum += r.weights[i];
        }
        CHECK(sum == doctest::Approx(std::tgamma(theta)).epsilon(1e-12));
        // third moment
        double m3 = 0.0;
        for (std::size_t i = 0; i < r.weights.size(); ++i)
            m3 += r.weights[i] * r.nodes[i] * r.nodes[i] * r.nodes[i];
        CHECK(m3 == doctest::Approx(std::tgamma(theta + 3.0)).epsilon(1e-12));
    }
}

TEST_CASE("integral representation against the closed form") {
    auto one = [](double) { return cplx(1.0, 0.0); };
    const QuadratureRule rule = gauss_laguerre_rule(1.5, 80);
    // constants are fixed points
    CHECK(exp_delta_integral(0.7, 1.5, one, cplx(0.0, 0.0), rule).real() == doctest::Approx(1.0));
    CHECK(std::abs(exp_delta_integral(0.7, 1.5, one, cplx(1.2, 0.4), rule) - cplx(1.0, 0.0)) <= 1e-10);

    // small a: f = z goes to z + a theta
    const double a = 1e-2, theta = 2.0;
    auto lin = [](double s) { return cplx(s, 0.0); };
    const QuadratureRule rule2 = gauss_laguerre_rule(theta, 80);
    const cplx z(0.7, 0.0);
    CHECK(std::abs(exp_delta_integral(a, theta, lin, z, rule2) - (z + a * theta)) <=
          1e-6 * std::abs(z + a * theta));

    // monomial oracle
    for (int m : {3, 7}) {
        const Poly mono = Poly::monomial(m);
        const Poly closed = exp_delta_closed(0.5, theta, mono);
        for (const cplx& zz : {cplx(1.0, 0.0), cplx(-2.0, 1.0), cplx(0.0, 3.0)}) {
            const cplx ref = closed.eval(zz);
            const cplx quad = exp_delta_integral(
                0.5, theta, [&](double s) { return mono.eval(cplx(s, 0.0)); }, zz, rule2);
            CHECK(std::abs(quad - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("adaptive refinement agrees with the fixed rule") {
    const Poly mono = Poly::monomial(5);
    const cplx z(1.3, -0.4);
    const cplx ref = exp_delta_closed(0.5, 1.0, mono).eval(z);
    const cplx v = exp_delta_integral_adaptive(
        0.5, 1.0, [&](double s) { return mono.eval(cplx(s, 0.0)); }, z);
    CHECK(std::abs(v - ref) <= 1e-9 * std::abs(ref));
}

TEST_CASE("L- extension") {
    // g == 1, u = -1, a = 1, theta = 1, z = 0 -> 1/2
    CHECK(exp_delta_L_minus(1.0, 1.0, -1.0, Poly({1.0}), cplx(0.0, 0.0)).real() ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(exp_delta_L_minus(1.0, 1.0, 0.5, Poly({1.0}), cplx(0.0, 0.0)),
                    std::domain_error);

    // two independent routes: operation rule vs direct quadrature on e^{uz} g
    const double a = 0.8, u = -0.6, theta = 1.3;
    const Poly g({1.0, 1.0});
    const QuadratureRule rule = gauss_laguerre_rule(theta, 160);
    for (const cplx& z : {cplx(0.0, 0.0), cplx(1.0, 0.5), cplx(-0.7, 0.0)}) {
        const cplx via_rule = exp_delta_L_minus(a, theta, u, g, z);
        const cplx via_quad = exp_delta_integral(
            a, theta, [&](double s) { return std::exp(u * s) * g.eval(cplx(s, 0.0)); }, z, rule);
        CHECK(std::abs(via_rule - via_quad) <= 1e-8 * std::max(1.0, std::abs(via_rule)));
    }

    // u -> 0- limit matches the closed form
    const cplx z(0.9, 0.1);
    const cplx limit = exp_delta_closed(a, theta, g).eval(z);
    CHECK(std::abs(exp_delta_L_minus(a, theta, -1e-9, g, z) - limit) <= 1e-7 * std::abs(limit));
}

TEST_CASE("Appell partial sums converge to the kernel") {
    const double theta = 1.0;
    std::vector<Poly> lag;
    for (int n = 0; n <= 40; ++n) lag.push_back(laguerre_poly(n, theta));
    for (double z : {-3.0, -1.0, 0.5, 3.0}) {
        for (double s : {0.3, 1.0, 3.0}) {
            double sum = 0.0, zn_over_n = 1.0;
            for (int n = 0; n <= 40; ++n) {
                if (n > 0) zn_over_n *= z / double(n);
                sum += zn_over_n * lag[n].eval(s) / std::tgamma(theta + double(n));
            }
            const double ref = kernel_K(theta, cplx(z, 0.0), s).real();
            CHECK(std::abs(sum - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
        }
    }
}
