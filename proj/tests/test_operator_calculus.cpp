#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/polynomial.hpp"
#include "lagcalc/scalar.hpp"

using namespace lagcalc;
using cplx = std::complex<double>;

TEST_CASE("apply_delta") {
    CHECK(apply_delta(1.0, Poly({1.0, 2.0, 1.0})) == Poly({2.0, 4.0}));
    CHECK(apply_delta(3.7, Poly({5.0})).is_zero());
    CHECK(apply_delta(2.0, Poly::monomial(3)) == Poly({0.0, 0.0, 12.0}));
    // degree drops by exactly one on nonconstant input
    for (int d = 1; d <= 8; ++d)
        CHECK(apply_delta(0.5, Poly::monomial(d) + Poly({1.0})).degree() == d - 1);
}

TEST_CASE("apply_phi_of_delta") {
    const double theta = 0.8;
    // phi = exp: z -> z + theta
    const auto exp_spec = OperatorSpec<double>::exponential(1.0);
    const Poly g = apply_phi_of_delta(exp_spec, theta, Poly({0.0, 1.0}));
    CHECK(g.coeff(0) == doctest::Approx(theta));
    CHECK(g.coeff(1) == doctest::Approx(1.0));

    // phi == 1 is the identity operator
    const auto one = OperatorSpec<double>::from_symbol(Poly({1.0}));
    const Poly f({0.3, -1.2, 0.7, 2.0});
    CHECK(apply_phi_of_delta(one, theta, f) == f);

    // phi(w) = w reduces to apply_delta
    const auto w = OperatorSpec<double>::from_symbol(Poly({0.0, 1.0}));
    CHECK(apply_phi_of_delta(w, 1.0, Poly({1.0, 2.0, 1.0})) == Poly({2.0, 4.0}));
}

TEST_CASE("apply_phi_of_delta is linear and never raises degree") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> pc(5), fc(9), gc(7);
        for (auto& x : pc) x = u(rng);
        for (auto& x : fc) x = u(rng);
        for (auto& x : gc) x = u(rng);
        const auto phi = OperatorSpec<double>::from_symbol(Poly(pc));
        const Poly f(fc), g(gc);
        const double a = 1.3, b = -0.4, theta = 0.25 + u(rng) * 0.25 + 0.5;
        const Poly lhs = apply_phi_of_delta(phi, theta, f * a + g * b);
        const Poly rhs = apply_phi_of_delta(phi, theta, f) * a + apply_phi_of_delta(phi, theta, g) * b;
        for (int k = 0; k <= std::max(lhs.degree(), rhs.degree()); ++k)
            CHECK(lhs.coeff(k) == doctest::Approx(rhs.coeff(k)).epsilon(1e-12));
        CHECK(apply_phi_of_delta(phi, theta, f).degree() <= f.degree());
    }
}

TEST_CASE("exp_delta_closed") {
    const Poly f({0.4, -0.3, 2.0, 1.0});
    CHECK(exp_delta_closed(0.0, 1.3, f) == f);

    const double a = 0.7, theta = 1.9;
    const Poly g = exp_delta_closed(a, theta, Poly::monomial(2));
    CHECK(g.coeff(2) == doctest::Approx(1.0));
    CHECK(g.coeff(1) == doctest::Approx(2.0 * a * (theta + 1.0)));
    CHECK(g.coeff(0) == doctest::Approx(a * a * theta * (theta + 1.0)));

    const Poly lin = exp_delta_closed(a, theta, Poly({0.0, 1.0}));
    CHECK(lin.coeff(0) == doctest::Approx(a * theta));
    CHECK(lin.coeff(1) == doctest::Approx(1.0));
}

TEST_CASE("Laguerre polynomials via the semigroup") {
    CHECK(laguerre_poly(0, 1.0) == Poly({1.0}));
    const double theta = 0.6;
    const Poly l1 = laguerre_poly(1, theta);
    CHECK(l1.coeff(0) == doctest::Approx(-theta));
    CHECK(l1.coeff(1) == doctest::Approx(1.0));
    const Poly l2 = laguerre_poly(2, theta);
    CHECK(l2.coeff(0) == doctest::Approx(theta * (theta + 1.0)));
    CHECK(l2.coeff(1) == doctest::Approx(-2.0 * (theta + 1.0)));
    CHECK(l2.coeff(2) == doctest::Approx(1.0));
}

TEST_CASE("Rodrigues route") {
    CHECK(laguerre_rodrigues(0, Rational(2)) == PolyQ({Rational(1)}));
    const PolyQ l1 = laguerre_rodrigues(1, Rational(3));
    CHECK(l1 == PolyQ({Rational(-3), Rational(1)}));
    CHECK(laguerre_rodrigues(2, Rational(1)) == PolyQ({Rational(2), Rational(-4), Rational(1)}));
    CHECK_THROWS_AS(laguerre_rodrigues(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(laguerre_rodrigues(2, -1.0), std::domain_error);
    // agreement with the semigroup route at fractional theta
    for (double theta : {0.5, 2.0, 3.5}) {
        for (int n = 0; n <= 12; ++n) {
            const Poly a = laguerre_poly(n, theta);
            const Poly b = laguerre_rodrigues(n, theta);
            for (int k = 0; k <= n; ++k)
                CHECK(a.coeff(k) == doctest::Approx(b.coeff(k)).epsilon(1e-11));
        }
    }
}

TEST_CASE("operation rule") {
    const Poly g({0.5, 1.0, -0.3});
    SUBCASE("u = 0 reduces to the plain semigroup") {
        const auto r = operation_rule(0.8, 0.0, 1.2, g);
        CHECK(r.prefactor == doctest::Approx(1.0));
        CHECK(r.exp_coefficient == doctest::Approx(0.0));
        CHECK(r.inner == exp_delta_closed(0.8, 1.2, g));
    }
    SUBCASE("constant g, u = -1, a = 1, theta = 1") {
        const auto r = operation_rule(1.0, -1.0, 1.0, Poly({1.0}));
        CHECK(r.prefactor == doctest::Approx(0.5));
        CHECK(r.exp_coefficient == doctest::Approx(-0.5));
        CHECK(r.inner == Poly({1.0}));
    }
    SUBCASE("constant g stays constant for any admissible parameters") {
        const auto r = operation_rule(0.4, 0.9, 2.3, Poly({3.0}));
        CHECK(r.inner == Poly({3.0}));
        CHECK(r.prefactor == doctest::Approx(std::pow(1.0 - 0.9 * 0.4, -2.3)));
    }
    SUBCASE("domain guard") {
        CHECK_THROWS_AS(operation_rule(1.0, 1.0, 1.0, g), std::domain_error);
        CHECK_THROWS_AS(operation_rule(-0.5, 0.1, 1.0, g), std::domain_error);
    }
}

TEST_CASE("operation rule reassembles to the semigroup on the truncated series") {
    // exp(a Delta) [e^{uz} g] vs prefactor e^{cz} h(z), compared coefficient-wise
    const double a = 0.5, u = -0.7, theta = 1.4;
    const Poly g({1.0, 0.5, 0.25});
    const int N = 40;
    auto exp_series = [&](double c) {
        std::vector<double> e(N + 1);
        e[0] = 1.0;
        for (int k = 1; k <= N; ++k) e[k] = e[k - 1] * c / double(k);
        return Poly(e);
    };
    const Poly lhs = exp_delta_closed(a, theta, (exp_series(u) * g).truncated(N));
    const auto r = operation_rule(a, u, theta, g);
    const Poly rhs = (exp_series(r.exp_coefficient) * r.inner * r.prefactor).truncated(N);
    double scale = 1.0;
    for (int k = 0; k <= rhs.degree(); ++k) scale = std::max(scale, std::abs(rhs.coeff(k)));
    // agreement holds up to the truncation order minus the inner degree
    for (int k = 0; k <= N - g.degree() - 2; ++k)
        CHECK(std::abs(lhs.coeff(k) - rhs.coeff(k)) <= 1e-8 * scale);
}

TEST_CASE("vandermonde residual") {
    CHECK(vandermonde_residual(cplx(1.5, 0.0), 0, 7) == doctest::Approx(0.0));
    CHECK(vandermonde_residual(cplx(2.0, 0.0), 1, 1) <= 1e-14);
    CHECK(vandermonde_residual(cplx(1.5, 0.0), 2, 3) <= 1e-12);
    CHECK_THROWS_AS(vandermonde_residual(cplx(-2.0 + 1e-9, 0.0), 3, 3), std::domain_error);
}
