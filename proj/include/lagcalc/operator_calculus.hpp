#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "lagcalc/polynomial.hpp"
#include "lagcalc/scalar.hpp"

namespace lagcalc {

// (Delta_theta f)(z) = theta f'(z) + z f''(z); lowers degree by one.
template <class Scalar>
Polynomial<Scalar> apply_delta(const Scalar& theta, const Polynomial<Scalar>& f) {
    const Polynomial<Scalar> d1 = f.derivative();
    const Polynomial<Scalar> d2 = d1.derivative();
    return d1 * theta + Polynomial<Scalar>(std::vector<Scalar>{Scalar{0}, Scalar{1}}) * d2;
}

// The symbol phi given by its Taylor coefficients phi^{(k)}(0)/k!, together
// with its exponential-type budget.  For polynomial arguments every sum below
// is finite, so a coefficient generator is all that is needed.
template <class Scalar>
struct OperatorSpec {
    std::function<Scalar(int)> phi_coeff;
    double type_bound_a = 0.0;

    static OperatorSpec from_symbol(Polynomial<Scalar> symbol, double type_bound = 0.0) {
        return OperatorSpec{[s = std::move(symbol)](int k) { return s.coeff(k); }, type_bound};
    }
    // phi(w) = exp(a w)
    static OperatorSpec exponential(Scalar a) {
        return OperatorSpec{[a = std::move(a)](int k) {
                                Scalar c{1};
                                for (int i = 1; i <= k; ++i) c *= a / Scalar(i);
                                return c;
                            },
                            std::abs(to_double(a))};
    }
};

// g = phi(Delta_theta) f for polynomial f: the coefficient of z^n in g is
// sum_k phi_k f_{n+k} q_theta^{(n+k,k)}, a finite sum since q vanishes for
// k > deg f - n.
template <class Scalar>
Polynomial<Scalar> apply_phi_of_delta(const OperatorSpec<Scalar>& phi, const Scalar& theta,
                                      const Polynomial<Scalar>& f) {
    if (f.is_zero()) return {};
    const int deg = f.degree();
    std::vector<Scalar> g(static_cast<std::size_t>(deg) + 1, Scalar{0});
    for (int n = 0; n <= deg; ++n)
        for (int k = 0; n + k <= deg; ++k)
            g[n] += phi.phi_coeff(k) * f.coeff(n + k) * q_coefficient(theta, n + k, k);
    return Polynomial<Scalar>(std::move(g));
}

// exp(a Delta_theta) z^m = sum_n (a^n/n!) q_theta^{(m,n)} z^{m-n}, extended
// linearly.  Valid for every real a on polynomials; a < 0 yields the Laguerre
// polynomials.
template <class Scalar>
Polynomial<Scalar> exp_delta_closed(const Scalar& a, const Scalar& theta, const Polynomial<Scalar>& f) {
    if (f.is_zero()) return {};
    // accumulate in extended precision for the floating instantiation; the
    // alternating a^n/n! terms cancel enough to matter at the 1e-9 level
    using Acc = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
    const int deg = f.degree();
    const Acc aa = Acc(a);
    const Acc th = Acc(theta);
    std::vector<Acc> g(static_cast<std::size_t>(deg) + 1, Acc{0});
    for (int m = 0; m <= deg; ++m) {
        const Acc cm = Acc(f.coeff(m));
        if (cm == Acc{0}) continue;
        Acc an_over_n{1};  // a^n / n!
        for (int n = 0; n <= m; ++n) {
            if (n > 0) an_over_n *= aa / Acc(n);
            g[m - n] += cm * an_over_n * q_coefficient(th, m, n);
        }
    }
    std::vector<Scalar> out(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) out[k] = Scalar(g[k]);
    return Polynomial<Scalar>(std::move(out));
}

// Generalized Laguerre polynomial via the semigroup: exp(-Delta_theta) z^n.
template <class Scalar>
Polynomial<Scalar> laguerre_poly(int n, const Scalar& theta) {
    return exp_delta_closed(Scalar{-1}, theta, Polynomial<Scalar>::monomial(n));
}

// Independent Rodrigues-formula route: (-1)^n z^{-theta+1} e^z D^n(z^{theta+n-1} e^{-z}),
// by exact Leibniz bookkeeping on terms c z^{theta+n-1-j} e^{-z}.
template <class Scalar>
Polynomial<Scalar> laguerre_rodrigues(int n, const Scalar& theta) {
    if (!(theta > Scalar{0}))
        throw std::domain_error("laguerre_rodrigues: requires theta > 0");
    const Scalar p0 = theta + Scalar(n - 1);  // exponent of the undifferentiated term
    std::vector<Scalar> c{Scalar{1}};         // c[j] multiplies z^{p0-j} e^{-z}
    for (int step = 0; step < n; ++step) {
        std::vector<Scalar> next(c.size() + 1, Scalar{0});
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j] * (p0 - Scalar(int(j)));  // power rule
            next[j] -= c[j];                              // derivative of e^{-z}
        }
        c = std::move(next);
    }
    // divide out z^{theta-1} e^{-z}; exponent p0 - j becomes n - j
    std::vector<Scalar> out(static_cast<std::size_t>(n) + 1, Scalar{0});
    const Scalar sign = (n % 2 == 0) ? Scalar{1} : Scalar{-1};
    for (std::size_t j = 0; j < c.size(); ++j) out[n - int(j)] = sign * c[j];
    return Polynomial<Scalar>(std::move(out));
}

// exp(a Delta_theta) applied to e^{uz} g(z), factored as
// prefactor * exp(exp_coefficient * z) * inner(z).
struct ExpFactoredResult {
    double prefactor = 1.0;
    double exp_coefficient = 0.0;
    Poly inner;

    std::complex<double> eval(const std::complex<double>& z) const {
        return prefactor * std::exp(exp_coefficient * z) * inner.eval(z);
    }
};

inline ExpFactoredResult operation_rule(double a, double u, double theta, const Poly& g) {
    if (!(a > 0.0)) throw std::domain_error("operation_rule: requires a > 0");
    const double s = 1.0 - u * a;
    if (!(s > 0.0)) throw std::domain_error("operation_rule: outside the operation-rule domain (ua >= 1)");
    ExpFactoredResult r;
    r.prefactor = std::pow(s, -theta);
    r.exp_coefficient = u / s;
    r.inner = exp_delta_closed(a * s, theta, g.scale_argument(1.0 / (s * s)));
    return r;
}

// Relative residual of the convolution identity
//   Gamma(z+m+k) / (Gamma(z+m) Gamma(z+k)) = sum_n C(m,n) C(k,n) n! / Gamma(z+n).
// Both sides are scaled by Gamma(z), which turns every Gamma into a rising
// factorial and leaves the relative residual unchanged.
inline double vandermonde_residual(const std::complex<double>& z, int m, int k) {
    const int span = m + k;
    for (int i = 0; i <= span; ++i)
        if (std::abs(z + std::complex<double>(double(i), 0.0)) < 1e-6)
            throw std::domain_error("vandermonde_residual: ill-conditioned evaluation near a Gamma pole");

    auto rising = [&](const std::complex<double>& x, int n) {
        std::complex<double> p{1.0, 0.0};
        for (int i = 0; i < n; ++i) p *= x + double(i);
        return p;
    };
    const std::complex<double> lhs = rising(z + double(m), k) / rising(z, k);
    std::complex<double> rhs{0.0, 0.0};
    double binom_m = 1.0, binom_k = 1.0, nfact = 1.0;
    for (int n = 0; n <= std::min(m, k); ++n) {
        if (n > 0) {
            binom_m *= double(m - n + 1) / double(n);
            binom_k *= double(k - n + 1) / double(n);
            nfact *= double(n);
        }
        rhs += binom_m * binom_k * nfact / rising(z, n);
    }
    return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace lagcalc
