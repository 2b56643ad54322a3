#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/polynomial.hpp"
#include "lagcalc/scalar.hpp"

namespace lagcalc {

// w_theta(z) = sum_k z^k / (k! Gamma(theta + k)).  Entire; for theta = 0 the
// k = 0 term is dropped by the 1/Gamma(0) = 0 convention.
//
// Two evaluation regimes.  The Taylor series is accurate while the largest
// term (~ e^{2 sqrt|z|}) does not dwarf the result (~ e^{2 Re sqrt z}); once
// that gap exceeds ~e^13 the cancellation eats the answer, and we switch to
// the Bessel connection w_theta(z) = (sqrt z)^{1-theta} I_{theta-1}(2 sqrt z)
// evaluated by the large-argument compound asymptotic expansion, which is
// cancellation-free and accurate to ~e^{-2|w|} there (|w| >= 13 whenever the
// switch triggers).
inline std::complex<double> w_theta(double theta, const std::complex<double>& z,
                                    double tol = 1e-16) {
    if (theta < 0.0) throw std::domain_error("w_theta: requires theta >= 0");
    if (theta == 0.0) {
        // w_0(z) = z w_2(z), term by term
        if (z == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
        return z * w_theta(2.0, z, tol);
    }
    if (z.imag() == 0.0 && z.real() < 0.0) {
        // real negative axis: w_theta(-y) = y^{(1-theta)/2} J_{theta-1}(2 sqrt y).
        // The library Bessel J keeps full absolute accuracy where both the
        // Taylor series and the compound asymptotic are at their worst.
        const double y = -z.real();
        const double x = 2.0 * std::sqrt(y);
        if (x >= 10.0) {
            const double nu = theta - 1.0;
            double jv;
            if (nu < 0.0) {
                const double mu = -nu;  // J_{-mu} = cos(mu pi) J_mu - sin(mu pi) Y_mu
                jv = std::cos(mu * M_PI) * std::cyl_bessel_j(mu, x) -
                     std::sin(mu * M_PI) * std::cyl_neumann(mu, x);
            } else {
                jv = std::cyl_bessel_j(nu, x);
            }
            return {std::pow(y, 0.5 * (1.0 - theta)) * jv, 0.0};
        }
    }
    const std::complex<double> sq = std::sqrt(z);
    const double gap = 2.0 * (std::abs(sq) - sq.real());
    if (gap <= 13.0 && 2.0 * std::abs(sq) < 700.0) {
        std::complex<double> term{1.0 / std::tgamma(theta), 0.0}, sum{0.0, 0.0};
        double max_abs = 0.0;
        int k = 0;
        for (;;) {
            sum += term;
            max_abs = std::max(max_abs, std::abs(term));
            const double ratio = std::abs(z) / (double(k + 1) * (theta + double(k)));
            if (ratio < 0.5 && std::abs(term) < tol * std::max(1.0, max_abs)) break;
            term *= z / (double(k + 1) * (theta + double(k)));
            ++k;
            if (k > 100000) throw std::runtime_error("w_theta: series did not converge");
        }
        return sum;
    }
    // I_nu(w) ~ [e^w S(-w) + e^{-w +- i pi (nu + 1/2)} S(w)] / sqrt(2 pi w),
    // S(w) = sum_k a_k(nu) / w^k, a_k = prod_j (4 nu^2 - (2j-1)^2) / (8^k k!),
    // truncated at the smallest term; sign chosen by the half-plane of w.
    const double nu = theta - 1.0;
    const std::complex<double> w = 2.0 * sq;
    std::complex<double> s1{1.0, 0.0}, s2{1.0, 0.0}, wk{1.0, 0.0};
    double ak = 1.0, prev_mag = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        ak *= (4.0 * nu * nu - odd * odd) / (8.0 * k);
        wk *= w;
        const double mag = std::abs(ak) / std::abs(wk);
        if (mag >= prev_mag) break;
        prev_mag = mag;
        const std::complex<double> t = ak / wk;
        s1 += (k % 2 != 0) ? -t : t;
        s2 += t;
        if (mag < 1e-18) break;
    }
    const double sigma = (w.imag() >= 0.0) ? 1.0 : -1.0;
    const std::complex<double> bessel_i =
        (std::exp(w) * s1 + std::exp(-w + std::complex<double>(0.0, sigma * M_PI * (nu + 0.5))) * s2) /
        std::sqrt(2.0 * M_PI * w);
    return std::pow(sq, 1.0 - theta) * bessel_i;
}

// K_theta(z, s) = e^{-z} w_theta(z s)
inline std::complex<double> kernel_K(double theta, const std::complex<double>& z, double s) {
    return std::exp(-z) * w_theta(theta, z * s);
}

// Gauss rule for the weight s^{theta-1} e^{-s} on [0, inf).
struct QuadratureRule {
    double theta = 1.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    int order() const { return static_cast<int>(nodes.size()); }
};

namespace detail_quad {

// Orthonormal-polynomial recurrence for the weight s^{theta-1} e^{-s}:
// b_k p_{k+1} = (x - a_k) p_k - b_{k-1} p_{k-1}, a_k = 2k + theta,
// b_k = sqrt((k+1)(k+theta)).  Values grow like e^{x/2}, so the iterates
// are rescaled on the fly and the accumulated scale tracked in log form.
struct OrthoEval {
    double pQ = 0.0;      // p_Q(x), in scaled units
    double dpQ = 0.0;     // p_Q'(x), same scaling (ratio pQ/dpQ is exact)
    double log_sum = 0.0; // log of sum_{k<Q} p_k(x)^2, true scale
};

inline OrthoEval ortho_eval(double theta, int Q, double x) {
    const double p0 = std::exp(-0.5 * std::lgamma(theta));
    double pm = 0.0, p = p0, dpm = 0.0, dp = 0.0;
    double sum = p0 * p0, log_scale = 0.0;
    for (int k = 0; k < Q; ++k) {
        const double a = 2.0 * k + theta;
        const double b = std::sqrt(double(k + 1) * (double(k) + theta));
        const double bm = (k > 0) ? std::sqrt(double(k) * (double(k) + theta - 1.0)) : 0.0;
        const double pn = ((x - a) * p - bm * pm) / b;
        const double dpn = (p + (x - a) * dp - bm * dpm) / b;
        pm = p;
        p = pn;
        dpm = dp;
        dp = dpn;
        if (k + 1 < Q) sum += p * p;
        if (std::abs(p) > 1e150) {
            const double f = 1e-150;
            pm *= f;
            p *= f;
            dpm *= f;
            dp *= f;
            sum *= f * f;
            log_scale -= std::log(f);
        }
    }
    OrthoEval ev;
    ev.pQ = p;
    ev.dpQ = dp;
    ev.log_sum = std::log(sum) + 2.0 * log_scale;
    return ev;
}

}  // namespace detail_quad

// Golub-Welsch nodes from the Jacobi matrix of the generalized Laguerre
// weight (diagonal 2k + theta, off-diagonal sqrt(k (k + theta - 1))),
// polished by Newton on the orthonormal recurrence.  Weights come from the
// Christoffel function 1 / sum p_k^2, which keeps relative accuracy even
// where the eigenvector route loses the tiny large-node weights to the
// solver's absolute error floor.
inline QuadratureRule gauss_laguerre_rule(double theta, int Q) {
    if (!(theta > 0.0)) throw std::domain_error("gauss_laguerre_rule: requires theta > 0");
    if (Q < 1) throw std::domain_error("gauss_laguerre_rule: requires Q >= 1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(Q, Q);
    for (int k = 0; k < Q; ++k) {
        J(k, k) = 2.0 * k + theta;
        if (k > 0) {
            const double off = std::sqrt(double(k) * (double(k) + theta - 1.0));
            J(k, k - 1) = off;
            J(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_laguerre_rule: eigen decomposition failed");
    QuadratureRule rule;
    rule.theta = theta;
    rule.nodes.resize(Q);
    rule.weights.resize(Q);
    for (int i = 0; i < Q; ++i) {
        double x = es.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            const auto ev = detail_quad::ortho_eval(theta, Q, x);
            if (ev.dpQ == 0.0) break;
            const double step = ev.pQ / ev.dpQ;
            x -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = std::exp(-detail_quad::ortho_eval(theta, Q, x).log_sum);
    }
    return rule;
}

// exp(a Delta_theta) f at z through the integral representation:
// e^{-z/a} * integral of s^{theta-1} e^{-s} w_theta(s z / a) f(a s) ds.
inline std::complex<double> exp_delta_integral(double a, double theta,
                                               const std::function<std::complex<double>(double)>& f,
                                               const std::complex<double>& z,
                                               const QuadratureRule& rule) {
    if (!(a > 0.0)) throw std::domain_error("exp_delta_integral: requires a > 0");
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = rule.nodes[i];
        sum += rule.weights[i] * w_theta(theta, s * z / a) * f(a * s);
    }
    return std::exp(-z / a) * sum;
}

// Doubling refinement: start at Q, stop when two successive orders agree to
// rel_tol or the order cap is reached.
inline std::complex<double> exp_delta_integral_adaptive(double a, double theta,
                                                        const std::function<std::complex<double>(double)>& f,
                                                        const std::complex<double>& z, int Q = 80,
                                                        double rel_tol = 1e-10, int Q_max = 320) {
    std::complex<double> prev = exp_delta_integral(a, theta, f, z, gauss_laguerre_rule(theta, Q));
    while (Q * 2 <= Q_max) {
        Q *= 2;
        const std::complex<double> cur = exp_delta_integral(a, theta, f, z, gauss_laguerre_rule(theta, Q));
        if (std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

// exp(a Delta_theta) on e^{uz} g(z) with u < 0: the factored result lies in
// the L^- class; evaluated through the operation rule.
inline std::complex<double> exp_delta_L_minus(double a, double theta, double u, const Poly& g,
                                              const std::complex<double>& z) {
    if (!(u < 0.0)) throw std::domain_error("exp_delta_L_minus: requires u < 0");
    return operation_rule(a, u, theta, g).eval(z);
}

}  // namespace lagcalc
