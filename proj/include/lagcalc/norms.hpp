#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagcalc/laguerre_form.hpp"
#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/polynomial.hpp"
#include "lagcalc/scalar.hpp"

namespace lagcalc {

// ||f||_b = sup_k b^{-k} |f^{(k)}(0)| = sup_k b^{-k} k! |c_k|.  Exact and
// finite for polynomials.
template <class Scalar>
Scalar norm_b_value(const Polynomial<Scalar>& f, const Scalar& b) {
    if (!(b > Scalar{0})) throw std::domain_error("norm_b: requires b > 0");
    Scalar best{0};
    Scalar kfact{1};
    Scalar binv_k{1};  // b^{-k}
    for (int k = 0; k <= f.degree(); ++k) {
        if (k > 0) {
            kfact *= Scalar(k);
            binv_k /= b;
        }
        Scalar term = kfact * f.coeff(k) * binv_k;
        if (term < Scalar{0}) term = -term;
        if (term > best) best = term;
    }
    return best;
}

struct NormReport {
    double b = 0.0;
    double value = 0.0;
    int truncation_degree = 0;
    double tail_bound = 0.0;  // 0 for polynomials; the true norm lies in [value, value + tail_bound]
};

inline NormReport norm_b(const Poly& f, double b) {
    NormReport r;
    r.b = b;
    r.value = norm_b_value(f, b);
    r.truncation_degree = std::max(f.degree(), 0);
    r.tail_bound = 0.0;
    return r;
}

// ||.||_b of a Laguerre form through its degree-N truncation, with the tail
// majorized by |C| (k/a)^l (a/b)^k, a = |alpha| + mu_1.
inline NormReport laguerre_norm_b(const Form& form, double b, int N) {
    NormReport r;
    r.b = b;
    r.truncation_degree = N;
    r.value = norm_b_value(expand(form, N), b);
    const double a_eff = std::abs(form.alpha) + form.mu(1);
    if (a_eff == 0.0) {
        r.tail_bound = 0.0;  // pure C z^l: exact once N >= l
        return r;
    }
    if (b <= a_eff) {
        r.tail_bound = std::numeric_limits<double>::infinity();
        return r;
    }
    const double absC = std::abs(form.C);
    auto term = [&](int k) {
        return absC * std::pow(double(k) / a_eff, form.l) * std::pow(a_eff / b, k);
    };
    double best = term(N + 1);
    for (int k = N + 2; k < N + 100000; ++k) {
        const double t = term(k);
        if (t <= best) break;  // unimodal in k
        best = t;
    }
    r.tail_bound = best;
    return r;
}

// mu_k(form) = sum_j beta_j^k
inline double mu_k(const Form& form, int k) { return form.mu(k); }

// The uniform bound K = sup_k C (k/a)^l (a/b)^k over a parameter sequence,
// after checking the three hypotheses member by member.
inline double sequence_bound(const std::vector<Form>& params, double a, double C, int l, double b) {
    if (!(b > a)) throw std::domain_error("sequence_bound: requires b > a");
    for (std::size_t n = 0; n < params.size(); ++n) {
        const Form& f = params[n];
        if (std::abs(f.alpha) + f.mu(1) > a)
            throw std::domain_error("sequence_bound: |alpha| + mu_1 exceeds a at member " + std::to_string(n));
        if (std::abs(f.C) > C)
            throw std::domain_error("sequence_bound: |C| exceeds the bound at member " + std::to_string(n));
        if (f.l > l)
            throw std::domain_error("sequence_bound: l exceeds the bound at member " + std::to_string(n));
    }
    if (l == 0) return C;  // decaying geometric; sup at k = 0
    const double k_star = double(l) / std::log(b / a);
    const int k_hi = std::max(2, static_cast<int>(std::ceil(k_star)) + 2);
    double best = 0.0;
    for (int k = 0; k <= k_hi; ++k) {
        const double t = (k == 0) ? 0.0 : C * std::pow(double(k) / a, l) * std::pow(a / b, k);
        best = std::max(best, t);
    }
    return best;
}

// C(b, eps) = sup_k C_k with C_0 = 1 and C_k = (k!/k^k) (1 - eps/b)^k e^k.
inline double sandwich_constant(double b, double eps) {
    if (!(eps > 0.0 && eps < b)) throw std::domain_error("sandwich_constant: requires 0 < eps < b");
    const double log_q = 1.0 + std::log(1.0 - eps / b);
    double best = 1.0;
    int decreasing = 0;
    double prev = 1.0;
    for (int k = 1; decreasing < 10; ++k) {
        const double ck = std::exp(std::lgamma(double(k) + 1.0) - double(k) * std::log(double(k)) +
                                   double(k) * log_q);
        best = std::max(best, ck);
        decreasing = (ck < prev) ? decreasing + 1 : 0;
        prev = ck;
        if (k > 100000) break;
    }
    return best;
}

// N_c of an L^+ form with C > 0: sup_r C r^l e^{(alpha - c) r} prod (1 + beta_j r),
// located through the stationarity equation c = alpha + l/r + sum beta_j / (1 + beta_j r).
inline double norm_N_laguerre(const Form& form, double c) {
    if (!(form.C > 0.0) || form.alpha < 0.0)
        throw std::domain_error("norm_N_laguerre: requires an L+ form with positive C");
    if (!(c > form.alpha))
        throw std::domain_error("norm_N_laguerre: outside A_alpha range (c <= alpha)");
    const double mu1 = form.mu(1);
    auto value_at = [&](double r) {
        double v = form.C * std::exp((form.alpha - c) * r);
        if (form.l > 0) v *= std::pow(r, form.l);
        for (double beta : form.betas) v *= 1.0 + beta * r;
        return v;
    };
    if (form.l == 0) {
        if (c >= form.alpha + mu1) return form.C;  // sup at r = 0
        // solve c = alpha + sum beta_j/(1 + beta_j r); RHS strictly decreasing
        auto phi = [&](double r) {
            double s = form.alpha;
            for (double beta : form.betas) s += beta / (1.0 + beta * r);
            return s;
        };
        double hi = 1.0;
        while (phi(hi) > c) hi *= 2.0;
        double lo = 0.0;
        while (hi - lo > 1e-12 * (1.0 + hi)) {
            const double mid = 0.5 * (lo + hi);
            (phi(mid) > c ? lo : hi) = mid;
        }
        return value_at(0.5 * (lo + hi));
    }
    // l > 0: augmented equation c = alpha + l/r + sum beta_j/(1 + beta_j r)
    auto phi = [&](double r) {
        double s = form.alpha + double(form.l) / r;
        for (double beta : form.betas) s += beta / (1.0 + beta * r);
        return s;
    };
    double lo = double(form.l) / (c - form.alpha);
    while (phi(lo) < c) lo *= 0.5;
    double hi = lo;
    while (phi(hi) > c) hi *= 2.0;
    while (hi - lo > 1e-12 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        (phi(mid) > c ? lo : hi) = mid;
    }
    return value_at(0.5 * (lo + hi));
}

struct OperatorBoundReport {
    double c = 0.0;
    double norm_g_c = 0.0;
    double bound = 0.0;
    bool satisfied = false;
};

// ||phi(Delta_theta) f||_c <= (1 - ab)^{-theta} ||phi||_a ||f||_b with
// c = b / (1 - ab).
inline OperatorBoundReport operator_bound_check(const Poly& phi_symbol, const Poly& f, double a,
                                               double b, double theta) {
    if (!(a * b < 1.0)) throw std::domain_error("operator_bound_check: outside the composition domain (ab >= 1)");
    OperatorBoundReport r;
    r.c = b / (1.0 - a * b);
    const Poly g = apply_phi_of_delta(OperatorSpec<double>::from_symbol(phi_symbol, a), theta, f);
    r.norm_g_c = norm_b_value(g, r.c);
    r.bound = std::pow(1.0 - a * b, -theta) * norm_b_value(phi_symbol, a) * norm_b_value(f, b);
    r.satisfied = r.norm_g_c <= r.bound * (1.0 + 1e-12);
    return r;
}

}  // namespace lagcalc
