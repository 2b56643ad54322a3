#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/polynomial.hpp"

namespace lagcalc {

// Initial condition g(z) = exp(-epsilon z) h(z)
struct InitialData {
    double epsilon = 0.0;
    Poly h;
};

// Solution of the heat-type problem at time t, kept in factored form
// prefactor * exp(exp_coefficient * z) * inner(z).
struct SolutionFrame {
    double t = 0.0;
    double prefactor = 1.0;
    double exp_coefficient = 0.0;
    Poly inner;

    std::complex<double> eval(const std::complex<double>& z) const {
        return prefactor * std::exp(exp_coefficient * z) * inner.eval(z);
    }

    // exact z-derivatives of the frame through the product rule
    std::complex<double> eval_dz(const std::complex<double>& z) const {
        const double c = exp_coefficient;
        return prefactor * std::exp(c * z) * (c * inner.eval(z) + inner.derivative().eval(z));
    }
    std::complex<double> eval_dzz(const std::complex<double>& z) const {
        const double c = exp_coefficient;
        const Poly d1 = inner.derivative();
        return prefactor * std::exp(c * z) *
               (c * c * inner.eval(z) + 2.0 * c * d1.eval(z) + d1.derivative().eval(z));
    }
};

// f(t, .) = exp(t Delta_theta) g.  For epsilon > 0 this is the factored form
// with prefactor (1 + eps t)^{-theta} and exponential coefficient
// -eps / (1 + eps t).
inline SolutionFrame evolve(const InitialData& data, double theta, double t) {
    if (t < 0.0) throw std::domain_error("evolve: requires t >= 0");
    SolutionFrame fr;
    fr.t = t;
    if (data.epsilon == 0.0) {
        fr.inner = exp_delta_closed(t, theta, data.h);
        return fr;
    }
    if (t == 0.0) {
        fr.prefactor = 1.0;
        fr.exp_coefficient = -data.epsilon;
        fr.inner = data.h;
        return fr;
    }
    const ExpFactoredResult r = operation_rule(t, -data.epsilon, theta, data.h);
    fr.prefactor = r.prefactor;
    fr.exp_coefficient = r.exp_coefficient;
    fr.inner = r.inner;
    return fr;
}

// | d/dt f(t,z) - (Delta_theta f)(t, z) |, time derivative by central
// difference, z-derivatives exact on the frame.
inline double pde_residual(const InitialData& data, double theta, double t,
                           const std::complex<double>& z, double dt = 0.0) {
    if (!(t > 0.0)) throw std::domain_error("pde_residual: requires t > 0");
    if (dt <= 0.0) dt = t / 1000.0;
    // fourth-order central stencil keeps the truncation error well below the
    // roundoff floor of the difference quotient
    const std::complex<double> fp1 = evolve(data, theta, t + dt).eval(z);
    const std::complex<double> fp2 = evolve(data, theta, t + 2.0 * dt).eval(z);
    const std::complex<double> fm1 = evolve(data, theta, t - dt).eval(z);
    const std::complex<double> fm2 = evolve(data, theta, t - 2.0 * dt).eval(z);
    const std::complex<double> df_dt = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * dt);
    const SolutionFrame fr = evolve(data, theta, t);
    const std::complex<double> delta_f = theta * fr.eval_dz(z) + z * fr.eval_dzz(z);
    return std::abs(df_dt - delta_f);
}

struct StabilizationProfile {
    std::vector<std::pair<double, double>> values;  // (t, sup over |z| <= R)
    int monotone_from_index = -1;                   // first index after which values strictly decrease
};

// sup_{|z| <= R} |f(t, z)| over a time grid.  The sup is attained on the
// boundary circle; 256 samples with a parabolic polish on the best angle.
inline StabilizationProfile stabilization_profile(const InitialData& data, double theta,
                                                  const std::vector<double>& times, double R) {
    if (!(data.epsilon > 0.0))
        throw std::domain_error("stabilization_profile: requires epsilon > 0");
    if (!(theta > 0.0))
        throw std::domain_error(
            "stabilization_profile: theta = 0 not certified (the decay factor (1+eps t)^{-theta} "
            "is constant there)");
    StabilizationProfile out;
    const int samples = 256;
    for (double t : times) {
        const SolutionFrame fr = evolve(data, theta, t);
        auto mod_at = [&](double ang) {
            return std::abs(fr.eval(R * std::complex<double>(std::cos(ang), std::sin(ang))));
        };
        double best = 0.0, best_ang = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double ang = 2.0 * M_PI * double(i) / double(samples);
            const double v = mod_at(ang);
            if (v > best) {
                best = v;
                best_ang = ang;
            }
        }
        // one parabolic step through the neighbors of the best sample
        const double step = 2.0 * M_PI / double(samples);
        const double vm = mod_at(best_ang - step), vp = mod_at(best_ang + step);
        const double denom = vm - 2.0 * best + vp;
        if (denom < 0.0) {
            const double shift = 0.5 * step * (vm - vp) / denom;
            best = std::max(best, mod_at(best_ang + shift));
        }
        out.values.emplace_back(t, best);
    }
    for (std::size_t i = 0; i + 1 < out.values.size(); ++i) {
        bool monotone = true;
        for (std::size_t j = i; j + 1 < out.values.size(); ++j)
            if (out.values[j + 1].second >= out.values[j].second) {
                monotone = false;
                break;
            }
        if (monotone) {
            out.monotone_from_index = static_cast<int>(i);
            break;
        }
    }
    return out;
}

// Residual of (Delta_theta f)(z^2) = (1/4) [ (2 theta - 1)/z g'(z) + g''(z) ]
// with g(z) = f(z^2), both sides evaluated through exact polynomial routes.
inline double radial_identity_check(const Poly& f, double theta, const std::complex<double>& z) {
    if (z == std::complex<double>{0.0, 0.0})
        throw std::domain_error("radial_identity_check: singular evaluation point z = 0");
    const std::complex<double> lhs = apply_delta(theta, f).eval(z * z);
    std::vector<double> g(2 * std::max(f.degree(), 0) + 1, 0.0);
    for (int k = 0; k <= f.degree(); ++k) g[2 * k] = f.coeff(k);
    const Poly gp(std::move(g));
    const Poly d1 = gp.derivative();
    const std::complex<double> rhs =
        0.25 * ((2.0 * theta - 1.0) / z * d1.eval(z) + d1.derivative().eval(z));
    return std::abs(lhs - rhs);
}

}  // namespace lagcalc
