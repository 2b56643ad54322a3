#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagcalc/operator_calculus.hpp"
#include "lagcalc/polynomial.hpp"
#include "lagcalc/roots.hpp"

namespace lagcalc {

struct PreservationReport {
    std::string input_class;
    Poly output;
    RootSet output_roots;
    double max_imag = 0.0;
    double max_real_part = 0.0;
    double scale = 1.0;
    bool pass = false;
    bool vacuous = false;  // output has no roots (constant or zero)
};

// true iff every root is real nonpositive up to tol * (1 + max |root|)
inline bool classify_P_plus(const Poly& p, double tol = 1e-7) {
    if (p.is_zero()) throw std::domain_error("classify_P_plus: zero polynomial");
    if (p.degree() == 0) return true;
    const RootSet rs = roots(p);
    double max_abs = 0.0;
    for (const auto& r : rs.roots) max_abs = std::max(max_abs, std::abs(r));
    const double scale = 1.0 + max_abs;
    for (const auto& r : rs.roots)
        if (std::abs(r.imag()) > tol * scale || r.real() > tol * scale) return false;
    return true;
}

namespace detail {

inline PreservationReport certify(const Poly& out, std::string input_class, double tol) {
    PreservationReport rep;
    rep.input_class = std::move(input_class);
    rep.output = out;
    if (out.degree() < 1) {
        rep.pass = true;
        rep.vacuous = true;
        return rep;
    }
    rep.output_roots = roots(out);
    double max_abs = 0.0;
    for (const auto& r : rep.output_roots.roots) max_abs = std::max(max_abs, std::abs(r));
    rep.scale = 1.0 + max_abs;
    for (const auto& r : rep.output_roots.roots) {
        rep.max_imag = std::max(rep.max_imag, std::abs(r.imag()));
        rep.max_real_part = std::max(rep.max_real_part, r.real());
    }
    rep.pass = rep.max_imag <= tol * rep.scale && rep.max_real_part <= tol * rep.scale;
    return rep;
}

}  // namespace detail

// (kappa + Delta_theta) p for p with real nonpositive zeros; certifies that
// the output zeros stay real nonpositive.
inline PreservationReport preservation_trial(const Poly& p, double kappa, double theta,
                                             double tol = 1e-7) {
    if (kappa < 0.0 || theta < 0.0)
        throw std::domain_error("preservation_trial: requires kappa, theta >= 0");
    if (!classify_P_plus(p, tol)) throw std::domain_error("preservation_trial: input not in P+");
    const Poly out = p * kappa + apply_delta(theta, p);
    return detail::certify(out, "P+", tol);
}

// phi(Delta_theta) f applied as a product of (kappa_j + Delta_theta) stages,
// kappa_j recovered from the roots of phi.
inline PreservationReport phi_preservation_trial(const Poly& phi, const Poly& f, double theta,
                                                 double tol = 1e-7) {
    if (theta < 0.0) throw std::domain_error("phi_preservation_trial: requires theta >= 0");
    if (!classify_P_plus(phi, tol))
        throw std::domain_error("phi_preservation_trial: phi not in P+");
    if (!classify_P_plus(f, tol)) throw std::domain_error("phi_preservation_trial: f not in P+");
    Poly out = f;
    if (phi.degree() >= 1) {
        const RootSet rs = roots(phi);
        for (const auto& r : rs.roots) {
            const double kappa = std::max(0.0, -r.real());
            out = out * kappa + apply_delta(theta, out);
        }
    }
    out = out * phi.coeff(phi.degree());
    return detail::certify(out, "P+ x P+", tol);
}

// exp(a Delta_theta) f, a >= 0, with the output zeros certified.
inline PreservationReport exp_preservation_trial(double a, double theta, const Poly& f,
                                                 double tol = 1e-7) {
    if (a < 0.0 || theta < 0.0)
        throw std::domain_error("exp_preservation_trial: requires a, theta >= 0");
    if (!classify_P_plus(f, tol)) throw std::domain_error("exp_preservation_trial: input not in P+");
    return detail::certify(exp_delta_closed(a, theta, f), "P+", tol);
}

}  // namespace lagcalc
