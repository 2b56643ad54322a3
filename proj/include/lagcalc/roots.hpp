#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lagcalc/polynomial.hpp"

namespace lagcalc {

struct RootSet {
    std::vector<std::complex<double>> roots;  // with multiplicity
    double residual = 0.0;                    // max |p(r)| over the magnitude scale of p near r
    bool converged = true;
};

namespace detail {

template <class Real>
std::complex<Real> horner(const std::vector<double>& c, const std::complex<Real>& z) {
    std::complex<Real> acc{0, 0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + std::complex<Real>(Real(*it), 0);
    return acc;
}

inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<std::complex<double>> r(n);
    for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()(i);
    return r;
}

// Aberth-Ehrlich on a monic-scaled coefficient list; returns false on
// non-convergence (callers fall back to the companion matrix).
inline bool aberth(const std::vector<double>& c, std::vector<std::complex<double>>& z) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<double> d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = double(k) * c[k];
    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            const std::complex<double> pv = horner(c, z[j]);
            const std::complex<double> dv = horner(d, z[j]);
            if (pv == std::complex<double>{0.0, 0.0}) continue;
            std::complex<double> w = (dv != std::complex<double>{0.0, 0.0})
                                         ? pv / dv
                                         : std::complex<double>{1e-12, 1e-12};
            std::complex<double> sum{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                if (k != j) sum += 1.0 / (z[j] - z[k]);
            const std::complex<double> denom = 1.0 - w * sum;
            const std::complex<double> corr =
                (std::abs(denom) > 1e-300) ? w / denom : w;
            z[j] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[j])));
        }
        if (worst < 1e-14) return true;
    }
    return false;
}

// a few Newton steps in extended precision to tighten each root
inline void polish(const std::vector<double>& c, std::vector<std::complex<double>>& z) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<double> d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = double(k) * c[k];
    for (auto& r : z) {
        std::complex<long double> x(r.real(), r.imag());
        for (int it = 0; it < 3; ++it) {
            const auto pv = horner<long double>(c, x);
            const auto dv = horner<long double>(d, x);
            if (std::abs(dv) < 1e-300L) break;
            const auto step = pv / dv;
            if (std::abs(step) > 0.5L * (1.0L + std::abs(x))) break;  // cluster; Newton unreliable
            x -= step;
        }
        r = std::complex<double>(double(x.real()), double(x.imag()));
    }
}

}  // namespace detail

// All complex roots of p, exact zero roots deflated first, then
// Aberth-Ehrlich with a companion-matrix eigenvalue fallback.
inline RootSet roots(const Poly& p) {
    if (p.degree() < 1) throw std::domain_error("roots: requires deg p >= 1");
    std::vector<double> c = p.coeffs();
    RootSet out;
    std::size_t shift = 0;
    while (shift < c.size() - 1 && c[shift] == 0.0) ++shift;
    for (std::size_t i = 0; i < shift; ++i) out.roots.emplace_back(0.0, 0.0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));

    const int n = static_cast<int>(c.size()) - 1;
    if (n >= 1) {
        // initial guesses on a circle sized by the constant/leading ratio
        double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / double(n));
        if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
        std::vector<std::complex<double>> z(n);
        for (int j = 0; j < n; ++j) {
            const double ang = 2.0 * M_PI * double(j) / double(n) + 0.4;
            z[j] = radius * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        if (!detail::aberth(c, z)) {
            z = detail::companion_roots(c);
            out.converged = detail::aberth(c, z);
        }
        detail::polish(c, z);
        out.roots.insert(out.roots.end(), z.begin(), z.end());
    }

    double worst = 0.0;
    for (const auto& r : out.roots) {
        // scale of p on the circle |z| = |r|
        double scale = 0.0, pw = 1.0;
        const double m = std::max(1.0, std::abs(r));
        for (int k = 0; k <= p.degree(); ++k) {
            scale = std::max(scale, std::abs(p.coeff(k)) * pw);
            pw *= m;
        }
        worst = std::max(worst, std::abs(p.eval(r)) / scale);
    }
    out.residual = worst;
    return out;
}

// Roots within `merge_tol` are merged with summed multiplicity, for
// reporting only.
inline std::vector<std::pair<std::complex<double>, int>> clustered(const RootSet& rs,
                                                                   double merge_tol = 1e-6) {
    std::vector<std::pair<std::complex<double>, int>> out;
    for (const auto& r : rs.roots) {
        bool merged = false;
        for (auto& [c, m] : out)
            if (std::abs(c - r) <= merge_tol) {
                c = (c * double(m) + r) / double(m + 1);
                ++m;
                merged = true;
                break;
            }
        if (!merged) out.emplace_back(r, 1);
    }
    return out;
}

}  // namespace lagcalc
