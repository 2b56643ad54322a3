#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lagcalc {

// Exact coefficient type for the rational mode. Only valid when theta is a
// nonnegative integer and all inputs are rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class Scalar>
Scalar factorial(int n) {
    Scalar r{1};
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

template <class Scalar>
Scalar pow_int(const Scalar& x, int n) {
    if (n < 0) return Scalar{1} / pow_int(x, -n);
    Scalar r{1};
    Scalar base = x;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

// m! * Gamma(theta + m).  theta = 0, m = 0 hits the Gamma pole; callers that
// rely on the 1/gamma convention must branch before calling.
inline double gamma_theta(double theta, int m) {
    if (theta == 0.0 && m == 0)
        throw std::domain_error("gamma_theta: pole of Gamma at theta = m = 0");
    return std::exp(std::lgamma(double(m) + 1.0) + std::lgamma(theta + double(m)));
}

inline double log_gamma_theta(double theta, int m) {
    if (theta == 0.0 && m == 0)
        throw std::domain_error("gamma_theta: pole of Gamma at theta = m = 0");
    return std::lgamma(double(m) + 1.0) + std::lgamma(theta + double(m));
}

// Exact m! * (theta + m - 1)! for integer theta >= 0.
inline Rational gamma_theta_exact(int theta, int m) {
    if (theta == 0 && m == 0)
        throw std::domain_error("gamma_theta: pole of Gamma at theta = m = 0");
    if (theta + m <= 0) throw std::domain_error("gamma_theta: theta + m must be positive");
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    for (int i = 2; i <= theta + m - 1; ++i) r *= i;
    return Rational(r);
}

// q_theta^{(m,k)}: the coefficient in Delta_theta^k z^m = q z^{m-k}.
// Computed as the running product prod_{i<k} (m-i)(theta+m-1-i), never as a
// ratio of Gamma values.
template <class Scalar>
Scalar q_coefficient(const Scalar& theta, int m, int k) {
    if (k > m) return Scalar{0};
    Scalar q{1};
    for (int i = 0; i < k; ++i) q *= Scalar(m - i) * (theta + Scalar(m - 1 - i));
    return q;
}

inline std::string rational_to_string(const Rational& x) {
    return x.str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace lagcalc
