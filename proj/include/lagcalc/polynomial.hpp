#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "lagcalc/scalar.hpp"

namespace lagcalc {

// f(z) = sum_k coeffs[k] z^k.  Trailing coefficient nonzero; the zero
// polynomial has an empty coefficient list.
template <class Scalar>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial monomial(int degree, Scalar c = Scalar{1}) {
        std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar{0});
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }
    static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar{0};
        return coeffs_[static_cast<std::size_t>(k)];
    }

    template <class T>
    T eval(const T& z) const {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + T(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial{};
        std::vector<Scalar> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Scalar(int(k)) * coeffs_[k];
        return Polynomial(std::move(d));
    }

    // p(s * z)
    Polynomial scale_argument(const Scalar& s) const {
        std::vector<Scalar> v = coeffs_;
        Scalar p{1};
        for (std::size_t k = 1; k < v.size(); ++k) {
            p *= s;
            v[k] *= p;
        }
        return Polynomial(std::move(v));
    }

    Polynomial operator*(const Scalar& c) const {
        std::vector<Scalar> v = coeffs_;
        for (auto& x : v) x *= c;
        return Polynomial(std::move(v));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()), Scalar{0});
        for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
        return Polynomial(std::move(v));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()), Scalar{0});
        for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] -= o.coeffs_[k];
        return Polynomial(std::move(v));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial{};
        std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1, Scalar{0});
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(v));
    }

    Polynomial truncated(int max_degree) const {
        if (max_degree < 0) return Polynomial{};
        std::vector<Scalar> v(coeffs_.begin(),
                              coeffs_.begin() + std::min(coeffs_.size(), static_cast<std::size_t>(max_degree) + 1));
        return Polynomial(std::move(v));
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar{0}) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<double>;
using PolyQ = Polynomial<Rational>;

inline Poly to_double_poly(const PolyQ& p) {
    std::vector<double> v(p.coeffs().size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = to_double(p.coeffs()[k]);
    return Poly(std::move(v));
}

}  // namespace lagcalc
