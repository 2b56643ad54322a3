#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lagcalc/polynomial.hpp"
#include "lagcalc/scalar.hpp"

namespace lagcalc {

enum class LaguerreClass { LPlus, LZero, LMinus };

// Factored representation C z^l exp(alpha z) prod_j (1 + beta_j z) with a
// finite beta list.  Infinite products are out of scope; every computation
// here is reached through finite forms plus truncation.
template <class Scalar>
struct LaguerreForm {
    Scalar C{1};
    int l = 0;
    Scalar alpha{0};
    std::vector<Scalar> betas;  // sorted descending, all >= 0

    LaguerreForm() = default;
    LaguerreForm(Scalar C_, int l_, Scalar alpha_, std::vector<Scalar> betas_)
        : C(std::move(C_)), l(l_), alpha(std::move(alpha_)), betas(std::move(betas_)) {
        if (l < 0) throw std::invalid_argument("LaguerreForm: l must be nonnegative");
        for (const auto& b : betas)
            if (b < Scalar{0}) throw std::invalid_argument("LaguerreForm: betas must be nonnegative");
        std::sort(betas.begin(), betas.end(), [](const Scalar& a, const Scalar& b) { return b < a; });
    }

    LaguerreClass cls() const {
        if (alpha < Scalar{0}) return LaguerreClass::LMinus;
        if (alpha == Scalar{0}) return LaguerreClass::LZero;
        return LaguerreClass::LPlus;
    }

    // sum_j beta_j^k
    Scalar mu(int k) const {
        Scalar s{0};
        for (const auto& b : betas) s += pow_int(b, k);
        return s;
    }
};

struct ExpandResult {
    bool degenerate = false;  // N < l: nothing representable below the z^l prefactor
};

// Taylor coefficients of the form through degree N: the polynomial part
// C z^l prod (1 + beta_j z) convolved with the series of exp(alpha z).
template <class Scalar>
Polynomial<Scalar> expand(const LaguerreForm<Scalar>& form, int N, ExpandResult* status = nullptr) {
    if (status) status->degenerate = false;
    if (N < form.l) {
        if (status) status->degenerate = true;
        return Polynomial<Scalar>{};
    }
    Polynomial<Scalar> p = Polynomial<Scalar>::monomial(form.l, form.C);
    for (const auto& b : form.betas) {
        p = p * Polynomial<Scalar>(std::vector<Scalar>{Scalar{1}, b});
        p = p.truncated(N);
    }
    if (!(form.alpha == Scalar{0})) {
        std::vector<Scalar> e(static_cast<std::size_t>(N) + 1);
        e[0] = Scalar{1};
        for (int k = 1; k <= N; ++k) e[k] = e[k - 1] * form.alpha / Scalar(k);
        p = (p * Polynomial<Scalar>(std::move(e))).truncated(N);
    }
    return p;
}

using Form = LaguerreForm<double>;
using FormQ = LaguerreForm<Rational>;

}  // namespace lagcalc
