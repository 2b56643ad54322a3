#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "lagcalc/laguerre_form.hpp"
#include "lagcalc/polynomial.hpp"
#include "lagcalc/quadrature.hpp"
#include "lagcalc/scalar.hpp"

namespace lagcalc {

using json = nlohmann::json;

// {"coeffs": [c0, c1, ...]}
inline json to_json(const Poly& p) { return json{{"coeffs", p.coeffs()}}; }

inline Poly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial JSON must be an object with a \"coeffs\" array");
    std::vector<double> c;
    for (const auto& x : j["coeffs"]) {
        if (!x.is_number()) throw std::invalid_argument("polynomial coefficients must be numbers");
        c.push_back(x.get<double>());
    }
    return Poly(std::move(c));
}

// exact mode: rationals as "p/q" strings
inline json to_json(const PolyQ& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return json{{"coeffs", arr}};
}

inline PolyQ poly_q_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial JSON must be an object with a \"coeffs\" array");
    std::vector<Rational> c;
    for (const auto& x : j["coeffs"]) {
        if (x.is_number_integer())
            c.push_back(Rational(x.get<long long>()));
        else if (x.is_string())
            c.push_back(rational_from_string(x.get<std::string>()));
        else
            throw std::invalid_argument("exact-mode coefficients must be integers or \"p/q\" strings");
    }
    return PolyQ(std::move(c));
}

// {"C": ..., "l": ..., "alpha": ..., "betas": [...]}
inline json to_json(const Form& f) {
    return json{{"C", f.C}, {"l", f.l}, {"alpha", f.alpha}, {"betas", f.betas}};
}

inline Form form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("C") || !j.contains("l") || !j.contains("alpha") ||
        !j.contains("betas"))
        throw std::invalid_argument("form JSON must contain C, l, alpha, betas");
    return Form(j["C"].get<double>(), j["l"].get<int>(), j["alpha"].get<double>(),
                j["betas"].get<std::vector<double>>());
}

// text dump of a rule, one "node,weight" row per line
inline std::string rule_to_csv(const QuadratureRule& rule) {
    std::string out = "node,weight\n";
    char buf[80];
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", rule.nodes[i], rule.weights[i]);
        out += buf;
    }
    return out;
}

}  // namespace lagcalc
