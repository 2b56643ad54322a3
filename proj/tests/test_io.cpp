#include <random>

#include "doctest.h"
#include "lagcalc/io.hpp"

using namespace lagcalc;

TEST_CASE("polynomial JSON round trip") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> c(1 + t % 8);
        for (auto& x : c) x = u(rng);
        const Poly p(c);
        CHECK(poly_from_json(json::parse(to_json(p).dump())) == p);
    }
    CHECK_THROWS_AS(poly_from_json(json::parse("{\"coeffs\": \"nope\"}")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("exact mode serializes rationals as p/q strings") {
    const PolyQ p({Rational(1, 3), Rational(-7, 2), Rational(4)});
    const json j = to_json(p);
    CHECK(j["coeffs"][0] == "1/3");
    CHECK(poly_q_from_json(j) == p);
    CHECK(poly_q_from_json(json::parse("{\"coeffs\": [1, \"1/2\"]}")) ==
          PolyQ({Rational(1), Rational(1, 2)}));
}

TEST_CASE("form JSON round trip") {
    const Form f(2.5, 1, 0.3, {0.9, 0.1});
    const Form g = form_from_json(json::parse(to_json(f).dump()));
    CHECK(g.C == f.C);
    CHECK(g.l == f.l);
    CHECK(g.alpha == f.alpha);
    CHECK(g.betas == f.betas);
    CHECK_THROWS_AS(form_from_json(json::parse("{\"C\": 1}")), std::invalid_argument);
}

TEST_CASE("rule CSV dump") {
    const auto rule = gauss_laguerre_rule(1.0, 2);
    const std::string csv = rule_to_csv(rule);
    CHECK(csv.substr(0, 12) == "node,weight\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
