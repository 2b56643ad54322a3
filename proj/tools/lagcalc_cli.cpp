// Command-line front end: every operation behind a subcommand, JSON on
// stdout, side files (CSV / JSON-lines) only when an output path is given.
// Exit codes: 0 success, 1 property-suite failure, 2 usage error.
#include <CLI11.hpp>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "lagcalc/evolution.hpp"
#include "lagcalc/io.hpp"
#include "lagcalc/norms.hpp"
#include "lagcalc/quadrature.hpp"
#include "lagcalc/verify.hpp"
#include "lagcalc/zero_geometry.hpp"

using namespace lagcalc;
using cplx = std::complex<double>;

namespace {

cplx parse_z(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
    return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

json z_json(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Poly parse_poly(const std::string& s) { return poly_from_json(json::parse(s)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json suite_json(const verify::SuiteResult& r) {
    return json{{"suite", r.name}, {"trials", r.trials},   {"failures", r.failures},
                {"max_err", r.max_err}, {"pass", r.pass()}, {"detail", r.detail}};
}

int csv_precision() {
    if (const char* env = std::getenv("LAGCALC_PRECISION")) {
        const int p = std::atoi(env);
        if (p >= 1 && p <= 17) return p;
    }
    return 17;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator calculus on exponential-type entire functions"};
    app.require_subcommand(1);

    std::string poly_s, phi_s, form_s, h_s, out_path, mode = "floating", kind = "b", route = "closed",
                suite = "all", z_s = "0", theta_exact = "1";
    double theta = 1.0, a = 1.0, b = 1.0, c = 1.0, kappa = 0.0, u = -1.0, epsilon = 0.0, t = 1.0,
           R = 1.0, t_max = 10.0, tol = 1e-7;
    int n = 0, Q = 80, trials = 0, steps = 20;
    std::uint64_t seed = 0;

    auto* cmd_apply = app.add_subcommand("apply", "apply Delta_theta or phi(Delta_theta)");
    cmd_apply->add_option("--theta", theta)->required();
    cmd_apply->add_option("--poly", poly_s)->required();
    cmd_apply->add_option("--phi", phi_s, "symbol coefficients as polynomial JSON");

    auto* cmd_exp = app.add_subcommand("exp", "exp(a Delta_theta), closed form or quadrature");
    cmd_exp->add_option("--a", a)->required();
    cmd_exp->add_option("--theta", theta)->required();
    cmd_exp->add_option("--poly", poly_s)->required();
    cmd_exp->add_option("--route", route)->check(CLI::IsMember({"closed", "integral"}));
    cmd_exp->add_option("--z", z_s, "evaluation point re[,im] (integral route)");
    cmd_exp->add_option("--Q", Q);

    auto* cmd_lag = app.add_subcommand("laguerre", "Laguerre polynomial");
    cmd_lag->add_option("--n", n)->required();
    cmd_lag->add_option("--theta", theta)->required();
    cmd_lag->add_option("--route", route)->check(CLI::IsMember({"closed", "semigroup", "rodrigues"}));
    cmd_lag->add_option("--mode", mode)->check(CLI::IsMember({"floating", "exact"}));

    auto* cmd_norm = app.add_subcommand("norm", "||.||_b of a polynomial or N_c of an L+ form");
    cmd_norm->add_option("--kind", kind)->check(CLI::IsMember({"b", "N"}));
    cmd_norm->add_option("--b", b);
    cmd_norm->add_option("--c", c);
    cmd_norm->add_option("--poly", poly_s);
    cmd_norm->add_option("--form", form_s);

    auto* cmd_bound = app.add_subcommand("bound-check", "operator norm bound report");
    cmd_bound->add_option("--phi", phi_s)->required();
    cmd_bound->add_option("--poly", poly_s)->required();
    cmd_bound->add_option("--a", a)->required();
    cmd_bound->add_option("--b", b)->required();
    cmd_bound->add_option("--theta", theta)->required();

    auto* cmd_zeros = app.add_subcommand("zeros", "all complex roots with residual");
    cmd_zeros->add_option("--poly", poly_s)->required();

    auto* cmd_pres = app.add_subcommand("preserve", "zero-preservation trials");
    cmd_pres->add_option("--mode", mode)->check(CLI::IsMember({"lemma", "phi", "exp"}))->required();
    cmd_pres->add_option("--poly", poly_s);
    cmd_pres->add_option("--phi", phi_s);
    cmd_pres->add_option("--kappa", kappa);
    cmd_pres->add_option("--a", a);
    cmd_pres->add_option("--theta", theta);
    cmd_pres->add_option("--tol", tol);
    cmd_pres->add_option("--trials", trials, "run the random harness instead of a single trial");
    cmd_pres->add_option("--seed", seed);
    cmd_pres->add_option("--out", out_path, "JSON-lines audit file for the harness");

    auto* cmd_evolve = app.add_subcommand("evolve", "solve the heat-type problem at time t");
    cmd_evolve->add_option("--epsilon", epsilon);
    cmd_evolve->add_option("--h0", h_s)->required();
    cmd_evolve->add_option("--theta", theta)->required();
    cmd_evolve->add_option("--t", t)->required();
    cmd_evolve->add_option("--z", z_s, "also evaluate the frame at this point");

    auto* cmd_stab = app.add_subcommand("stabilize", "decay profile over a time grid");
    cmd_stab->add_option("--epsilon", epsilon)->required();
    cmd_stab->add_option("--h0", h_s)->required();
    cmd_stab->add_option("--theta", theta)->required();
    cmd_stab->add_option("--t-max", t_max);
    cmd_stab->add_option("--steps", steps);
    cmd_stab->add_option("--R", R)->required();
    cmd_stab->add_option("--out", out_path, "CSV side file, rows t,sup_norm");

    auto* cmd_verify = app.add_subcommand("verify", "property suites");
    cmd_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "laguerre-oracle", "semigroup", "integral", "zeros", "bound",
                               "norm-identity", "sandwich", "vandermonde", "pde", "stabilization",
                               "moments"}));
    cmd_verify->add_option("--trials", trials);
    cmd_verify->add_option("--seed", seed);

    auto* cmd_rule = app.add_subcommand("rule-dump", "quadrature nodes and weights as CSV");
    cmd_rule->add_option("--theta", theta)->required();
    cmd_rule->add_option("--Q", Q)->required();
    cmd_rule->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_apply) {
            const Poly f = parse_poly(poly_s);
            const Poly g = phi_s.empty()
                               ? apply_delta(theta, f)
                               : apply_phi_of_delta(OperatorSpec<double>::from_symbol(parse_poly(phi_s)),
                                                    theta, f);
            emit(to_json(g));
        } else if (*cmd_exp) {
            const Poly f = parse_poly(poly_s);
            if (route == "closed") {
                emit(to_json(exp_delta_closed(a, theta, f)));
            } else {
                const cplx z = parse_z(z_s);
                const cplx v = exp_delta_integral(
                    a, theta, [&](double s) { return f.eval(cplx(s, 0.0)); }, z,
                    gauss_laguerre_rule(theta, Q));
                emit(json{{"z", z_json(z)},
                          {"value", z_json(v)},
                          {"closed_reference", z_json(exp_delta_closed(a, theta, f).eval(z))}});
            }
        } else if (*cmd_lag) {
            if (mode == "exact") {
                const int ti = static_cast<int>(theta);
                if (double(ti) != theta)
                    throw std::domain_error("exact mode requires an integer theta");
                const PolyQ p = (route == "rodrigues") ? laguerre_rodrigues(n, Rational(ti))
                                                       : laguerre_poly(n, Rational(ti));
                emit(to_json(p));
            } else {
                emit(to_json((route == "rodrigues") ? laguerre_rodrigues(n, theta)
                                                    : laguerre_poly(n, theta)));
            }
        } else if (*cmd_norm) {
            if (kind == "b") {
                const NormReport r = norm_b(parse_poly(poly_s), b);
                emit(json{{"b", r.b},
                          {"value", r.value},
                          {"truncation_degree", r.truncation_degree},
                          {"tail_bound", r.tail_bound}});
            } else {
                emit(json{{"c", c}, {"value", norm_N_laguerre(form_from_json(json::parse(form_s)), c)}});
            }
        } else if (*cmd_bound) {
            const OperatorBoundReport r =
                operator_bound_check(parse_poly(phi_s), parse_poly(poly_s), a, b, theta);
            emit(json{{"c", r.c},
                      {"norm_g_c", r.norm_g_c},
                      {"bound", r.bound},
                      {"satisfied", r.satisfied}});
        } else if (*cmd_zeros) {
            const RootSet rs = roots(parse_poly(poly_s));
            json arr = json::array();
            for (const auto& r : rs.roots) arr.push_back(z_json(r));
            emit(json{{"roots", arr}, {"residual", rs.residual}, {"converged", rs.converged}});
        } else if (*cmd_pres) {
            if (trials > 0) {
                std::mt19937_64 rng(seed);
                std::uniform_real_distribution<double> par(0.0, 3.0);
                std::ofstream audit;
                if (!out_path.empty()) audit.open(out_path);
                int failures = 0;
                for (int i = 0; i < trials; ++i) {
                    PreservationReport rep;
                    json inputs;
                    if (mode == "lemma") {
                        const Poly p = verify::random_P_plus(rng, 12);
                        const double kp = par(rng), th = par(rng);
                        rep = preservation_trial(p, kp, th, tol);
                        inputs = json{{"poly", to_json(p)}, {"kappa", kp}, {"theta", th}};
                    } else if (mode == "phi") {
                        const Poly phi = verify::random_P_plus(rng, 8);
                        const Poly f = verify::random_P_plus(rng, 8);
                        const double th = par(rng);
                        rep = phi_preservation_trial(phi, f, th, tol);
                        inputs = json{{"phi", to_json(phi)}, {"poly", to_json(f)}, {"theta", th}};
                    } else {
                        const Poly f = verify::random_P_plus(rng, 12);
                        const double aa = par(rng), th = par(rng);
                        rep = exp_preservation_trial(aa, th, f, tol);
                        inputs = json{{"poly", to_json(f)}, {"a", aa}, {"theta", th}};
                    }
                    if (!rep.pass) ++failures;
                    if (audit.is_open()) {
                        json roots_arr = json::array();
                        for (const auto& r : rep.output_roots.roots) roots_arr.push_back(z_json(r));
                        audit << json{{"trial", i},
                                      {"inputs", inputs},
                                      {"roots", roots_arr},
                                      {"max_imag", rep.max_imag},
                                      {"max_real_part", rep.max_real_part},
                                      {"verdict", rep.pass ? "pass" : "fail"}}
                                     .dump()
                              << "\n";
                    }
                }
                emit(json{{"mode", mode}, {"trials", trials}, {"failures", failures}});
                return failures == 0 ? 0 : 1;
            }
            PreservationReport rep;
            if (mode == "lemma")
                rep = preservation_trial(parse_poly(poly_s), kappa, theta, tol);
            else if (mode == "phi")
                rep = phi_preservation_trial(parse_poly(phi_s), parse_poly(poly_s), theta, tol);
            else
                rep = exp_preservation_trial(a, theta, parse_poly(poly_s), tol);
            json roots_arr = json::array();
            for (const auto& r : rep.output_roots.roots) roots_arr.push_back(z_json(r));
            emit(json{{"input_class", rep.input_class},
                      {"output", to_json(rep.output)},
                      {"roots", roots_arr},
                      {"max_imag", rep.max_imag},
                      {"max_real_part", rep.max_real_part},
                      {"verdict", rep.pass ? "pass" : "fail"},
                      {"vacuous", rep.vacuous}});
        } else if (*cmd_evolve) {
            const SolutionFrame fr = evolve(InitialData{epsilon, parse_poly(h_s)}, theta, t);
            json out{{"t", fr.t},
                     {"prefactor", fr.prefactor},
                     {"exp_coefficient", fr.exp_coefficient},
                     {"inner", to_json(fr.inner)}};
            if (cmd_evolve->count("--z")) out["value"] = z_json(fr.eval(parse_z(z_s)));
            emit(out);
        } else if (*cmd_stab) {
            std::vector<double> times;
            for (int i = 0; i <= steps; ++i) times.push_back(t_max * double(i) / double(steps));
            const StabilizationProfile prof =
                stabilization_profile(InitialData{epsilon, parse_poly(h_s)}, theta, times, R);
            json values = json::array();
            for (const auto& [tt, sup] : prof.values) values.push_back(json{{"t", tt}, {"sup_norm", sup}});
            emit(json{{"values", values}, {"monotone_from_index", prof.monotone_from_index}});
            if (!out_path.empty()) {
                std::ofstream csv(out_path);
                char buf[80];
                csv << "t,sup_norm\n";
                for (const auto& [tt, sup] : prof.values) {
                    std::snprintf(buf, sizeof(buf), "%.*g,%.*g\n", csv_precision(), tt,
                                  csv_precision(), sup);
                    csv << buf;
                }
            }
        } else if (*cmd_verify) {
            std::vector<verify::SuiteResult> results;
            auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
            if (want("laguerre-oracle")) results.push_back(verify::suite_laguerre_oracle());
            if (want("semigroup"))
                results.push_back(verify::suite_semigroup(trials > 0 ? trials : 200, seed));
            if (want("integral")) results.push_back(verify::suite_integral_vs_closed());
            if (want("zeros")) {
                results.push_back(verify::suite_lemma_preservation(trials > 0 ? trials : 1000, seed));
                results.push_back(verify::suite_theorem_preservation(trials > 0 ? trials : 1000, seed));
            }
            if (want("bound"))
                results.push_back(verify::suite_operator_bound(trials > 0 ? trials : 500, seed));
            if (want("norm-identity")) results.push_back(verify::suite_norm_identity());
            if (want("sandwich"))
                results.push_back(verify::suite_sandwich(trials > 0 ? trials : 50, seed));
            if (want("vandermonde"))
                results.push_back(verify::suite_vandermonde(trials > 0 ? trials : 200, seed));
            if (want("pde")) results.push_back(verify::suite_pde());
            if (want("stabilization")) results.push_back(verify::suite_stabilization());
            if (want("moments")) results.push_back(verify::suite_quadrature_moments());
            json arr = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                arr.push_back(suite_json(r));
                all_pass = all_pass && r.pass();
            }
            emit(json{{"suites", arr}, {"pass", all_pass}});
            return all_pass ? 0 : 1;
        } else if (*cmd_rule) {
            const std::string csv = rule_to_csv(gauss_laguerre_rule(theta, Q));
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream f(out_path);
                f << csv;
                emit(json{{"written", out_path}});
            }
        }
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
