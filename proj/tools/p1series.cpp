/*
   Copyright 2026 The p1series Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "p1/p1.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace p1;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;
constexpr int exit_verification = 4;

struct CommonOpts {
    std::string g2 = "0", lambda = "1", g3 = "0"; // the pentagonal showcase point
    int terms = 100;
    int digits = 25;
    std::string format = "json";
    std::string cache;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_params = true, bool with_cache = false) {
    if (with_params) {
        cmd->add_option("--g2", o.g2, "g2 as an exact rational string")->capture_default_str();
        cmd->add_option("--lambda", o.lambda, "lambda as an exact rational string")
            ->capture_default_str();
        cmd->add_option("--g3", o.g3, "g3 as an exact rational string")->capture_default_str();
    }
    cmd->add_option("--terms", o.terms, "truncation order / table size")->capture_default_str();
    cmd->add_option("--digits", o.digits, "output precision in decimal digits")
        ->capture_default_str();
    cmd->add_option("--format", o.format, "output format: json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}))
        ->capture_default_str();
    if (with_cache) cmd->add_option("--cache", o.cache, "coefficient cache file");
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

ParameterTriple parse_params(const CommonOpts& o) {
    return {Rational::parse(o.g2), Rational::parse(o.lambda), Rational::parse(o.g3)};
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(o.out, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open output file " + o.out);
    os << text;
}

ordered_json params_json(const ParameterTriple& p) {
    return ordered_json{{"g2", p.g2.to_string()},
                        {"lambda", p.lambda.to_string()},
                        {"g3", p.g3.to_string()}};
}

std::string table_csv(const std::vector<std::pair<int, std::string>>& rows) {
    std::ostringstream os;
    os << "index,value\n";
    for (const auto& [i, v] : rows) os << i << "," << v << "\n";
    return os.str();
}

std::string coefficients_output(const CommonOpts& o, const std::string& command,
                                const ordered_json& header,
                                const std::vector<std::pair<int, std::string>>& rows) {
    if (o.format == "csv") return table_csv(rows);
    if (o.format == "svg") throw std::invalid_argument(command + ": svg output not supported");
    ordered_json j = header;
    ordered_json arr = ordered_json::array();
    for (const auto& [i, v] : rows) arr.push_back(ordered_json{{"index", i}, {"value", v}});
    j["coefficients"] = arr;
    return j.dump(2) + "\n";
}

int run_laurent(const CommonOpts& o, bool symbolic) {
    std::vector<std::pair<int, std::string>> rows;
    ordered_json header{{"command", "laurent"}};
    if (symbolic) {
        auto P = modular_polynomials(o.terms);
        for (int n = 0; n <= o.terms; ++n) rows.emplace_back(n, P.at(n).to_string());
        header["producer"] = P.producer;
        header["order"] = o.terms;
    } else {
        ParameterTriple p = parse_params(o);
        LaurentExpansion e = o.cache.empty() ? laurent_coeffs(p, o.terms)
                                             : laurent_coeffs_cached(p, o.terms, o.cache);
        for (int n = 0; n <= o.terms; ++n) rows.emplace_back(n, e.coeffs.at(n).to_string());
        header["params"] = params_json(p);
        header["producer"] = e.coeffs.producer;
        header["order"] = e.order;
    }
    emit(o, coefficients_output(o, "laurent", header, rows));
    return exit_ok;
}

int run_tau(const CommonOpts& o, const std::string& method, bool symbolic) {
    std::vector<std::pair<int, std::string>> rows;
    ordered_json header{{"command", "tau"}, {"method", method}};
    if (symbolic) {
        CoefficientTable<WeightedPolynomial> t;
        if (method == "bilinear") t = tau_coeffs_bilinear_symbolic(o.terms).coeffs;
        else if (method == "quartic") t = tau_coeffs_quartic_symbolic(o.terms).coeffs;
        else t = tau_from_triple_sum_symbolic(triple_sum_coeffs(o.terms + 1), o.terms).coeffs;
        for (int n = 0; n <= o.terms; ++n) rows.emplace_back(n, t.at(n).to_string());
        header["order"] = o.terms;
        header["producer"] = t.producer;
    } else {
        ParameterTriple p = parse_params(o);
        TauExpansion<Rational> t;
        if (method == "bilinear") t = tau_coeffs_bilinear(p, o.terms);
        else if (method == "quartic") t = tau_coeffs_quartic(p, o.terms);
        else t = tau_from_triple_sum(triple_sum_coeffs(o.terms + 1), p, o.terms);
        for (int n = 0; n <= o.terms; ++n) rows.emplace_back(n, t.coeffs.at(n).to_string());
        header["params"] = params_json(p);
        header["order"] = t.order;
        header["producer"] = t.coeffs.producer;
    }
    emit(o, coefficients_output(o, "tau", header, rows));
    return exit_ok;
}

int run_triple_sum(const CommonOpts& o, bool check_integrality) {
    TripleSumTable t = triple_sum_coeffs(o.terms);
    auto bad = check_integrality ? integrality_report(t) : std::vector<std::array<int, 3>>{};
    if (o.format == "csv") {
        std::ostringstream os;
        os << "l,m,n,s,value\n";
        for (const auto& e : t.entries)
            os << e.l << "," << e.m << "," << e.n << "," << triple_sum_s(e.l, e.m, e.n) << ","
               << e.value.to_string() << "\n";
        emit(o, os.str());
    } else if (o.format == "svg") {
        throw std::invalid_argument("triple-sum: svg output not supported");
    } else {
        ordered_json j{{"command", "triple-sum"}, {"s_max", t.s_max}};
        ordered_json arr = ordered_json::array();
        for (const auto& e : t.entries)
            arr.push_back(ordered_json{{"l", e.l},
                                       {"m", e.m},
                                       {"n", e.n},
                                       {"s", triple_sum_s(e.l, e.m, e.n)},
                                       {"value", e.value.to_string()}});
        j["entries"] = arr;
        if (check_integrality) {
            ordered_json v = ordered_json::array();
            for (const auto& b : bad)
                v.push_back(ordered_json{{"l", b[0]}, {"m", b[1]}, {"n", b[2]}});
            j["integrality_violations"] = v;
        }
        emit(o, j.dump(2) + "\n");
    }
    return (check_integrality && !bad.empty()) ? exit_verification : exit_ok;
}

int run_elliptic(const CommonOpts& o, const std::string& which, int rows, int hurwitz_rows) {
    EllipticCase c = which == "lemniscatic" ? EllipticCase::lemniscatic()
                                            : EllipticCase::equianharmonic();
    MpReal omega = half_period(c, o.digits);
    std::vector<std::pair<int, std::string>> grows;
    for (int n = 1; n <= rows; ++n)
        grows.emplace_back(n, eisenstein_table_value(c, n, o.digits).to_string(o.digits));
    CoefficientTable<Rational> H;
    if (hurwitz_rows > 0) H = hurwitz_numbers(hurwitz_rows);

    if (o.format == "csv") {
        std::ostringstream os;
        os << "n,index,value\n";
        for (const auto& [n, v] : grows)
            os << n << "," << c.symmetry_order() * n << "," << v << "\n";
        if (hurwitz_rows > 0) {
            os << "n,hurwitz\n";
            for (int n = 1; n <= hurwitz_rows; ++n) os << n << "," << H.at(n).to_string() << "\n";
        }
        emit(o, os.str());
    } else if (o.format == "svg") {
        throw std::invalid_argument("elliptic: svg output not supported");
    } else {
        ordered_json j{{"command", "elliptic"},
                       {"case", which},
                       {"params", params_json(c.params())},
                       {"omega1", omega.to_string(o.digits)}};
        ordered_json arr = ordered_json::array();
        for (const auto& [n, v] : grows)
            arr.push_back(ordered_json{{"n", n}, {"index", c.symmetry_order() * n}, {"value", v}});
        j["eisenstein"] = arr;
        if (hurwitz_rows > 0) {
            ordered_json h = ordered_json::array();
            for (int n = 1; n <= hurwitz_rows; ++n)
                h.push_back(ordered_json{{"n", n}, {"value", H.at(n).to_string()}});
            j["hurwitz"] = h;
        }
        emit(o, j.dump(2) + "\n");
    }
    return exit_ok;
}

int run_pentagon(const CommonOpts& o, int f_rows) {
    CoefficientTable<Rational> v = o.cache.empty() ? pentagonal_coeffs(o.terms)
                                                   : pentagonal_coeffs_cached(o.terms, o.cache);
    GammaResult g = gamma_constant(std::min(o.digits, 40));
    mpfr_prec_t prec = working_bits(o.digits + 10);
    std::vector<std::pair<int, std::string>> frows;
    {
        int vmax = std::min(o.terms, f_rows);
        MpReal gp(1L, prec);
        for (int n = 1; n <= vmax; ++n) {
            gp *= g.value;
            MpReal F = MpReal(v.at(n) * Rational(1, 5 * n - 1), prec) * gp;
            frows.emplace_back(n, F.to_string(o.digits));
        }
    }
    if (o.format == "csv") {
        std::ostringstream os;
        os << "n,v,F\n";
        for (int n = 1; n <= o.terms; ++n) {
            os << n << "," << v.at(n).to_string() << ",";
            if (n - 1 < static_cast<int>(frows.size()))
                os << frows[static_cast<std::size_t>(n - 1)].second;
            os << "\n";
        }
        emit(o, os.str());
    } else if (o.format == "svg") {
        throw std::invalid_argument("pentagon: svg output not supported");
    } else {
        // timings are diagnostics, kept off the deterministic payload
        std::cerr << "gamma timings: ratio method " << g.ratio_seconds << " s, root method "
                  << g.root_seconds << " s\n";
        int gd = std::min(o.digits, 40);
        ordered_json j{{"command", "pentagon"},
                       {"gamma", g.value.to_string(gd)},
                       {"gamma_ratio_method", g.ratio_estimate.to_string(gd)},
                       {"gamma_root_method", g.root_estimate.to_string(gd)}};
        ordered_json varr = ordered_json::array();
        for (int n = 1; n <= o.terms; ++n)
            varr.push_back(ordered_json{{"n", n}, {"value", v.at(n).to_string()}});
        j["v"] = varr;
        ordered_json farr = ordered_json::array();
        for (const auto& [n, s] : frows) farr.push_back(ordered_json{{"n", n}, {"value", s}});
        j["F"] = farr;
        emit(o, j.dump(2) + "\n");
    }
    return exit_ok;
}

int run_poles(const CommonOpts& o) {
    ParameterTriple p = parse_params(o);
    PoleSet set = trusted_zeros(p, o.terms, o.digits);
    if (o.format == "csv") {
        std::ostringstream os;
        export_pole_map_csv(set, os, o.digits);
        emit(o, os.str());
    } else if (o.format == "svg") {
        std::ostringstream os;
        export_pole_map_svg(set, os);
        emit(o, os.str());
    } else {
        ordered_json j{{"command", "poles"},
                       {"params", params_json(p)},
                       {"order", set.order_lo},
                       {"refined_order", set.order_hi},
                       {"trust_radius", set.trust_radius.to_string(o.digits)}};
        ordered_json arr = ordered_json::array();
        for (const auto& z : set.zeros)
            arr.push_back(ordered_json{{"re", z.z.re.to_string(o.digits)},
                                       {"im", z.z.im.to_string(o.digits)},
                                       {"stability", z.stability.to_string(6)},
                                       {"residual", z.residual.to_string(6)}});
        j["zeros"] = arr;
        emit(o, j.dump(2) + "\n");
    }
    return exit_ok;
}

int run_verify(const CommonOpts& o) {
    auto results = run_verification();
    bool all = true;
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            arr.push_back(
                ordered_json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        emit(o, ordered_json{{"command", "verify"}, {"checks", arr}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            all = all && r.pass;
            os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
        }
        emit(o, os.str());
    }
    return all ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and arbitrary-precision series expansions for the first Painleve "
                 "equation: Laurent coefficients, tau-function Taylor coefficients by three "
                 "recursions, elliptic special values and pole maps"};
    app.require_subcommand(1);

    CommonOpts laurent_o, tau_o, triple_o, elliptic_o, pentagon_o, poles_o, verify_o;
    bool laurent_symbolic = false, tau_symbolic = false, check_integrality = false;
    std::string tau_method = "bilinear", elliptic_case = "equianharmonic";
    int elliptic_rows = 14, hurwitz_rows = 0, f_rows = 14;

    auto* c_laurent = app.add_subcommand(
        "laurent", "Laurent coefficients c_n, numeric or as modular polynomials");
    add_common(c_laurent, laurent_o, true, true);
    c_laurent->add_flag("--symbolic", laurent_symbolic,
                        "emit the modular polynomials P_n instead of numeric values");

    auto* c_tau = app.add_subcommand("tau", "tau-function Taylor coefficients C_n");
    add_common(c_tau, tau_o);
    c_tau->add_option("--method", tau_method, "recursion: bilinear, quartic or triple-sum")
        ->check(CLI::IsMember({"bilinear", "quartic", "triple-sum"}))
        ->capture_default_str();
    c_tau->add_flag("--symbolic", tau_symbolic, "emit polynomial coefficients");

    auto* c_triple = app.add_subcommand("triple-sum",
                                        "integer coefficients A_{l,m,n} of the triple sum");
    add_common(c_triple, triple_o, false);
    c_triple->add_flag("--check-integrality", check_integrality,
                       "report non-integer entries (exit 4 if any)");

    auto* c_elliptic =
        app.add_subcommand("elliptic", "half-periods, Eisenstein values, Hurwitz numbers");
    add_common(c_elliptic, elliptic_o, false);
    c_elliptic->add_option("--case", elliptic_case, "equianharmonic or lemniscatic")
        ->check(CLI::IsMember({"equianharmonic", "lemniscatic"}))
        ->capture_default_str();
    c_elliptic->add_option("--rows", elliptic_rows, "table rows to print")->capture_default_str();
    c_elliptic->add_option("--hurwitz", hurwitz_rows, "also print Hurwitz numbers H_1..H_n");

    auto* c_pentagon = app.add_subcommand(
        "pentagon", "pentagonal solution: v_n, the constant gamma, normalized power sums");
    add_common(c_pentagon, pentagon_o, false, true);
    c_pentagon->add_option("--f-rows", f_rows, "rows of the normalized power sum table")
        ->capture_default_str();

    auto* c_poles = app.add_subcommand("poles", "trusted zeros of tau = poles of u");
    add_common(c_poles, poles_o);

    auto* c_verify =
        app.add_subcommand("verify", "run the full cross-recursion invariant suite");
    add_common(c_verify, verify_o, false);

    try {
        app.parse(argc, argv);
        if (c_laurent->parsed()) return run_laurent(laurent_o, laurent_symbolic);
        if (c_tau->parsed()) return run_tau(tau_o, tau_method, tau_symbolic);
        if (c_triple->parsed()) return run_triple_sum(triple_o, check_integrality);
        if (c_elliptic->parsed())
            return run_elliptic(elliptic_o, elliptic_case, elliptic_rows, hurwitz_rows);
        if (c_pentagon->parsed()) return run_pentagon(pentagon_o, f_rows);
        if (c_poles->parsed()) return run_poles(poles_o);
        if (c_verify->parsed()) return run_verify(verify_o);
        return exit_usage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const cache_version_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const cache_corruption_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
}
