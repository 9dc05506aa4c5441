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

#ifndef P1SERIES_VERIFY_HPP
#define P1SERIES_VERIFY_HPP

#include <string>
#include <vector>

#include "p1/elliptic.hpp"
#include "p1/laurent.hpp"
#include "p1/tau.hpp"

namespace p1 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The cross-recursion invariant suite: every identity the three tau
/// recursions, the Laurent recursion and the stratified tables must
/// satisfy, checked with exact arithmetic at fixed rational parameter
/// points. Deterministic: identical runs give identical reports.
inline std::vector<CheckResult> run_verification(int N = 120, int sym_weight = 40) {
    std::vector<CheckResult> out;
    auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };
    const std::vector<ParameterTriple> points = {
        {Rational(3, 2), Rational(-2, 3), Rational(5, 7)},
        {Rational(-1, 2), Rational(1), Rational(2)},
        {Rational(4), Rational(1, 3), Rational(-3, 5)},
    };

    {
        bool ok = true;
        auto table = triple_sum_coeffs(N + 1);
        for (const auto& p : points) {
            auto a = tau_coeffs_bilinear(p, N);
            auto b = tau_coeffs_quartic(p, N);
            auto c = tau_from_triple_sum(table, p, N);
            ok = ok && a.coeffs.values == b.coeffs.values && a.coeffs.values == c.coeffs.values;
        }
        record("tau-three-way-equality-numeric", ok,
               "bilinear = quartic = triple-sum, N = " + std::to_string(N));
    }
    {
        auto a = tau_coeffs_bilinear_symbolic(sym_weight);
        auto b = tau_coeffs_quartic_symbolic(sym_weight);
        auto c = tau_from_triple_sum_symbolic(triple_sum_coeffs(sym_weight + 1), sym_weight);
        record("tau-three-way-equality-symbolic",
               a.coeffs.values == b.coeffs.values && a.coeffs.values == c.coeffs.values,
               "weight <= " + std::to_string(sym_weight));
    }
    {
        bool ok = true;
        for (const auto& p : points) {
            auto t = tau_coeffs_bilinear(p, N + 2);
            ok = ok && u_from_tau(t, N).values == laurent_coeffs(p, N).coeffs.values;
        }
        auto sym = tau_coeffs_bilinear_symbolic(sym_weight + 2);
        auto c = u_from_tau(sym, sym_weight);
        auto P = modular_polynomials(sym_weight);
        ok = ok && c.values == P.values;
        record("u-tau-round-trip", ok, "u = -(log tau)'' matches the Laurent recursion");
    }
    {
        bool ok = true;
        for (const auto& p : points)
            ok = ok && ode_residual_series(p, laurent_coeffs(p, 60).coeffs).is_zero_series();
        record("laurent-ode-residual", ok, "u'' - 6u^2 + 6 lambda z + g2/2 = 0, exact");
    }
    {
        bool ok = true;
        for (const auto& p : points) {
            auto t = tau_coeffs_bilinear(p, 40);
            ok = ok && bilinear_residual_series(p.g2, p.lambda, t).is_zero_series();
            ok = ok && quartic_residual_series(p.g2, p.lambda, p.g3, t).is_zero_series();
        }
        record("tau-equation-residuals", ok, "bilinear and degree-four equations, exact");
    }
    {
        bool ok = true;
        for (const auto& p : points) ok = ok && hamiltonian_check(p, 44).ok;
        ok = ok && hamiltonian_check({Rational(3), Rational(0), Rational(5)}, 44).ok;
        record("hamiltonian-identities", ok, "h' = 6 lambda u and the full energy relation");
    }
    {
        bool ok = true;
        Rational lam(2), alpha(3), beta(3, 2);
        auto t = stratified_g2zero(8, 2);
        auto e = laurent_coeffs({Rational(0), lam, alpha * Rational(28)}, t.max_index);
        for (int K = 1; K <= t.max_index && ok; ++K) {
            int n = K / 5, pp = K % 5;
            Rational total(0);
            for (int m = 0; m <= t.m_max; ++m) {
                int el = n - 6 * m - pp;
                if (el >= 0) total += t.entry_by_index(m, K) * alpha.pow(5 * m + pp) * lam.pow(el);
            }
            ok = total == e.coeffs.at(K);
        }
        auto t2 = stratified_g3zero(8, 2);
        auto e2 = laurent_coeffs({beta * Rational(20), lam, Rational(0)}, t2.max_index);
        for (int K = 1; K <= t2.max_index && ok; ++K) {
            int n = (K + 4) / 5, pp = 5 * n - K;
            Rational total(0);
            for (int m = 0; m <= t2.m_max; ++m) {
                int el = n - 4 * m - pp;
                if (el >= 0) total += t2.entry_by_index(m, K) * beta.pow(5 * m + pp) * lam.pow(el);
            }
            ok = total == e2.coeffs.at(K);
        }
        record("stratified-reassembly", ok, "both parameter strata rebuild the coefficients");
    }
    {
        const int M = 24;
        auto t = stratified_g2zero(M, 0);
        PowerSeries<Rational> G(0, std::vector<Rational>(M), M - 1);
        PowerSeries<Rational> psi(0, std::vector<Rational>(M), M - 1);
        for (int n = 1; n <= M; ++n) {
            G.set_coeff(n - 1, t.w(n));
            psi.set_coeff(n - 1, t.v(n));
        }
        auto r = G.derivative().derivative().shifted(1) +
                 scale(G.derivative(), Rational(12, 5)) -
                 scale(series_product(G, psi, M - 3), Rational(12, 25));
        record("generating-function-ode", r.is_zero_series(),
               "x G'' + 12/5 G' = 12/25 G psi, exact");
    }
    {
        auto bad = integrality_report(60);
        record("triple-sum-integrality", bad.empty(), "all entries with s <= 60 are integers");
    }
    {
        bool ok = true;
        auto P = modular_polynomials(60);
        for (const auto& p : points) {
            auto e = laurent_coeffs(p, 60);
            for (int n = 0; n <= 60 && ok; ++n) ok = P.at(n).evaluate(p) == e.coeffs.at(n);
        }
        for (int n = 0; n <= 60 && ok; ++n) {
            auto w = P.at(n).homogeneous_weight();
            ok = w.has_value() && (P.at(n).is_zero() || *w == n);
        }
        record("modular-polynomials", ok, "evaluation and weight homogeneity");
    }
    return out;
}

} // namespace p1

#endif
