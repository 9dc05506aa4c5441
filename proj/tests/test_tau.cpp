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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1/tau.hpp"

using namespace p1;

namespace {

std::mt19937 rng(31415u);
Rational random_rational(long max_abs = 9) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

const ParameterTriple pentagonal{Rational(0), Rational(1), Rational(0)};

} // namespace

TEST_CASE("hirota b values and symmetry") {
    CHECK(hirota_b(1, 1) == 0);
    CHECK(hirota_b(4, 0) == 24);
    CHECK(hirota_b(2, 3) == 24);
    CHECK(hirota_b(3, 2) == 24);
    for (int j = 0; j <= 12; ++j)
        for (int k = 0; k <= 12; ++k) CHECK(hirota_b(j, k) == hirota_b(k, j));
}

TEST_CASE("bilinear recursion: low-order symbolic coefficients") {
    auto t = tau_coeffs_bilinear_symbolic(8);
    CHECK(t.coeffs.at(0) == WeightedPolynomial(Rational(1)));
    CHECK(t.coeffs.at(1).is_zero());
    CHECK(t.coeffs.at(2).is_zero());
    CHECK(t.coeffs.at(3).is_zero());
    CHECK(t.coeffs.at(4) == WeightedPolynomial::g2(Rational(-1, 240)));
    CHECK(t.coeffs.at(5) == WeightedPolynomial::lambda(Rational(-1, 20)));
    CHECK(t.coeffs.at(6) == WeightedPolynomial::g3(Rational(-1, 840)));
    // C_8 = -g2^2/161280 (classical sigma expansion)
    CHECK(t.coeffs.at(8) == WeightedPolynomial::monomial({2, 0, 0}, Rational(-1, 161280)));
}

TEST_CASE("bilinear recursion: pentagonal series display values") {
    auto t = tau_coeffs_bilinear(pentagonal, 21);
    CHECK(t.coeffs.at(5) == Rational(-1, 20));
    CHECK(t.coeffs.at(10) == Rational(-7, 26400));
    CHECK(t.coeffs.at(15) == Rational(1, 1232000));
    CHECK(t.coeffs.at(20) == Rational(83, 117976320000));
    // only indices divisible by 5 are populated
    for (int n = 1; n <= 21; ++n)
        if (n % 5 != 0) CHECK(t.coeffs.at(n) == Rational(0));
}

TEST_CASE("quartic recursion determines C6 from the equation itself") {
    auto q = tau_coeffs_quartic_symbolic(8);
    CHECK(q.coeffs.at(2).is_zero());
    CHECK(q.coeffs.at(3).is_zero());
    CHECK(q.coeffs.at(4) == WeightedPolynomial::g2(Rational(-1, 240)));
    CHECK(q.coeffs.at(5) == WeightedPolynomial::lambda(Rational(-1, 20)));
    CHECK(q.coeffs.at(6) == WeightedPolynomial::g3(Rational(-1, 840)));
}

TEST_CASE("quartic recursion: pentagonal value and cross-path equality") {
    auto q = tau_coeffs_quartic(pentagonal, 15);
    CHECK(q.coeffs.at(15) == Rational(1, 1232000));

    auto qs = tau_coeffs_quartic_symbolic(20);
    auto bs = tau_coeffs_bilinear_symbolic(20);
    CHECK(qs.coeffs.values == bs.coeffs.values);

    for (int trial = 0; trial < 3; ++trial) {
        ParameterTriple p{random_rational(), random_rational(), random_rational()};
        auto a = tau_coeffs_bilinear(p, 40);
        auto b = tau_coeffs_quartic(p, 40);
        CHECK(a.coeffs.values == b.coeffs.values);
    }
}

TEST_CASE("triple sum: the printed coefficient matrices") {
    auto t = triple_sum_coeffs(31);
    const long M0[3][3] = {{1, -3, -54}, {-1, -18, 4968}, {-9, 513, 257580}};
    const long M1[3][3] = {{-6, -216, 89424},
                           {-84, 18720, 5786640},
                           {1650, 1358640, 1168920720}};
    const long M2[3][3] = {{-294, 144144, 47585880},
                           {18774, 15053040, 22914336240},
                           {1112436, 3160803600, -2734614623160}};
    for (int l = 0; l < 3; ++l)
        for (int n = 0; n < 3; ++n) {
            CHECK(t.at(l, 0, n) == Rational(M0[l][n]));
            CHECK(t.at(l, 1, n) == Rational(M1[l][n]));
            CHECK(t.at(l, 2, n) == Rational(M2[l][n]));
        }
    CHECK(t.at(0, 0, 0) == Rational(1));
    CHECK(t.at(0, 0, 1) == Rational(-3));
}

TEST_CASE("triple sum enumeration order is by s, then lexicographic") {
    auto t = triple_sum_coeffs(20);
    int prev_s = 0;
    std::array<int, 3> prev{-1, -1, -1};
    for (const auto& e : t.entries) {
        int s = triple_sum_s(e.l, e.m, e.n);
        CHECK(s >= prev_s);
        if (s == prev_s) CHECK(std::array<int, 3>{e.l, e.m, e.n} > prev);
        prev_s = s;
        prev = {e.l, e.m, e.n};
    }
}

TEST_CASE("integrality of the triple-sum coefficients, moderate range") {
    CHECK(integrality_report(40).empty());
}

TEST_CASE("triple-sum reconstruction matches the other recursions") {
    auto table = triple_sum_coeffs(42);
    // numeric, random rational parameters
    for (int trial = 0; trial < 3; ++trial) {
        ParameterTriple p{random_rational(), random_rational(), random_rational()};
        auto a = tau_from_triple_sum(table, p, 41);
        auto b = tau_coeffs_bilinear(p, 41);
        CHECK(a.coeffs.values == b.coeffs.values);
    }
    // symbolic
    auto sym = tau_from_triple_sum_symbolic(table, 41);
    auto bsym = tau_coeffs_bilinear_symbolic(41);
    CHECK(sym.coeffs.values == bsym.coeffs.values);
    // sigma slice: lambda = 0 entries are a_{m,n} = A_{m,0,n}
    auto C6 = sym.coeffs.at(6);
    CHECK(C6 == WeightedPolynomial::g3(Rational(-1, 840)));
    CHECK(table.at(0, 1, 0) == Rational(-6));
    CHECK_THROWS_AS(tau_from_triple_sum(table, pentagonal, 60), coverage_error);
}

TEST_CASE("u_from_tau: single-term checks and the cross-module oracle") {
    // from C4 = -g2/240 alone: c4 = g2/20
    auto sym = tau_coeffs_bilinear_symbolic(12);
    auto c = u_from_tau(sym, 10);
    CHECK(c.at(0) == WeightedPolynomial(Rational(1)));
    CHECK(c.at(4) == WeightedPolynomial::g2(Rational(1, 20)));
    CHECK(c.at(5) == WeightedPolynomial::lambda());
    CHECK(c.at(6) == WeightedPolynomial::g3(Rational(1, 28)));

    // pentagonal: coefficient of z^3 in u is c_5 = 1 at lambda = 1
    auto tp = tau_coeffs_bilinear(pentagonal, 12);
    auto cp = u_from_tau(tp, 10);
    CHECK(cp.at(5) == Rational(1));

    // full symbolic match with the modular polynomials to weight 40
    auto sym40 = tau_coeffs_bilinear_symbolic(42);
    auto c40 = u_from_tau(sym40, 40);
    auto P = modular_polynomials(40);
    for (int n = 0; n <= 40; ++n) CHECK(c40.at(n) == P.at(n));
}

TEST_CASE("u_from_tau round trip numerically") {
    for (int trial = 0; trial < 3; ++trial) {
        ParameterTriple p{random_rational(), random_rational(), random_rational()};
        auto tb = tau_coeffs_bilinear(p, 62);
        auto c = u_from_tau(tb, 60);
        auto e = laurent_coeffs(p, 60);
        CHECK(c.values == e.coeffs.values);
    }
}

TEST_CASE("bilinear and quartic residual series vanish on a solution table") {
    for (int trial = 0; trial < 2; ++trial) {
        ParameterTriple p{random_rational(), random_rational(), random_rational()};
        auto t = tau_coeffs_bilinear(p, 36);
        auto rb = bilinear_residual_series(p.g2, p.lambda, t);
        CHECK(rb.order() == 34);
        CHECK(rb.is_zero_series());
        auto rq = quartic_residual_series(p.g2, p.lambda, p.g3, t);
        CHECK(rq.order() == 34);
        CHECK(rq.is_zero_series());
    }
    // symbolic residuals vanish identically as polynomials
    auto sym = tau_coeffs_bilinear_symbolic(24);
    auto rb = bilinear_residual_series(WeightedPolynomial::g2(), WeightedPolynomial::lambda(),
                                       sym);
    CHECK(rb.is_zero_series());
    auto rq = quartic_residual_series(WeightedPolynomial::g2(), WeightedPolynomial::lambda(),
                                      WeightedPolynomial::g3(), sym);
    CHECK(rq.is_zero_series());
}

TEST_CASE("Euler homogeneity: symbolic C_n has weight n") {
    auto sym = tau_coeffs_bilinear_symbolic(40);
    for (int n = 0; n <= 40; ++n) {
        auto w = sym.coeffs.at(n).homogeneous_weight();
        REQUIRE(w.has_value());
        if (!sym.coeffs.at(n).is_zero()) CHECK(*w == n);
        for (long z : {2L, -1L})
            CHECK(sym.coeffs.at(n).scale_weights(Rational(z)) ==
                  scale(sym.coeffs.at(n), Rational(z).pow(n)));
    }
}

TEST_CASE("hamiltonian identities hold exactly") {
    auto r1 = hamiltonian_check(pentagonal, 60);
    CHECK(r1.ok);
    // lambda = 0: h vanishes identically, first-order Weierstrass equation
    auto r2 = hamiltonian_check({Rational(3), Rational(0), Rational(5)}, 40);
    CHECK(r2.ok);
    for (int trial = 0; trial < 2; ++trial) {
        ParameterTriple p{random_rational(), random_rational(), random_rational()};
        auto r = hamiltonian_check(p, 40);
        CHECK(r.ok);
        CHECK(r.max_abs_deviation == Rational(0));
    }
}

TEST_CASE("gauge transformation leaves u unchanged") {
    ParameterTriple p{random_rational(), random_rational(), random_rational()};
    const int N = 30;
    auto t = tau_coeffs_bilinear(p, N);
    Rational a(3, 7), kappa(5, 2);
    auto gauged = apply_gauge(t, a, kappa, N);
    // normalize: tau~ / (kappa z) is a unit series
    PowerSeries<Rational> unit(0, std::vector<Rational>(static_cast<std::size_t>(N)), N - 1);
    for (int e = 0; e < N; ++e) unit.set_coeff(e, gauged.coeff(e + 1) / kappa);
    auto L = series_log_unit(unit, N - 1);
    auto e0 = laurent_coeffs(p, N - 1);
    for (int n = 2; n <= N - 1; ++n) {
        Rational cn = L.coeff(n) * Rational(-static_cast<long>(n) * (n - 1));
        CHECK(cn == e0.coeffs.at(n));
    }
}
