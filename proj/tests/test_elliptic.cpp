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

#include "p1/elliptic.hpp"

using namespace p1;

namespace {

MpReal tol(const char* s, int digits = 40) { return MpReal(s, working_bits(digits)); }

} // namespace

TEST_CASE("half periods from quadrature against closed forms") {
    // equianharmonic omega_1 = Gamma(1/3)^3 / (4 pi) = 1.5299540370571928749...
    MpReal om_eq = half_period(EllipticCase::equianharmonic(), 40);
    CHECK(abs(om_eq - tol("1.5299540370571928749131941723088243585728")) < tol("1e-38"));

    // lemniscatic omega_1 = B(1/4,1/2)/4; independent AGM identity
    MpReal om_lem = half_period(EllipticCase::lemniscatic(), 40);
    CHECK(abs(om_lem - tol("1.3110287771460599052324197949455597068413")) < tol("1e-38"));
    mpfr_prec_t prec = working_bits(45);
    MpReal om_agm = MpReal::pi(prec) / (agm(MpReal(1L, prec), sqrt(MpReal(2L, prec)), 42) * 2L);
    CHECK(abs(om_lem - om_agm) < tol("1e-38"));

    // precision monotonicity: 30-digit run agrees with 50-digit run
    MpReal a30 = half_period(EllipticCase::lemniscatic(), 30);
    MpReal a50 = half_period(EllipticCase::lemniscatic(), 50);
    CHECK(abs(a30 - a50) < tol("1e-30"));

    CHECK_THROWS_AS(half_period({LatticeKind::custom, Rational(1), Rational(1)}, 20),
                    std::invalid_argument);
}

TEST_CASE("eisenstein values from the Laurent route: reference tables") {
    auto eq = EllipticCase::equianharmonic();
    CHECK(abs(eisenstein_table_value(eq, 1, 30) - tol("5.86303169342540159797")) < tol("1e-20"));
    CHECK(abs(eisenstein_table_value(eq, 2, 30) - tol("6.00963997169768048102")) < tol("1e-20"));
    CHECK(abs(eisenstein_table_value(eq, 14, 30) - tol("6.00000000000000000005")) < tol("1e-20"));

    auto lem = EllipticCase::lemniscatic();
    CHECK(abs(eisenstein_table_value(lem, 1, 30) - tol("3.15121200215389753821")) < tol("1e-20"));
    CHECK(abs(eisenstein_table_value(lem, 2, 30) - tol("4.25577303536518951844")) < tol("1e-20"));
    CHECK(abs(eisenstein_table_value(lem, 14, 30) - tol("4.00000001490116124950")) < tol("1e-20"));
}

TEST_CASE("zero-by-symmetry flags and exact vanishing on the rational side") {
    auto eq = EllipticCase::equianharmonic();
    auto v = eisenstein_from_laurent(eq, 8, 20);
    CHECK(v.zero_by_symmetry);
    CHECK(v.value.is_zero());
    auto lem = EllipticCase::lemniscatic();
    CHECK(eisenstein_from_laurent(lem, 6, 20).zero_by_symmetry);

    // on the exact side: c_{2n} = 0 unless the symmetry order divides 2n
    auto ceq = laurent_coeffs(eq.params(), 60);
    for (int idx = 1; idx <= 60; ++idx)
        if (idx % 6 != 0) CHECK(ceq.coeffs.at(idx) == Rational(0));
    auto clem = laurent_coeffs(lem.params(), 60);
    for (int idx = 1; idx <= 60; ++idx)
        if (idx % 4 != 0) CHECK(clem.coeffs.at(idx) == Rational(0));
}

TEST_CASE("bernoulli numbers and zeta(2k)") {
    auto B = bernoulli_numbers(12);
    CHECK(B[0] == Rational(1));
    CHECK(B[1] == Rational(-1, 2));
    CHECK(B[2] == Rational(1, 6));
    CHECK(B[4] == Rational(-1, 30));
    CHECK(B[6] == Rational(1, 42));
    CHECK(B[12] == Rational(-691, 2730));
    // zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945
    CHECK(zeta_even_rational(2) == Rational(1, 6));
    CHECK(zeta_even_rational(4) == Rational(1, 90));
    CHECK(zeta_even_rational(6) == Rational(1, 945));
    CHECK(zeta_even_rational(8) == Rational(1, 9450));
}

TEST_CASE("q-series oracle against the tables and limits") {
    auto lem = EllipticCase::lemniscatic();
    auto eq = EllipticCase::equianharmonic();
    MpComplex tau_i = lem.tau_modular(30);
    MpComplex g4 = eisenstein_q_oracle(tau_i, 4, 30);
    CHECK(abs(g4.re - tol("3.15121200215389753821")) < tol("1e-20"));
    CHECK(abs(g4.im) < tol("1e-25"));

    // G_6(i) = 0: the lemniscatic lattice has g3 = 0
    MpComplex g6 = eisenstein_q_oracle(tau_i, 6, 30);
    CHECK(abs(g6) < tol("1e-25"));

    MpComplex tau_eq = eq.tau_modular(30);
    MpComplex g6e = eisenstein_q_oracle(tau_eq, 6, 30);
    CHECK(abs(g6e.re - tol("5.86303169342540159797")) < tol("1e-20"));

    // |tau| > 1: G_{2k}(2i) -> 2, dominated by 2(zeta(2k) - 1) ~ 2^{1-2k}
    mpfr_prec_t prec = working_bits(30);
    MpComplex two_i(MpReal(0L, prec), MpReal(2L, prec));
    MpReal prev("1", prec);
    for (int two_k : {8, 16, 24}) {
        MpComplex g = eisenstein_q_oracle(two_i, two_k, 30);
        MpReal d = abs(g - MpComplex(2L, prec));
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < tol("1e-6"));

    // |q| >= 1 rejected
    MpComplex lower(MpReal(0L, prec), MpReal(-1L, prec));
    CHECK_THROWS_AS(eisenstein_q_oracle(lower, 4, 20), std::domain_error);
}

TEST_CASE("cross-oracle agreement on all printed table rows") {
    for (auto c : {EllipticCase::equianharmonic(), EllipticCase::lemniscatic()}) {
        MpComplex tau = c.tau_modular(32);
        for (int n : {1, 2, 3, 4, 5, 6, 11, 12, 13, 14}) {
            MpReal a = eisenstein_table_value(c, n, 30);
            MpComplex b = eisenstein_q_oracle(tau, c.symmetry_order() * n, 30);
            CHECK(abs(MpComplex(a) - b) < tol("1e-28"));
        }
    }
}

TEST_CASE("lattice sum sanity oracle at low precision") {
    auto g4 = eisenstein_lattice_sum({0.0, 1.0}, 4, 600);
    CHECK(std::abs(g4.real() - 3.151212002153898) < 1e-3);
    CHECK(std::abs(g4.imag()) < 1e-6);
    auto g6 = eisenstein_lattice_sum({0.5, 0.8660254037844386}, 6, 600);
    CHECK(std::abs(g6.real() - 5.863031693425402) < 1e-3);
}

TEST_CASE("hurwitz numbers: recurrence values and the numeric bridge") {
    auto H = hurwitz_numbers(10);
    CHECK(H.at(1) == Rational(1, 10));
    CHECK(H.at(2) == Rational(3, 10));
    CHECK(H.at(3) == Rational(567, 130));
    // Bridge: H_n = (4n)! G_{4n}(i) / (4 omega_1)^{4n}, 15-digit agreement
    auto lem = EllipticCase::lemniscatic();
    MpReal om = half_period(lem, 45);
    mpfr_prec_t prec = working_bits(45);
    for (int n = 1; n <= 10; ++n) {
        MpReal G = eisenstein_table_value(lem, n, 40);
        MpReal bridge = G * MpReal(Rational(factorial(static_cast<unsigned long>(4 * n))), prec) /
                        pow_si(om * 4L, 4 * n);
        MpReal exact(H.at(n), prec);
        CHECK(abs(bridge - exact) < abs(exact) * tol("1e-15"));
    }
}

TEST_CASE("eisenstein limit values decay geometrically") {
    // |G - limit| shrinks by a stable ratio < 1 (second lattice ring)
    auto eq = EllipticCase::equianharmonic();
    auto lem = EllipticCase::lemniscatic();
    mpfr_prec_t prec = working_bits(40);
    for (auto& [c, limit] : {std::pair{eq, 6L}, std::pair{lem, 4L}}) {
        MpReal prev(0L, prec);
        for (int n = 1; n <= 12; ++n) {
            MpReal d = abs(eisenstein_table_value(c, n, 35) - MpReal(limit, prec));
            if (n > 1) CHECK(d < prev);
            prev = d;
        }
    }
}
