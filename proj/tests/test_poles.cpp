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

#include <sstream>

#include "p1/elliptic.hpp"
#include "p1/pole_locator.hpp"

using namespace p1;

namespace {

const ParameterTriple pentagonal{Rational(0), Rational(1), Rational(0)};
MpReal tol(const char* s, int digits = 40) { return MpReal(s, working_bits(digits)); }

} // namespace

TEST_CASE("polynomial roots: quadratic and rotational symmetry") {
    mpfr_prec_t prec = working_bits(30);
    // w^2 - 3w + 2 -> {1, 2}
    std::vector<MpComplex> q{MpComplex(2L, prec), MpComplex(-3L, prec), MpComplex(1L, prec)};
    auto r = polynomial_roots(q, 25);
    REQUIRE(r.size() == 2);
    std::sort(r.begin(), r.end(),
              [](const MpComplex& a, const MpComplex& b) { return a.re < b.re; });
    CHECK(abs(r[0] - MpComplex(1L, prec)) < tol("1e-24"));
    CHECK(abs(r[1] - MpComplex(2L, prec)) < tol("1e-24"));

    // z^5 - gamma: fifth roots of gamma, radially symmetric
    MpReal gamma("18.32138268472483887119960", prec);
    std::vector<MpComplex> p(6, MpComplex(0L, prec));
    p[0] = MpComplex(-gamma, MpReal(0L, prec));
    p[5] = MpComplex(1L, prec);
    auto r5 = polynomial_roots(p, 25);
    REQUIRE(r5.size() == 5);
    MpReal want = root_ui(gamma, 5);
    for (const auto& z : r5) CHECK(abs(abs(z) - want) < tol("1e-22"));

    // degree guard, zero roots
    std::vector<MpComplex> c1{MpComplex(3L, prec)};
    CHECK_THROWS_AS(polynomial_roots(c1, 10), std::invalid_argument);
    std::vector<MpComplex> zz{MpComplex(0L, prec), MpComplex(0L, prec), MpComplex(1L, prec)};
    auto r0 = polynomial_roots(zz, 15);
    REQUIRE(r0.size() == 2);
    CHECK(abs(r0[0]).is_zero());
    CHECK(abs(r0[1]).is_zero());
}

TEST_CASE("truncated tau polynomial: pentagonal support and leading terms") {
    auto p = truncated_tau_poly(pentagonal, 21, 20);
    CHECK(p.stride == 5);
    CHECK(abs(p.coeffs[0]).is_zero());
    CHECK(abs(p.coeffs[1] - MpComplex(1L, p.coeffs[1].prec())) < tol("1e-30"));
    // z - z^6/20 - 7 z^11/26400 + z^16/1232000 + 83 z^21/117976320000
    mpfr_prec_t prec = p.coeffs[1].prec();
    CHECK(abs(p.coeffs[6] - MpComplex(Rational(-1, 20), prec)) < tol("1e-30"));
    CHECK(abs(p.coeffs[11] - MpComplex(Rational(-7, 26400), prec)) < tol("1e-30"));
    CHECK(abs(p.coeffs[16] - MpComplex(Rational(1, 1232000), prec)) < tol("1e-30"));
    CHECK(abs(p.coeffs[21] - MpComplex(Rational(83, 117976320000L), prec)) < tol("1e-35"));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (i % 5 != 1) CHECK(abs(p.coeffs[i]).is_zero());
    // reduced polynomial has degree 4 here: exponents 1,6,11,16,21
    CHECK(p.reduced.size() == 5);

    // sigma truncation: C_4 = -g2/240, C_6 = -g3/840, stride 2
    auto ps = truncated_tau_poly({Rational(3), Rational(0), Rational(5)}, 20, 20);
    CHECK(ps.stride == 2);
    CHECK(abs(ps.coeffs[5] - MpComplex(Rational(-3, 240), prec)) < tol("1e-30"));
    CHECK(abs(ps.coeffs[7] - MpComplex(Rational(-5, 840), prec)) < tol("1e-30"));
}

TEST_CASE("smallest root of the reduced pentagonal truncation is gamma") {
    auto p = truncated_tau_poly(pentagonal, 501, 30);
    CHECK(p.reduced.size() == 101);
    auto roots = polynomial_roots(p.reduced, 30);
    REQUIRE(roots.size() == 100);
    MpComplex smallest = roots.front();
    for (const auto& w : roots)
        if (abs(w) < abs(smallest)) smallest = w;
    MpReal gamma("18.32138268472483887119960056", working_bits(40));
    CHECK(abs(smallest.re - gamma) < tol("1e-24"));
    CHECK(abs(smallest.im) < tol("1e-24"));
}

TEST_CASE("trusted zeros: pentagonal constellation") {
    auto set = trusted_zeros(pentagonal, 501, 25);
    CHECK(set.order_hi == 625);
    CHECK(set.zeros.size() % 5 == 0);
    CHECK(set.zeros.size() >= 25);

    // nearest zero modulus = gamma^{1/5} ~ 1.7889230058956
    MpReal nearest = abs(set.zeros.front().z);
    CHECK(abs(nearest - tol("1.788923005895606089")) < tol("1e-12"));

    // rotation by 2 pi/5 permutes the set
    mpfr_prec_t prec = set.zeros.front().z.prec();
    MpReal theta = MpReal::pi(prec) * 2L / 5L;
    MpComplex rot = MpComplex::polar(MpReal(1L, prec), theta);
    for (const auto& z : set.zeros) {
        MpComplex r = z.z * rot;
        MpReal best = abs(r - set.zeros.front().z);
        for (const auto& c : set.zeros) best = min(best, abs(r - c.z));
        CHECK(best < tol("1e-10"));
    }
    // residuals and simple-zero slope
    for (const auto& z : set.zeros) CHECK(z.residual < tol("1e-10"));
    CHECK(set.trust_radius >= nearest);
}

TEST_CASE("trusted zeros: lemniscatic lattice corners") {
    ParameterTriple lem{Rational(4), Rational(0), Rational(0)};
    auto set = trusted_zeros(lem, 200, 25);
    // sigma vanishes on the period lattice: nearest zeros at +-2w1, +-2iw1
    MpReal two_omega = tol("2.6220575542921198104") ;
    REQUIRE(set.zeros.size() >= 4);
    for (int i = 0; i < 4; ++i) CHECK(abs(abs(set.zeros[i].z) - two_omega) < tol("1e-12"));
    // one on each half-axis
    int on_real = 0, on_imag = 0;
    for (int i = 0; i < 4; ++i) {
        if (abs(set.zeros[i].z.im) < tol("1e-12")) ++on_real;
        if (abs(set.zeros[i].z.re) < tol("1e-12")) ++on_imag;
    }
    CHECK(on_real == 2);
    CHECK(on_imag == 2);
}

TEST_CASE("gamma constant: both methods agree on the known 23-digit value") {
    auto g = gamma_constant(23);
    MpReal reference("18.32138268472483887119960", working_bits(40));
    CHECK(abs(g.value - reference) < tol("1e-23"));
    CHECK(abs(g.ratio_estimate - reference) < tol("1e-23"));
    CHECK(abs(g.root_estimate - reference) < tol("1e-23"));
    CHECK(abs(g.ratio_estimate - g.root_estimate) < tol("1e-23"));
    CHECK_THROWS_AS(gamma_constant(99), std::domain_error);

    // digits monotonicity: a 15-digit request is a prefix of a 25-digit one
    auto g15 = gamma_constant(15);
    auto g25 = gamma_constant(25);
    CHECK(g15.value.to_string(15) == g25.value.to_string(15));
}

TEST_CASE("pole map export: csv rows and svg markers") {
    auto set = trusted_zeros(pentagonal, 301, 20);
    std::ostringstream csv;
    export_pole_map_csv(set, csv, 20);
    std::string text = csv.str();
    std::size_t rows = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) - 1;
    CHECK(rows == set.zeros.size());
    CHECK(rows % 5 == 0);
    CHECK(text.rfind("re,im,stability\n", 0) == 0);

    std::ostringstream svg;
    export_pole_map_svg(set, svg);
    std::string stext = svg.str();
    std::size_t markers = 0;
    for (std::size_t at = stext.find("<circle"); at != std::string::npos;
         at = stext.find("<circle", at + 1))
        ++markers;
    CHECK(markers == rows);
    CHECK(stext.find("<svg") == 0);

    // determinism: the same request gives byte-identical output
    std::ostringstream csv2;
    export_pole_map_csv(trusted_zeros(pentagonal, 301, 20), csv2, 20);
    CHECK(csv.str() == csv2.str());
}

TEST_CASE("trusted zeros are simple: tau' bounded away from zero") {
    auto p = truncated_tau_poly(pentagonal, 301, 20);
    auto set = trusted_zeros(pentagonal, 301, 20);
    mpfr_prec_t prec = set.zeros.front().z.prec();
    for (const auto& z : set.zeros) {
        // tau' = phat(w) + stride * w * phat'(w) at w = z^stride
        MpComplex w = pow_ui(z.z, static_cast<unsigned long>(p.stride));
        MpComplex val(0L, prec), dval(0L, prec);
        for (int i = static_cast<int>(p.reduced.size()) - 1; i >= 0; --i) {
            dval = dval * w + val;
            val = val * w + p.reduced[static_cast<std::size_t>(i)];
        }
        MpComplex tprime = val + dval * w * MpReal(static_cast<long>(p.stride), prec);
        CHECK(abs(tprime) > tol("1e-4"));
    }
}

TEST_CASE("root displacement shrinks monotonically with the truncation order") {
    auto smallest_root = [](int N) {
        auto p = truncated_tau_poly(pentagonal, N, 25);
        auto roots = polynomial_roots(p.reduced, 25);
        MpComplex best = roots.front();
        for (const auto& w : roots)
            if (abs(w) < abs(best)) best = w;
        return best;
    };
    MpComplex ref = smallest_root(201);
    MpReal d1 = abs(smallest_root(21) - ref);
    MpReal d2 = abs(smallest_root(46) - ref);
    MpReal d3 = abs(smallest_root(101) - ref);
    CHECK(d2 < d1);
    CHECK(d3 < d2);
}

TEST_CASE("sweep cap failure carries partial results") {
    mpfr_prec_t prec = working_bits(20);
    std::vector<MpComplex> poly(8, MpComplex(1L, prec));
    try {
        polynomial_roots(poly, 20, 1);
        FAIL("expected root_failure");
    } catch (const root_failure& e) {
        CHECK(e.partial.size() == 7);
    }
}

TEST_CASE("re-expansion around a located zero recovers the shifted g2") {
    auto p = truncated_tau_poly(pentagonal, 501, 25);
    auto set = trusted_zeros(pentagonal, 501, 25);
    MpComplex omega = set.zeros.front().z;
    auto re = reexpand_at_zero(p, omega);
    // A = tau'(Omega) is nonzero (simple zero), and g2_hat = g2 + 12 lambda Omega
    CHECK(abs(re.A) > tol("1e-6"));
    MpComplex want = omega * MpReal(12L, omega.prec());
    CHECK(abs(re.g2_hat - want) < tol("1e-8"));
    // g3_hat exists; no closed form is asserted for it
    CHECK(!abs(re.g3_hat).is_nan());
}
