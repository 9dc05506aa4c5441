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

#ifndef P1SERIES_ELLIPTIC_HPP
#define P1SERIES_ELLIPTIC_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "p1/coefficient_table.hpp"
#include "p1/errors.hpp"
#include "p1/laurent.hpp"
#include "p1/mp.hpp"
#include "p1/quadrature.hpp"
#include "p1/rational.hpp"

namespace p1 {

// ---------------------------------------------------------------------------
// The two lambda = 0 special lattices. Equianharmonic: (g2, g3) = (0, 1),
// normalized period ratio exp(i pi/3), hexagonal pole pattern.
// Lemniscatic: (g2, g3) = (4, 0), period ratio i, square pole pattern.
// ---------------------------------------------------------------------------

enum class LatticeKind { equianharmonic, lemniscatic, custom };

struct EllipticCase {
    LatticeKind kind = LatticeKind::custom;
    Rational g2, g3;

    static EllipticCase equianharmonic() {
        return {LatticeKind::equianharmonic, Rational(0), Rational(1)};
    }
    static EllipticCase lemniscatic() {
        return {LatticeKind::lemniscatic, Rational(4), Rational(0)};
    }

    /// Order of the rotational symmetry of the coefficient support.
    int symmetry_order() const {
        switch (kind) {
            case LatticeKind::equianharmonic: return 6;
            case LatticeKind::lemniscatic: return 4;
            default: throw std::invalid_argument("EllipticCase: custom lattice unsupported");
        }
    }

    ParameterTriple params() const { return {g2, Rational(0), g3}; }

    /// omega_2 / omega_1 for the normalized lattice; Im > 0.
    MpComplex tau_modular(int digits) const {
        mpfr_prec_t prec = working_bits(digits);
        switch (kind) {
            case LatticeKind::equianharmonic: {
                // exp(i pi / 3) = 1/2 + i sqrt(3)/2
                MpReal half = MpReal(1L, prec) / 2L;
                return MpComplex(half, sqrt(MpReal(3L, prec)) / 2L);
            }
            case LatticeKind::lemniscatic: return MpComplex::i(prec);
            default: throw std::invalid_argument("EllipticCase: custom lattice unsupported");
        }
    }
};

/// Arithmetic-geometric mean; quadratically convergent.
inline MpReal agm(MpReal a, MpReal b, int digits) {
    mpfr_prec_t prec = working_bits(digits + 5);
    MpReal eps = MpReal(1L, prec) / pow_si(MpReal(10L, prec), digits + 3);
    for (int i = 0; i < 200; ++i) {
        MpReal a2 = (a + b) / 2L;
        MpReal b2 = sqrt(a * b);
        a = a2;
        b = b2;
        if (abs(a - b) < eps) return a;
    }
    throw numerical_error("agm: no convergence");
}

/// Real half-period omega_1 by tanh-sinh quadrature of the defining
/// integral, reduced to the unit interval:
///   equianharmonic: int_{e1}^inf dx/sqrt(4x^3-1), e1 = 4^{-1/3},
///                   = 2 * 4^{-1/3} * int_0^1 dt/sqrt(1-t^6)
///   lemniscatic:    int_0^1 dt/sqrt(1-t^4)
inline MpReal half_period(const EllipticCase& c, int digits) {
    mpfr_prec_t prec = working_bits(digits + 5);
    switch (c.kind) {
        case LatticeKind::equianharmonic: {
            MpReal I = tanh_sinh_01(
                [&](const MpReal& x, const MpReal& omx) {
                    MpReal one(1L, prec);
                    MpReal x2 = x * x;
                    MpReal geom = one + x + x2 + x2 * x + x2 * x2 + x2 * x2 * x;
                    return one / sqrt(omx * geom);
                },
                digits);
            MpReal e1 = MpReal(1L, prec) / root_ui(MpReal(4L, prec), 3);
            return I * e1 * 2L;
        }
        case LatticeKind::lemniscatic:
            return tanh_sinh_01(
                [&](const MpReal& x, const MpReal& omx) {
                    MpReal one(1L, prec);
                    return one / sqrt(omx * (one + x + x * x + x * x * x));
                },
                digits);
        default:
            throw std::invalid_argument("half_period: no closed form assumed for custom lattices");
    }
}

// ---------------------------------------------------------------------------
// Eisenstein series values recovered from the exact Laurent coefficients:
//   G_{2n} = c_{2n} (2 omega_1)^{2n} / (2n - 1).
// ---------------------------------------------------------------------------

struct EisensteinValue {
    MpReal value;
    bool zero_by_symmetry = false;
};

inline EisensteinValue eisenstein_from_laurent(const EllipticCase& c, int index, int digits) {
    if (index < 4 || index % 2 != 0)
        throw std::invalid_argument("eisenstein_from_laurent: even index >= 4 required");
    int order = c.symmetry_order();
    if (index % order != 0) return {MpReal(0L, working_bits(digits)), true};
    // relative error of (2w)^index is index times that of w
    int extra = 8;
    for (int t = index; t > 0; t /= 10) extra += 2;
    MpReal om = half_period(c, digits + extra);
    LaurentExpansion e = laurent_coeffs(c.params(), index);
    mpfr_prec_t prec = working_bits(digits + extra);
    MpReal G = MpReal(e.coeffs.at(index), prec) *
               pow_si(om * 2L, index) / static_cast<long>(index - 1);
    return {G, false};
}

/// Table row n: G_{6n} (equianharmonic) or G_{4n} (lemniscatic).
inline MpReal eisenstein_table_value(const EllipticCase& c, int n, int digits) {
    return eisenstein_from_laurent(c, c.symmetry_order() * n, digits).value;
}

// ---------------------------------------------------------------------------
// Independent q-series oracle:
//   G_{2k}(tau) = 2 zeta(2k) ( 1 - (4k / B_{2k}) sum_{n>=1} sigma_{2k-1}(n) q^n ),
//   q = exp(2 pi i tau),  zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!).
// ---------------------------------------------------------------------------

inline std::vector<Rational> bernoulli_numbers(int n_max) {
    std::vector<Rational> B(static_cast<std::size_t>(n_max) + 1);
    B[0] = Rational(1);
    for (int m = 1; m <= n_max; ++m) {
        Rational s(0);
        for (int j = 0; j < m; ++j)
            s += Rational(binomial(static_cast<unsigned long>(m + 1),
                                   static_cast<unsigned long>(j))) *
                 B[static_cast<std::size_t>(j)];
        B[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
    }
    return B;
}

/// zeta(2k) = r * pi^{2k} with exact rational r.
inline Rational zeta_even_rational(int two_k) {
    if (two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("zeta_even_rational: even argument >= 2 required");
    int k = two_k / 2;
    Rational B = bernoulli_numbers(two_k)[static_cast<std::size_t>(two_k)];
    Rational r = B * Rational(mpz_class(1) << (two_k - 1),
                              factorial(static_cast<unsigned long>(two_k)));
    return (k % 2 == 0) ? -r : r;
}

inline mpz_class divisor_power_sum(int n, int p) {
    mpz_class s(0), dp;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(p));
            s += dp;
        }
    return s;
}

inline MpComplex eisenstein_q_oracle(const MpComplex& tau, int two_k, int digits) {
    if (two_k < 4 || two_k % 2 != 0)
        throw std::invalid_argument("eisenstein_q_oracle: even weight >= 4 required");
    mpfr_prec_t prec = working_bits(digits + 8);
    MpReal two_pi = MpReal::pi(prec) * 2L;
    MpComplex q = exp(MpComplex(-two_pi * tau.im, two_pi * tau.re));
    if (!(abs(q) < MpReal(1L, prec)))
        throw std::domain_error("eisenstein_q_oracle: |q| >= 1 (need Im tau > 0)");
    MpReal eps = MpReal(1L, prec) / pow_si(MpReal(10L, prec), digits + 8);
    MpComplex sum(0L, prec);
    MpComplex qn(1L, prec);
    for (int n = 1; n < 10000; ++n) {
        qn = qn * q;
        MpComplex term = qn * MpReal(Rational(divisor_power_sum(n, two_k - 1)), prec);
        sum += term;
        if (abs(term) < eps * max(MpReal(1L, prec), abs(sum)) && n >= 4) break;
    }
    Rational B = bernoulli_numbers(two_k)[static_cast<std::size_t>(two_k)];
    MpReal zeta = MpReal(zeta_even_rational(two_k), prec) * pow_si(MpReal::pi(prec), two_k);
    MpComplex one(1L, prec);
    MpComplex E = one - sum * MpReal(Rational(2 * two_k) / B, prec);
    return E * (zeta * 2L);
}

/// Truncated direct lattice sum sum_{(p,q) != 0} (p + tau q)^{-2k} in double
/// precision; polynomially convergent, usable only as a coarse sanity check.
inline std::complex<double> eisenstein_lattice_sum(std::complex<double> tau, int two_k,
                                                   int max_pq) {
    std::complex<double> s(0.0, 0.0);
    for (int q = -max_pq; q <= max_pq; ++q)
        for (int p = -max_pq; p <= max_pq; ++p) {
            if (p == 0 && q == 0) continue;
            std::complex<double> w = static_cast<double>(p) + tau * static_cast<double>(q);
            std::complex<double> w2 = w * w;
            std::complex<double> acc(1.0, 0.0);
            std::complex<double> base = 1.0 / w2;
            for (int i = 0; i < two_k / 2; ++i) acc *= base;
            s += acc;
        }
    return s;
}

// ---------------------------------------------------------------------------
// Hurwitz numbers H_n = (4n)! G_{4n}(i) / (4 omega_1)^{4n}:
//   H_n = 3/((2n-3)(16n^2-1)) sum_{k=1}^{n-1} (4k-1)(4n-4k-1) C(4n,4k) H_k H_{n-k},
// seeded with H_1 = 1/10 (verified against the lemniscatic bridge).
// ---------------------------------------------------------------------------

inline CoefficientTable<Rational> hurwitz_numbers(int N) {
    if (N < 1) throw std::invalid_argument("hurwitz_numbers: need N >= 1");
    CoefficientTable<Rational> t;
    t.first_index = 1;
    t.producer = "hurwitz";
    t.order = N;
    std::vector<Rational> H(static_cast<std::size_t>(N) + 1);
    H[1] = Rational(1, 10);
    for (int n = 2; n <= N; ++n) {
        Rational s(0);
        for (int k = 1; k < n; ++k) {
            mpz_class w = mpz_class((4 * k - 1) * (4 * (n - k) - 1)) *
                          binomial(static_cast<unsigned long>(4 * n),
                                   static_cast<unsigned long>(4 * k));
            s += Rational(w) * H[static_cast<std::size_t>(k)] *
                 H[static_cast<std::size_t>(n - k)];
        }
        H[static_cast<std::size_t>(n)] =
            s * Rational(3, static_cast<long>(2 * n - 3) * (16L * n * n - 1));
    }
    t.values.assign(H.begin() + 1, H.end());
    return t;
}

} // namespace p1

#endif
