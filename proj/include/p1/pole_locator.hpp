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

#ifndef P1SERIES_POLE_LOCATOR_HPP
#define P1SERIES_POLE_LOCATOR_HPP

#include <chrono>
#include <numeric>
#include <ostream>
#include <vector>

#include "p1/errors.hpp"
#include "p1/laurent.hpp"
#include "p1/roots.hpp"
#include "p1/tau.hpp"

namespace p1 {

struct insufficient_order_error : numerical_error {
    using numerical_error::numerical_error;
};

// ---------------------------------------------------------------------------
// Polynomial truncations of tau. Zeros of tau are the double poles of u,
// so stable roots of the truncation approximate the pole set.
// ---------------------------------------------------------------------------

/// Float image of the exact tau table at working precision; when the
/// exponent support allows it the polynomial factors as z * phat(z^stride),
/// which cuts the root-finding degree by the stride.
struct TruncatedTauPoly {
    ParameterTriple params;
    int order = 0;  // C_n kept for n <= order; polynomial degree order+1
    int digits = 0;
    int stride = 1;
    std::vector<MpComplex> coeffs;  // tau coefficients, ascending in z
    std::vector<MpComplex> reduced; // phat coefficients in w = z^stride

    /// tau_N at a point, evaluated through the factored form.
    MpComplex evaluate(const MpComplex& z) const {
        MpComplex w = pow_ui(z, static_cast<unsigned long>(stride));
        MpComplex acc(0L, w.prec());
        for (int i = static_cast<int>(reduced.size()) - 1; i >= 0; --i)
            acc = acc * w + reduced[static_cast<std::size_t>(i)];
        return acc * z;
    }
};

inline TruncatedTauPoly truncated_tau_poly(const ParameterTriple& params, int N, int digits) {
    if (N < 6) throw std::invalid_argument("truncated_tau_poly: need N >= 6");
    TruncatedTauPoly p;
    p.params = params;
    p.order = N;
    p.digits = digits;
    TauExpansion<Rational> t = tau_coeffs_bilinear(params, N);
    // conversion from exact to float happens once, at root-finder precision
    mpfr_prec_t prec = bits_for_digits(2 * digits + (N + 4) / 4 + 10);
    p.coeffs.assign(static_cast<std::size_t>(N) + 2, MpComplex(0L, prec));
    p.coeffs[1] = MpComplex(1L, prec);
    int stride = 0;
    for (int n = 2; n <= N; ++n) {
        if (t.coeffs.at(n).is_zero()) continue;
        p.coeffs[static_cast<std::size_t>(n) + 1] = MpComplex(t.coeffs.at(n), prec);
        stride = std::gcd(stride, n);
    }
    p.stride = stride == 0 ? 1 : stride;
    int deg = N / p.stride; // reduced degree: exponents n+1 <= N+1, n = stride*t
    p.reduced.assign(static_cast<std::size_t>(deg) + 1, MpComplex(0L, prec));
    p.reduced[0] = MpComplex(1L, prec);
    for (int tt = 1; tt <= deg; ++tt) {
        int n = p.stride * tt;
        if (n <= N && !t.coeffs.at(n).is_zero())
            p.reduced[static_cast<std::size_t>(tt)] = MpComplex(t.coeffs.at(n), prec);
    }
    while (p.reduced.size() > 1 && abs(p.reduced.back()).is_zero()) p.reduced.pop_back();
    return p;
}

// ---------------------------------------------------------------------------
// Trusted zeros: roots that persist between two truncation orders.
// Truncations of entire functions grow rings of meaningless roots near the
// truncation boundary; order-doubling stability is the filter.
// ---------------------------------------------------------------------------

struct PoleSet {
    struct Zero {
        MpComplex z;
        MpReal stability; // displacement between the two truncation orders
        MpReal residual;  // |tau_N(z)|
    };
    std::vector<Zero> zeros; // sorted by (modulus, argument)
    MpReal trust_radius;
    int order_lo = 0, order_hi = 0;
};

namespace detail {

inline std::vector<MpComplex> zeros_from_reduced(const TruncatedTauPoly& p, int digits) {
    std::vector<MpComplex> wroots = polynomial_roots(p.reduced, digits);
    std::vector<MpComplex> out;
    out.reserve(wroots.size() * static_cast<std::size_t>(p.stride));
    mpfr_prec_t prec = wroots.empty() ? working_bits(digits) : wroots.front().prec();
    MpReal two_pi = MpReal::pi(prec) * 2L;
    for (const auto& w : wroots) {
        if (abs(w).is_zero()) continue; // z = 0 is the expansion point, not a zero
        MpReal r = root_ui(abs(w), static_cast<unsigned long>(p.stride));
        MpReal base = arg(w) / static_cast<long>(p.stride);
        for (int j = 0; j < p.stride; ++j)
            out.push_back(MpComplex::polar(r, base + two_pi * static_cast<long>(j) /
                                                      static_cast<long>(p.stride)));
    }
    return out;
}

} // namespace detail

inline PoleSet trusted_zeros(const ParameterTriple& params, int N, int digits) {
    TruncatedTauPoly lo = truncated_tau_poly(params, N, digits);
    int stride = lo.stride;
    int deg_lo = static_cast<int>(lo.reduced.size()) - 1;
    int deg_hi = deg_lo + std::max(1, deg_lo / 4);
    int N_hi = stride * deg_hi;
    TruncatedTauPoly hi = truncated_tau_poly(params, N_hi, digits);

    std::vector<MpComplex> z_lo = detail::zeros_from_reduced(lo, digits);
    std::vector<MpComplex> z_hi = detail::zeros_from_reduced(hi, digits);
    if (z_lo.empty() || z_hi.empty())
        throw insufficient_order_error("trusted_zeros: no roots at this order");

    mpfr_prec_t prec = z_lo.front().prec();
    MpReal tol = MpReal(1L, prec) / pow_si(MpReal(10L, prec), digits / 2);

    PoleSet out;
    out.order_lo = N;
    out.order_hi = N_hi;
    out.trust_radius = MpReal(0L, prec);
    for (const auto& z : z_lo) {
        MpReal best = abs(z - z_hi.front());
        for (const auto& c : z_hi) best = min(best, abs(z - c));
        if (!(best < tol)) continue;
        MpReal resid = abs(lo.evaluate(z));
        if (!(resid < tol)) continue;
        out.zeros.push_back({z, best, resid});
        out.trust_radius = max(out.trust_radius, abs(z));
    }
    if (out.zeros.empty())
        throw insufficient_order_error("trusted_zeros: no root is stable at this order");
    std::sort(out.zeros.begin(), out.zeros.end(), [](const PoleSet::Zero& a,
                                                     const PoleSet::Zero& b) {
        MpReal ma = abs(a.z), mb = abs(b.z);
        if (ma < mb) return true;
        if (mb < ma) return false;
        return arg(a.z) < arg(b.z);
    });
    return out;
}

// ---------------------------------------------------------------------------
// The real constant gamma: Omega*^5 for the pentagonal solution. Two
// independent methods, cross-checked: the strided coefficient ratio and
// the smallest root of the degree-100 reduced truncation polynomial.
// ---------------------------------------------------------------------------

struct GammaResult {
    MpReal value;          // agreed value (root method, rounded by caller)
    MpReal ratio_estimate;
    MpReal root_estimate;
    double ratio_seconds = 0;
    double root_seconds = 0;
};

inline GammaResult gamma_constant(int digits) {
    if (digits < 1 || digits > 40)
        throw std::domain_error("gamma_constant: 1 <= digits <= 40 (desk-scale guarantee)");
    const ParameterTriple pent{Rational(0), Rational(1), Rational(0)};
    GammaResult out;

    auto t0 = std::chrono::steady_clock::now();
    int n_ratio = std::max(30, digits * 5 / 4 + 10);
    NearestPoleEstimate np = nearest_pole_estimate(pent, n_ratio, 5, digits + 10);
    out.ratio_estimate = np.omega_pow_step;
    auto t1 = std::chrono::steady_clock::now();

    TruncatedTauPoly p = truncated_tau_poly(pent, 501, digits + 10);
    std::vector<MpComplex> wroots = polynomial_roots(p.reduced, digits + 10);
    mpfr_prec_t prec = wroots.front().prec();
    MpComplex smallest = wroots.front();
    for (const auto& w : wroots)
        if (abs(w) < abs(smallest)) smallest = w;
    auto t2 = std::chrono::steady_clock::now();

    out.ratio_seconds = std::chrono::duration<double>(t1 - t0).count();
    out.root_seconds = std::chrono::duration<double>(t2 - t1).count();

    MpReal tol = MpReal(10L, prec) / pow_si(MpReal(10L, prec), digits);
    if (!(abs(smallest.im) < tol) || !(smallest.re > MpReal(0L, prec)))
        throw numerical_error("gamma_constant: smallest truncation root is not real positive");
    out.root_estimate = smallest.re;
    if (!(abs(out.ratio_estimate - out.root_estimate) < tol))
        throw numerical_error("gamma_constant: ratio and root methods disagree");
    out.value = out.root_estimate;
    return out;
}

// ---------------------------------------------------------------------------
// Exports. CSV columns re,im,stability; SVG is a plain equal-aspect scatter.
// Ordering is fixed by the PoleSet sort, output precision by `digits`.
// ---------------------------------------------------------------------------

inline void export_pole_map_csv(const PoleSet& s, std::ostream& os, int digits) {
    if (s.zeros.empty())
        throw insufficient_order_error("export_pole_map_csv: empty pole set");
    os << "re,im,stability\n";
    for (const auto& z : s.zeros)
        os << z.z.re.to_string(digits) << "," << z.z.im.to_string(digits) << ","
           << z.stability.to_string(6) << "\n";
}

inline void export_pole_map_svg(const PoleSet& s, std::ostream& os) {
    if (s.zeros.empty())
        throw insufficient_order_error("export_pole_map_svg: empty pole set");
    double bound = 0;
    for (const auto& z : s.zeros) {
        bound = std::max(bound, std::abs(z.z.re.to_double()));
        bound = std::max(bound, std::abs(z.z.im.to_double()));
    }
    bound *= 1.15;
    const int px = 640;
    char buf[160];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px
       << "\" viewBox=\"0 0 " << px << " " << px << "\">\n";
    os << "<rect width=\"" << px << "\" height=\"" << px << "\" fill=\"white\"/>\n";
    os << "<line x1=\"0\" y1=\"" << px / 2 << "\" x2=\"" << px << "\" y2=\"" << px / 2
       << "\" stroke=\"#cccccc\"/>\n";
    os << "<line x1=\"" << px / 2 << "\" y1=\"0\" x2=\"" << px / 2 << "\" y2=\"" << px
       << "\" stroke=\"#cccccc\"/>\n";
    for (const auto& z : s.zeros) {
        double x = (z.z.re.to_double() / bound + 1.0) * px / 2.0;
        double y = (1.0 - z.z.im.to_double() / bound) * px / 2.0;
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"3\" fill=\"black\"/>\n", x, y);
        os << buf;
    }
    os << "</svg>\n";
}

// ---------------------------------------------------------------------------
// Exploratory re-expansion of tau around a located zero Omega:
//   tau(z) = A e^{B (z-Omega)} tau(z - Omega; g2 + 12 lambda Omega, lambda, g3_hat).
// The gauge-stripped Taylor coefficients give back g2_hat = -240 Chat_4
// (checkable against g2 + 12 lambda Omega) and the fitted g3_hat; no
// closed form for g3_hat is assumed.
// ---------------------------------------------------------------------------

struct ZeroReexpansion {
    MpComplex A, B;
    MpComplex g2_hat; // from the 5th Taylor coefficient
    MpComplex g3_hat; // from the 7th
};

inline ZeroReexpansion reexpand_at_zero(const TruncatedTauPoly& p, const MpComplex& omega) {
    // Taylor coefficients of tau at omega by repeated synthetic division
    mpfr_prec_t prec = std::max(omega.prec(), p.coeffs.front().prec());
    std::vector<MpComplex> cur;
    cur.reserve(p.coeffs.size());
    for (const auto& x : p.coeffs)
        cur.emplace_back(x.re + MpReal(0L, prec), x.im + MpReal(0L, prec));
    MpComplex om(omega.re + MpReal(0L, prec), omega.im + MpReal(0L, prec));
    std::vector<MpComplex> taylor;
    for (int k = 0; k <= 7 && !cur.empty(); ++k) {
        int d = static_cast<int>(cur.size()) - 1;
        if (d == 0) {
            taylor.push_back(cur[0]);
            break;
        }
        std::vector<MpComplex> q(static_cast<std::size_t>(d), MpComplex(0L, prec));
        MpComplex carry = cur[static_cast<std::size_t>(d)];
        q[static_cast<std::size_t>(d - 1)] = carry;
        for (int i = d - 1; i >= 1; --i) {
            carry = cur[static_cast<std::size_t>(i)] + carry * om;
            q[static_cast<std::size_t>(i - 1)] = carry;
        }
        taylor.push_back(cur[0] + carry * om);
        cur = std::move(q);
    }
    while (taylor.size() < 8) taylor.push_back(MpComplex(0L, prec));

    ZeroReexpansion out;
    out.A = taylor[1];
    if (abs(out.A).is_zero())
        throw numerical_error("reexpand_at_zero: tau'(omega) = 0, not a simple zero");
    out.B = taylor[2] / out.A;
    // strip the gauge: chat = exp(-B w) * taylor(w) / A up to w^7
    std::vector<MpComplex> eb(8, MpComplex(0L, prec));
    eb[0] = MpComplex(1L, prec);
    for (int k = 1; k <= 7; ++k)
        eb[static_cast<std::size_t>(k)] =
            eb[static_cast<std::size_t>(k - 1)] * (-out.B) * (MpReal(1L, prec) / static_cast<long>(k));
    std::vector<MpComplex> chat(8, MpComplex(0L, prec));
    for (int i = 0; i <= 7; ++i)
        for (int j = 0; i + j <= 7; ++j)
            chat[static_cast<std::size_t>(i + j)] +=
                eb[static_cast<std::size_t>(i)] * taylor[static_cast<std::size_t>(j)] / out.A;
    out.g2_hat = chat[5] * MpReal(-240L, prec);
    out.g3_hat = chat[7] * MpReal(-840L, prec);
    return out;
}

} // namespace p1

#endif
