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

#ifndef P1SERIES_ROOTS_HPP
#define P1SERIES_ROOTS_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "p1/errors.hpp"
#include "p1/mp.hpp"

namespace p1 {

/// Simultaneous-iteration failure; carries whatever the sweeps produced.
struct root_failure : numerical_error {
    std::vector<MpComplex> partial;
    root_failure(const std::string& what, std::vector<MpComplex> got)
        : numerical_error(what), partial(std::move(got)) {}
};

namespace detail {

/// Initial root moduli from the upper convex hull of (i, log|a_i|)
/// (Bini's starting points), with staggered angles per hull segment.
inline std::vector<MpComplex> aberth_initial(const std::vector<MpComplex>& a, int degree,
                                             mpfr_prec_t prec) {
    std::vector<std::pair<int, double>> pts;
    for (int i = 0; i <= degree; ++i) {
        MpReal m = abs(a[static_cast<std::size_t>(i)]);
        if (m.is_zero()) continue;
        pts.emplace_back(i, log(m).to_double());
    }
    // upper hull by monotone scan
    std::vector<std::pair<int, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            auto& q = hull[hull.size() - 1];
            auto& r = hull[hull.size() - 2];
            double cross = (q.first - r.first) * (p.second - r.second) -
                           (p.first - r.first) * (q.second - r.second);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    std::vector<MpComplex> z;
    z.reserve(static_cast<std::size_t>(degree));
    const double two_pi = 6.283185307179586;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        int k1 = hull[s].first, k2 = hull[s + 1].first;
        int m = k2 - k1;
        double lr = (hull[s].second - hull[s + 1].second) / m;
        MpReal r = exp(MpReal::from_double(lr, prec));
        for (int j = 0; j < m; ++j) {
            double theta = two_pi * (j + 0.5) / m + 0.37 * static_cast<double>(s) + 0.11;
            z.push_back(MpComplex::polar(r, MpReal::from_double(theta, prec)));
        }
    }
    while (static_cast<int>(z.size()) < degree)
        z.push_back(MpComplex(MpReal("0.6", prec), MpReal("0.8", prec)));
    return z;
}

inline void horner_both(const std::vector<MpComplex>& a, int degree, const MpComplex& z,
                        MpComplex& p, MpComplex& dp) {
    mpfr_prec_t prec = z.prec();
    p = MpComplex(0L, prec);
    dp = MpComplex(0L, prec);
    for (int i = degree; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + a[static_cast<std::size_t>(i)];
    }
}

} // namespace detail

/// All complex roots of sum a_i z^i (a given in ascending order) by
/// Aberth-Ehrlich simultaneous iteration. Multiset size equals the degree.
/// Working precision is twice the requested digits plus degree-dependent
/// padding; float images of exact inputs should be taken at that size.
inline std::vector<MpComplex> polynomial_roots(const std::vector<MpComplex>& coeffs, int digits,
                                               int max_sweeps = 400) {
    int degree = static_cast<int>(coeffs.size()) - 1;
    while (degree > 0 && abs(coeffs[static_cast<std::size_t>(degree)]).is_zero()) --degree;
    if (degree < 1) throw std::invalid_argument("polynomial_roots: degree must be >= 1");

    int work_digits = 2 * digits + degree / 4 + 10;
    mpfr_prec_t prec = bits_for_digits(work_digits);

    std::vector<MpComplex> a;
    a.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i)
        a.emplace_back(coeffs[static_cast<std::size_t>(i)].re + MpReal(0L, prec),
                       coeffs[static_cast<std::size_t>(i)].im + MpReal(0L, prec));

    // roots at the origin
    int zero_roots = 0;
    while (zero_roots < degree && a[static_cast<std::size_t>(zero_roots)].is_zero()) ++zero_roots;
    std::vector<MpComplex> result(static_cast<std::size_t>(zero_roots), MpComplex(0L, prec));
    if (zero_roots) {
        a.erase(a.begin(), a.begin() + zero_roots);
        degree -= zero_roots;
        if (degree == 0) return result;
    }

    if (degree == 1) {
        result.push_back(-(a[0] / a[1]));
        return result;
    }

    std::vector<MpComplex> z = detail::aberth_initial(a, degree, prec);
    MpReal tol = MpReal(1L, prec) / pow_si(MpReal(10L, prec), digits + 3);
    MpReal one(1L, prec);

    int quiet_sweeps = 0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        MpReal worst(0L, prec);
        for (int i = 0; i < degree; ++i) {
            MpComplex p(0L, prec), dp(0L, prec);
            detail::horner_both(a, degree, z[static_cast<std::size_t>(i)], p, dp);
            if (abs(p).is_zero()) continue;
            if (abs(dp).is_zero()) {
                // sit exactly on a critical point: nudge and retry next sweep
                z[static_cast<std::size_t>(i)] += MpComplex(tol, tol);
                worst = max(worst, one);
                continue;
            }
            MpComplex newton = p / dp;
            MpComplex s(0L, prec);
            bool collision = false;
            for (int j = 0; j < degree; ++j) {
                if (j == i) continue;
                MpComplex d = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (abs(d).is_zero()) {
                    collision = true;
                    break;
                }
                s += MpComplex(1L, prec) / d;
            }
            if (collision) {
                z[static_cast<std::size_t>(i)] += MpComplex(tol * 1000L, tol * 997L);
                worst = max(worst, one);
                continue;
            }
            MpComplex denom = MpComplex(1L, prec) - newton * s;
            MpComplex corr = abs(denom).is_zero() ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= corr;
            worst = max(worst, abs(corr) / (one + abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst < tol) {
            if (++quiet_sweeps >= 2) {
                result.insert(result.end(), z.begin(), z.end());
                return result;
            }
        } else {
            quiet_sweeps = 0;
        }
    }
    std::vector<MpComplex> got = result;
    got.insert(got.end(), z.begin(), z.end());
    throw root_failure("polynomial_roots: no convergence after sweep cap", std::move(got));
}

} // namespace p1

#endif
