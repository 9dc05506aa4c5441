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

#ifndef P1SERIES_QUADRATURE_HPP
#define P1SERIES_QUADRATURE_HPP

#include <stdexcept>

#include "p1/errors.hpp"
#include "p1/mp.hpp"

namespace p1 {

/// tanh-sinh quadrature over (0,1). The integrand receives both x and
/// 1-x so endpoint singularities can be evaluated without cancellation:
/// with u = (pi/2) sinh t,  x = 1/(1+e^{-2u}),  1-x = 1/(1+e^{2u}),
/// dx/dt = pi cosh(t) x (1-x).
template <typename F>
MpReal tanh_sinh_01(F&& f, int digits) {
    const mpfr_prec_t prec = working_bits(digits + 5);
    const MpReal eps = MpReal(1L, prec) / pow_si(MpReal(10L, prec), digits + 5);
    const MpReal pi = MpReal::pi(prec);
    const MpReal half_pi = pi / 2L;

    auto term = [&](const MpReal& t) -> MpReal {
        MpReal u = half_pi * sinh(t);
        MpReal e2u = exp(u + u);
        MpReal one(1L, prec);
        MpReal x = e2u / (one + e2u);
        MpReal omx = one / (one + e2u);
        MpReal w = pi * cosh(t) * x * omx;
        if (w.is_zero()) return MpReal(0L, prec);
        return w * f(x, omx);
    };

    const int max_level = 13;
    MpReal h(1L, prec);
    MpReal sum = term(MpReal(0L, prec));
    // level 0: integer nodes
    for (int k = 1;; ++k) {
        MpReal t(static_cast<long>(k), prec);
        MpReal v = term(t) + term(-t);
        sum += v;
        if (abs(v) < eps && k >= 3) break;
        if (k > 12) break;
    }
    MpReal integral = sum; // h = 1
    for (int level = 1; level <= max_level; ++level) {
        h = h / 2L;
        MpReal add(0L, prec);
        // odd multiples of h
        for (long k = 1;; k += 2) {
            MpReal t = h * k;
            MpReal v = term(t) + term(-t);
            add += v;
            if (abs(v) < eps && t > MpReal(3L, prec)) break;
            if (t > MpReal(9L, prec)) break;
        }
        MpReal next = integral / 2L + add * h;
        MpReal diff = abs(next - integral);
        integral = next;
        if (level >= 4 && diff < eps * max(MpReal(1L, prec), abs(integral))) break;
        if (level == max_level)
            throw numerical_error("tanh_sinh_01: did not reach the requested accuracy");
    }
    return integral;
}

} // namespace p1

#endif
