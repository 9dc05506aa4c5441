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

#ifndef P1SERIES_LAURENT_HPP
#define P1SERIES_LAURENT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "p1/coefficient_table.hpp"
#include "p1/errors.hpp"
#include "p1/mp.hpp"
#include "p1/rational.hpp"
#include "p1/series.hpp"
#include "p1/weighted_poly.hpp"

namespace p1 {

// ---------------------------------------------------------------------------
// Laurent coefficients of u(z) = sum_{n>=0} c_n z^{n-2} around the pole:
//   (n+1)(n-6) c_n = 6 sum_{j=1}^{n-1} c_j c_{n-j} - g2/2 [n=4] - 6 lambda [n=5]
// with c_0 = 1 and the resonance at n = 6 filled by c_6 = g3/28.
// ---------------------------------------------------------------------------

/// Extends an existing coefficient prefix (c_0..c_{len-1}, len >= 7) to c_N.
template <typename T>
void laurent_extend_sequence(std::vector<T>& c, int N) {
    int start = static_cast<int>(c.size());
    if (start < 7) throw std::invalid_argument("laurent_extend_sequence: prefix too short");
    c.resize(static_cast<std::size_t>(N) + 1);
    for (int n = start; n <= N; ++n) {
        T s{};
        for (int j = 1; j <= n / 2; ++j) {
            T prod = c[j] * c[n - j];
            s = s + (2 * j == n ? prod : prod + prod);
        }
        c[n] = scale(s, Rational(6, (n + 1) * (n - 6)));
    }
}

/// Runs the recursion from scratch with the given seeds c4, c5 and the
/// resonance value c6. Checks the n = 6 consistency condition.
template <typename T>
std::vector<T> laurent_sequence(const T& c4, const T& c5, const T& c6, int N) {
    std::vector<T> c(7);
    c[0] = one_like(T{});
    c[4] = c4;
    c[5] = c5;
    // n = 6: the factor (n+1)(n-6) vanishes and the quadratic sum must too.
    T res6 = c[1] * c[5] + c[2] * c[4];
    res6 = res6 + res6 + c[3] * c[3];
    if (!is_zero(res6)) throw std::logic_error("laurent_sequence: resonance inconsistency");
    c[6] = c6;
    if (N < 7) {
        c.resize(static_cast<std::size_t>(N) + 1);
        return c;
    }
    laurent_extend_sequence(c, N);
    return c;
}

/// Laurent expansion of the solution with a double pole at the origin.
struct LaurentExpansion {
    ParameterTriple params;
    CoefficientTable<Rational> coeffs; // c_0..c_N
    int order = 0;
};

inline LaurentExpansion laurent_coeffs(const ParameterTriple& params, int N) {
    if (N < 0) throw std::invalid_argument("laurent_coeffs: negative order");
    LaurentExpansion e;
    e.params = params;
    e.order = N;
    e.coeffs.first_index = 0;
    e.coeffs.producer = "laurent";
    e.coeffs.order = N;
    e.coeffs.values = laurent_sequence(params.g2 * Rational(1, 20), params.lambda,
                                       params.g3 * Rational(1, 28), N);
    return e;
}

/// Continues a previously computed expansion to a higher order.
inline LaurentExpansion laurent_coeffs_extended(const LaurentExpansion& base, int N) {
    if (N <= base.order) return base;
    if (base.order < 6) return laurent_coeffs(base.params, N);
    LaurentExpansion e = base;
    laurent_extend_sequence(e.coeffs.values, N);
    e.order = N;
    e.coeffs.order = N;
    return e;
}

/// The modular polynomials P_n: the same recursion run over polynomials
/// in (g2, lambda, g3); P_n is weighted homogeneous of weight n.
inline CoefficientTable<WeightedPolynomial> modular_polynomials(int N) {
    if (N < 0) throw std::invalid_argument("modular_polynomials: negative order");
    CoefficientTable<WeightedPolynomial> t;
    t.first_index = 0;
    t.producer = "modular";
    t.order = N;
    t.values = laurent_sequence(WeightedPolynomial::g2(Rational(1, 20)),
                                WeightedPolynomial::lambda(),
                                WeightedPolynomial::g3(Rational(1, 28)), N);
    return t;
}

// ---------------------------------------------------------------------------
// Pentagonal case g2 = g3 = 0:  c_{5n} = v_n lambda^n with
//   v_n = 6/((5n+1)(5n-6)) sum_{k=1}^{n-1} v_k v_{n-k},  v_1 = 1.
// ---------------------------------------------------------------------------

inline void pentagonal_extend(std::vector<Rational>& v, int N) {
    // v[0] unused, v[1] = 1
    int start = static_cast<int>(v.size());
    v.resize(static_cast<std::size_t>(N) + 1);
    for (int n = std::max(start, 2); n <= N; ++n) {
        Rational s(0);
        for (int k = 1; k <= n / 2; ++k) {
            Rational prod = v[k] * v[n - k];
            s += (2 * k == n) ? prod : prod + prod;
        }
        v[n] = s * Rational(6, (5 * n + 1) * (5 * n - 6));
    }
}

inline CoefficientTable<Rational> pentagonal_coeffs(int N) {
    if (N < 1) throw std::invalid_argument("pentagonal_coeffs: need N >= 1");
    CoefficientTable<Rational> t;
    t.first_index = 1;
    t.producer = "pentagon";
    t.order = N;
    std::vector<Rational> v{Rational(0), Rational(1)};
    pentagonal_extend(v, N);
    t.values.assign(v.begin() + 1, v.end());
    return t;
}

/// The linear recurrence satisfied by w_n = c^{(0)}_{5n+1} once v is known:
///   w_n = 12/((5n+2)(5n-5)) sum_{k=1}^{n-1} w_k v_{n-k}.
/// Exposed with an arbitrary seed w_1; the map is linear in the w's.
inline std::vector<Rational> w_recurrence(const std::vector<Rational>& v, const Rational& w1,
                                          int N) {
    std::vector<Rational> w(static_cast<std::size_t>(N) + 1);
    w[1] = w1;
    for (int n = 2; n <= N; ++n) {
        Rational s(0);
        for (int k = 1; k < n; ++k) s += w[k] * v[static_cast<std::size_t>(n - k)];
        w[n] = s * Rational(12, (5 * n + 2) * (5 * n - 5));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Stratified coefficient families.
//
// g2 = 0, alpha = g3/28:   c_{5n+p} = sum_m c^{(m)}_{5n+p} alpha^{5m+p} lambda^{n-6m-p}
// g3 = 0, beta  = g2/20:   c_{5n-p} = sum_m chat^{(m)}_{5n-p} beta^{5m+p} lambda^{n-4m-p}
//
// Both tables satisfy quadratic-in-v but linear-in-everything-else
// recurrences with the prefactor K_{n,p} = 6/((5n+p+1)(5n+p-6)).
// ---------------------------------------------------------------------------

struct StratifiedTable {
    enum class Kind { g2_zero, g3_zero };
    Kind kind = Kind::g2_zero;
    int n_max = 0, m_max = 0;
    int max_index = 0;
    std::vector<std::vector<Rational>> rows; // rows[m][K], coefficient index K

    Rational entry_by_index(int m, int K) const {
        if (m < 0 || m > m_max || K < 0 || K > max_index) return Rational(0);
        return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(K)];
    }
    /// c^{(m)}_{5n+p} (g2-zero) or chat^{(m)}_{5n-p} (g3-zero).
    Rational entry(int m, int n, int p) const {
        int K = kind == Kind::g2_zero ? 5 * n + p : 5 * n - p;
        return entry_by_index(m, K);
    }
    Rational v(int n) const { return entry_by_index(0, 5 * n); }
    Rational w(int n) const { return entry_by_index(0, 5 * n + 1); }
    Rational w_hat(int n) const { return entry_by_index(0, 5 * n - 1); }
};

inline Rational stratified_K(int n, int p) {
    return Rational(6, (5 * n + p + 1) * (5 * n + p - 6));
}

inline StratifiedTable stratified_g2zero(int n_max, int m_max) {
    if (n_max < 1 || m_max < 0) throw std::invalid_argument("stratified_g2zero: bad bounds");
    StratifiedTable t;
    t.kind = StratifiedTable::Kind::g2_zero;
    t.n_max = n_max;
    t.m_max = m_max;
    t.max_index = 5 * n_max + 4;
    t.rows.assign(static_cast<std::size_t>(m_max) + 1,
                  std::vector<Rational>(static_cast<std::size_t>(t.max_index) + 1));
    // c^{(m)}_k = 0 for 1 <= k <= 9 except c^{(0)}_5 = c^{(0)}_6 = 1.
    if (t.max_index >= 5) t.rows[0][5] = Rational(1);
    if (t.max_index >= 6) t.rows[0][6] = Rational(1);
    for (int K = 10; K <= t.max_index; ++K) {
        int n = K / 5, p = K % 5;
        Rational Kf = stratified_K(n, p);
        for (int m = 0; m <= m_max; ++m) {
            if (5 * m + p > 0 && n - 6 * m - p < 0) continue; // empty stratum
            Rational s(0);
            for (int k = 1; k < n; ++k) {
                for (int j = 0; j <= m; ++j)
                    for (int l = 0; l <= p; ++l) {
                        const Rational a = t.entry_by_index(j, 5 * k + l);
                        if (a.is_zero()) continue;
                        const Rational b = t.entry_by_index(m - j, 5 * (n - k) + p - l);
                        if (!b.is_zero()) s += a * b;
                    }
                for (int j = 0; j <= m - 1; ++j)
                    for (int l = 1; l <= 4 - p; ++l) {
                        const Rational a = t.entry_by_index(j, 5 * k + l + p);
                        if (a.is_zero()) continue;
                        const Rational b = t.entry_by_index(m - j - 1, 5 * (n - k) - l);
                        if (!b.is_zero()) s += a * b;
                    }
            }
            t.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(K)] = Kf * s;
        }
    }
    return t;
}

inline StratifiedTable stratified_g3zero(int n_max, int m_max) {
    if (n_max < 1 || m_max < 0) throw std::invalid_argument("stratified_g3zero: bad bounds");
    StratifiedTable t;
    t.kind = StratifiedTable::Kind::g3_zero;
    t.n_max = n_max;
    t.m_max = m_max;
    t.max_index = 5 * n_max;
    t.rows.assign(static_cast<std::size_t>(m_max) + 1,
                  std::vector<Rational>(static_cast<std::size_t>(t.max_index) + 1));
    // chat^{(m)}_k = 0 for 1 <= k <= 6 except chat^{(0)}_4 = chat^{(0)}_5 = 1.
    if (t.max_index >= 4) t.rows[0][4] = Rational(1);
    if (t.max_index >= 5) t.rows[0][5] = Rational(1);
    for (int K = 7; K <= t.max_index; ++K) {
        int n = (K + 4) / 5, p = 5 * n - K;
        Rational Kf = stratified_K(n, -p);
        for (int m = 0; m <= m_max; ++m) {
            if (5 * m + p > 0 && n - 4 * m - p < 0) continue;
            Rational s(0);
            for (int j = 0; j <= m; ++j)
                for (int l = 0; l <= p; ++l)
                    for (int k = 1; k < n; ++k) {
                        const Rational a = t.entry_by_index(j, 5 * k - l);
                        if (a.is_zero()) continue;
                        const Rational b = t.entry_by_index(m - j, 5 * (n - k) + l - p);
                        if (!b.is_zero()) s += a * b;
                    }
            for (int j = 0; j <= m - 1; ++j)
                for (int l = 1; l <= 4 - p; ++l)
                    for (int k = 1; k <= n; ++k) {
                        const Rational a = t.entry_by_index(j, 5 * k - l - p);
                        if (a.is_zero()) continue;
                        const Rational b = t.entry_by_index(m - j - 1, 5 * (n - k) + l);
                        if (!b.is_zero()) s += a * b;
                    }
            t.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(K)] = Kf * s;
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Normalized pole power sums F_n = c_n Omega*^n / (n-1) and the
// nearest-pole ratio estimate.
// ---------------------------------------------------------------------------

inline std::vector<MpComplex> power_sums_F(const LaurentExpansion& e, const MpComplex& omega_star,
                                           int n_lo, int n_hi, int digits) {
    if (n_lo < 3) throw std::domain_error("power_sums_F: defined for n >= 3");
    if (omega_star.is_zero()) throw std::domain_error("power_sums_F: omega_star must be nonzero");
    if (n_hi > e.order) throw std::invalid_argument("power_sums_F: order too small");
    mpfr_prec_t prec = working_bits(digits);
    std::vector<MpComplex> out;
    MpComplex om(omega_star.re, omega_star.im);
    MpComplex p = pow_ui(om, static_cast<unsigned long>(n_lo));
    for (int n = n_lo; n <= n_hi; ++n) {
        MpComplex f = p * MpReal(e.coeffs.at(n) * Rational(1, n - 1), prec);
        out.push_back(f);
        p = p * om;
    }
    return out;
}

/// F_{k n} for a k-fold symmetric solution, fed with Omega*^k directly to
/// avoid taking fractional roots:  F_{kn} = c_{kn} (Omega*^k)^n / (kn - 1).
inline std::vector<MpReal> power_sums_strided(const LaurentExpansion& e,
                                              const MpReal& omega_pow_k, int k, int n_hi,
                                              int digits) {
    if (k < 1) throw std::invalid_argument("power_sums_strided: bad stride");
    if (k * n_hi > e.order) throw std::invalid_argument("power_sums_strided: order too small");
    mpfr_prec_t prec = working_bits(digits);
    std::vector<MpReal> out;
    MpReal p = MpReal(1L, prec);
    for (int n = 1; n <= n_hi; ++n) {
        p *= omega_pow_k;
        out.push_back(MpReal(e.coeffs.at(k * n) * Rational(1, k * n - 1), prec) * p);
    }
    return out;
}

/// Which coefficient stride the parameter point forces: 4, 5 or 6 when a
/// single parameter is nonzero, 1 otherwise.
inline int detect_symmetry_step(const ParameterTriple& p) {
    bool a = !p.g2.is_zero(), b = !p.lambda.is_zero(), c = !p.g3.is_zero();
    if (a && !b && !c) return 4;
    if (!a && b && !c) return 5;
    if (!a && !b && c) return 6;
    return 1;
}

struct NearestPoleEstimate {
    int step = 1;
    MpReal omega_pow_step;      // estimate of Omega*^step (signed real)
    MpReal omega_abs;           // |Omega*|
    std::vector<MpReal> estimates;
    std::vector<MpReal> deltas; // |e_{i+1} - e_i|
};

/// Estimates the nearest pole from coefficient ratios. For stride k the
/// corrected ratio  (kn + k - 1) c_{kn} / ((kn - 1) c_{kn+k})  tends to
/// Omega*^k. Successive estimates must keep contracting by >= 1.05 over
/// the last five steps, otherwise the configuration is declared
/// non-generic (several poles of equal modulus).
inline NearestPoleEstimate nearest_pole_estimate(const ParameterTriple& params, int n_max,
                                                 int step, int digits) {
    if (step != 1 && step != 4 && step != 5 && step != 6)
        throw std::invalid_argument("nearest_pole_estimate: step must be 1, 4, 5 or 6");
    if (n_max < 8) throw std::invalid_argument("nearest_pole_estimate: need n_max >= 8");
    LaurentExpansion e = laurent_coeffs(params, step * (n_max + 1));
    mpfr_prec_t prec = working_bits(digits);
    NearestPoleEstimate r;
    r.step = step;
    int first_n = step == 1 ? 3 : 1; // c_n/(n-1) needs n >= 2; ratios start late anyway
    for (int n = first_n; n <= n_max; ++n) {
        const Rational& a = e.coeffs.at(step * n);
        const Rational& b = e.coeffs.at(step * n + step);
        if (a.is_zero() || b.is_zero())
            throw non_generic_error(
                "nearest_pole_estimate: vanishing coefficients at stride " +
                std::to_string(step));
        Rational est = Rational(step * n + step - 1) * a / (Rational(step * n - 1) * b);
        r.estimates.push_back(MpReal(est, prec));
    }
    for (std::size_t i = 0; i + 1 < r.estimates.size(); ++i)
        r.deltas.push_back(abs(r.estimates[i + 1] - r.estimates[i]));
    // contraction test over the last five delta pairs
    const std::size_t window = 5;
    if (r.deltas.size() < window + 1)
        throw std::invalid_argument("nearest_pole_estimate: n_max too small for diagnostics");
    MpReal factor("1.05", prec);
    for (std::size_t i = r.deltas.size() - window - 1; i + 1 < r.deltas.size(); ++i) {
        if (r.deltas[i + 1].is_zero()) continue;
        if (r.deltas[i + 1] * factor > r.deltas[i])
            throw non_generic_error(
                "nearest_pole_estimate: ratios not contracting (multiple poles of equal "
                "modulus?)");
    }
    r.omega_pow_step = r.estimates.back();
    r.omega_abs = root_ui(abs(r.omega_pow_step), static_cast<unsigned long>(step));
    return r;
}

// ---------------------------------------------------------------------------
// Point evaluation of the truncated Laurent series with an ODE residual
// diagnostic.
// ---------------------------------------------------------------------------

struct UEvaluation {
    MpComplex value;
    MpReal ode_residual;   // |u'' - 6 u^2 + 6 lambda z + g2/2| from partial sums
    MpReal radius_estimate;
    bool radius_warning = false; // set when |z| is not strictly inside the estimate
};

inline UEvaluation evaluate_u(const ParameterTriple& params, const MpComplex& z, int N,
                              int digits) {
    if (z.is_zero()) throw std::domain_error("evaluate_u: z = 0 is the pole");
    mpfr_prec_t prec = working_bits(digits);
    LaurentExpansion e = laurent_coeffs(params, N);

    // Horner over ascending powers of z, then the z^-2 prefactor.
    MpComplex zz(z.re + MpReal(0L, prec), z.im + MpReal(0L, prec));
    MpComplex acc(0L, prec), acc2(0L, prec);
    for (int n = N; n >= 0; --n) {
        acc = acc * zz;
        acc2 = acc2 * zz;
        if (!e.coeffs.at(n).is_zero()) {
            MpReal cn(e.coeffs.at(n), prec);
            acc.re += cn;
            acc2.re += cn * static_cast<long>(n - 2) * static_cast<long>(n - 3);
        }
    }
    MpComplex inv_z2 = MpComplex(1L, prec) / (zz * zz);
    UEvaluation out{acc * inv_z2, MpReal(0L, prec), MpReal(0L, prec), false};
    MpComplex upp = acc2 * inv_z2 * inv_z2; // sum c_n (n-2)(n-3) z^{n-4}
    MpComplex resid = upp - out.value * out.value * MpReal(6L, prec) +
                      zz * MpReal(params.lambda * Rational(6), prec) +
                      MpComplex(MpReal(params.g2 * Rational(1, 2), prec));
    out.ode_residual = abs(resid);

    int step = detect_symmetry_step(params);
    try {
        int n_max = std::min(40, N / step - 1);
        NearestPoleEstimate np = nearest_pole_estimate(params, n_max, step, digits);
        out.radius_estimate = np.omega_abs;
    } catch (const std::exception&) {
        // fall back to a root-test estimate of the radius
        MpReal r(0L, prec);
        bool any = false;
        for (int n = std::max(4, N - 10); n <= N; ++n) {
            if (e.coeffs.at(n).is_zero()) continue;
            MpReal t = root_ui(MpReal(e.coeffs.at(n).abs(), prec), static_cast<unsigned long>(n));
            if (!any || t > r) r = t;
            any = true;
        }
        out.radius_estimate = any ? MpReal(1L, prec) / r : MpReal::nan(prec);
    }
    if (!(abs(zz) < out.radius_estimate)) out.radius_warning = true;
    return out;
}

// ---------------------------------------------------------------------------
// Formal ODE residual: substitute the exact series into
//   u'' - 6 u^2 + 6 lambda z + g2 / 2
// recomputing the square and the derivative from scratch.
// ---------------------------------------------------------------------------

inline PowerSeries<Rational> ode_residual_series(const ParameterTriple& params,
                                                 const CoefficientTable<Rational>& c) {
    int N = c.last_index();
    PowerSeries<Rational> u(-2, c.values, N - 2);
    PowerSeries<Rational> upp = u.derivative().derivative();
    PowerSeries<Rational> u2 = series_product(u, u, N - 4);
    PowerSeries<Rational> r = upp.truncated(N - 4) - scale(u2, Rational(6));
    r.set_coeff(1, r.coeff(1) + params.lambda * Rational(6));
    r.set_coeff(0, r.coeff(0) + params.g2 * Rational(1, 2));
    return r;
}

} // namespace p1

#endif
