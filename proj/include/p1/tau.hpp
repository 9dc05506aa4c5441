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

#ifndef P1SERIES_TAU_HPP
#define P1SERIES_TAU_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "p1/coefficient_table.hpp"
#include "p1/laurent.hpp"
#include "p1/rational.hpp"
#include "p1/series.hpp"
#include "p1/weighted_poly.hpp"

namespace p1 {

// ---------------------------------------------------------------------------
// Hirota machinery. D_z^4 z^j . z^k = b_{j,k} z^{j+k-4} with
//   b_{j,k} = 4! sum_{l=0}^{4} (-1)^l C(j,l) C(k,4-l),  symmetric in (j,k).
// ---------------------------------------------------------------------------

inline long long hirota_b(int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("hirota_b: negative index");
    // C(20000,2)^2 * 24 still fits in 64 bits; larger indices would not
    if (j > 20000 || k > 20000) throw std::invalid_argument("hirota_b: index too large");
    auto C = [](long long n, int r) -> long long {
        if (r < 0 || n < r) return 0;
        long long v = 1;
        for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
        return v;
    };
    long long s = 0;
    for (int l = 0; l <= 4; ++l) {
        long long t = C(j, l) * C(k, 4 - l);
        s += (l % 2 == 0) ? t : -t;
    }
    return 24 * s;
}

/// Taylor coefficients of the tau-function around its zero at the origin,
/// gauge-fixed so that tau(z) = z + sum_{n>=2} C_n z^{n+1}.
template <typename T>
struct TauExpansion {
    CoefficientTable<T> coeffs; // C_0..C_N
    int order = 0;
    std::string method;
    std::optional<ParameterTriple> params; // absent in symbolic mode
};

// ---------------------------------------------------------------------------
// Recursion from the Hirota bilinear equation
//   D_z^4 tau.tau - (12 lambda z + g2) tau^2 = 0:
//
//   n(n^2-1)(n-6) C_n = -1/2 sum_{j=1}^{n-1} b_{j+1,n-j+1} C_j C_{n-j}
//                       + g2/2 sum_{j=0}^{n-4} C_j C_{n-4-j}
//                       + 6 lambda sum_{j=0}^{n-5} C_j C_{n-5-j}
//
// with C_0 = 1, C_1 = 0 and the resonance at n = 6 filled by C_6 = -g3/840.
// ---------------------------------------------------------------------------

template <typename T>
std::vector<T> tau_bilinear_sequence(const T& g2s, const T& lams, const T& c6, int N) {
    std::vector<T> C(static_cast<std::size_t>(std::max(N, 6)) + 1);
    C[0] = one_like(T{});
    for (int n = 2; n <= std::max(N, 6); ++n) {
        T rhs{};
        for (int j = 1; j <= n / 2; ++j) {
            T prod = C[j] * C[n - j];
            if (2 * j != n) prod = prod + prod;
            rhs = rhs - scale(prod, Rational(hirota_b(j + 1, n - j + 1), 2));
        }
        if (n >= 4) {
            T s{};
            for (int j = 0; j <= n - 4; ++j) s = s + C[j] * C[n - 4 - j];
            rhs = rhs + scale(g2s * s, Rational(1, 2));
        }
        if (n >= 5) {
            T s{};
            for (int j = 0; j <= n - 5; ++j) s = s + C[j] * C[n - 5 - j];
            rhs = rhs + scale(lams * s, Rational(6));
        }
        if (n == 6) {
            if (!is_zero(rhs))
                throw std::logic_error("tau_bilinear_sequence: resonance inconsistency at n=6");
            C[6] = c6;
        } else {
            C[n] = scale(rhs, Rational(1, static_cast<long>(n) * (n * n - 1) * (n - 6)));
        }
    }
    C.resize(static_cast<std::size_t>(N) + 1);
    return C;
}

inline TauExpansion<Rational> tau_coeffs_bilinear(const ParameterTriple& p, int N) {
    TauExpansion<Rational> t;
    t.order = N;
    t.method = "bilinear";
    t.params = p;
    t.coeffs.first_index = 0;
    t.coeffs.producer = "tau-bilinear";
    t.coeffs.order = N;
    t.coeffs.values = tau_bilinear_sequence(p.g2, p.lambda, p.g3 * Rational(-1, 840), N);
    return t;
}

inline TauExpansion<WeightedPolynomial> tau_coeffs_bilinear_symbolic(int N) {
    TauExpansion<WeightedPolynomial> t;
    t.order = N;
    t.method = "bilinear";
    t.coeffs.first_index = 0;
    t.coeffs.producer = "tau-bilinear";
    t.coeffs.order = N;
    t.coeffs.values = tau_bilinear_sequence(WeightedPolynomial::g2(),
                                            WeightedPolynomial::lambda(),
                                            WeightedPolynomial::g3(Rational(-1, 840)), N);
    return t;
}

// ---------------------------------------------------------------------------
// Recursion from the degree-four equation (the first integral of the
// bilinear form). Only C_0 = 1 and C_1 = 0 are needed as seeds; g3 enters
// through the equation. For n >= 2:
//
//   4 n(n^2-1) C_n = - sum_{j+k+l+m=n, 0<=j,k,l,m<=n-1} btilde_{j,k,l,m} C_j C_k C_l C_m
//                    + g2 S4 + 12 lambda S5 - g3 S6,
//
//   btilde = j(j+1)(k+1)[(j-1)(k(k-6l-7) + 4(l+1)(m+1)) + k(l+1)(4l-3m-3)],
//   S4 = sum_{j+k+l+m=n-4} (j+1)(j-k-1) CCCC,
//   S5 = sum_{j+k+l+m=n-5} (j+1)(j-k-2) CCCC,
//   S6 = sum_{j+k+l+m=n-6} CCCC.
//
// The tuples with one index equal to n reduce to the left-hand side
// (btilde(n,0,0,0) = 4n(n^2-1)); btilde vanishes whenever j = 0.
// btilde separates into five products of single-index weights, so each
// quadruple sum is maintained as a pair of convolutions.
// ---------------------------------------------------------------------------

template <typename T>
class QuarticRecursion {
public:
    QuarticRecursion(const T& g2s, const T& lams, const T& g3s)
        : g2_(g2s), lam_(lams), g3_(g3s) {
        push(one_like(T{})); // C_0
        push(T{});           // C_1
    }

    std::vector<T> run(int N) {
        for (int n = 2; n <= N; ++n) step(n);
        std::vector<T> out(C_.begin(), C_.begin() + N + 1);
        return out;
    }

private:
    // weighted coefficient streams
    static long long w_a1(long long n) { return n * (n * n - 1); }
    static long long w_a2(long long n) { return n * (n + 1); }
    static long long w_a3(long long n) { return n + 1; }
    static long long w_a4(long long n) { return n; }
    static long long w_a6(long long n) { return n * n - 1; }
    static long long w_a7(long long n) { return (n + 1) * (n - 2); }
    static long long w_a8(long long n) { return (n + 1) * (4 * n - 3); }
    static long long w_y1(long long n) { return (n + 1) * n * (n - 7); }

    void push(T c) {
        long long n = static_cast<long long>(C_.size());
        C_.push_back(std::move(c));
        const T& cn = C_.back();
        a1_.push_back(scale(cn, Rational(w_a1(n))));
        a2_.push_back(scale(cn, Rational(w_a2(n))));
        a3_.push_back(scale(cn, Rational(w_a3(n))));
        a4_.push_back(scale(cn, Rational(w_a4(n))));
        a6_.push_back(scale(cn, Rational(w_a6(n))));
        a7_.push_back(scale(cn, Rational(w_a7(n))));
        a8_.push_back(scale(cn, Rational(w_a8(n))));
        y1_.push_back(scale(cn, Rational(w_y1(n))));
    }

    static T conv_at(const std::vector<T>& x, const std::vector<T>& y, int idx) {
        T s{};
        for (int i = 0; i <= idx; ++i) {
            if (is_zero(x[static_cast<std::size_t>(i)])) continue;
            const T& yv = y[static_cast<std::size_t>(idx - i)];
            if (is_zero(yv)) continue;
            s = s + x[static_cast<std::size_t>(i)] * yv;
        }
        return s;
    }
    static T conv_interior(const std::vector<T>& x, const std::vector<T>& y, int idx) {
        T s{};
        for (int i = 1; i < idx; ++i) {
            if (is_zero(x[static_cast<std::size_t>(i)])) continue;
            const T& yv = y[static_cast<std::size_t>(idx - i)];
            if (is_zero(yv)) continue;
            s = s + x[static_cast<std::size_t>(i)] * yv;
        }
        return s;
    }

    void extend_products(int upto) {
        auto ext = [&](std::vector<T>& prod, const std::vector<T>& x, const std::vector<T>& y) {
            while (static_cast<int>(prod.size()) <= upto)
                prod.push_back(conv_at(x, y, static_cast<int>(prod.size())));
        };
        ext(R_, C_, C_);
        ext(p1_, a1_, y1_);
        ext(p2_, a1_, a2_);
        ext(p3_, a1_, a3_);
        ext(pd_, a2_, a2_);
        ext(qb_, a4_, C_);
        ext(qc_, a3_, a3_);
        ext(qd_, a8_, C_);
        ext(qe_, a3_, a4_);
        ext(u4_, a6_, C_);
        ext(u5_, a7_, C_);
    }

    void step(int n) {
        extend_products(n - 1);
        // interior values at index n (exclude factors C_n, which form the LHS)
        T p1n = conv_interior(a1_, y1_, n);
        T p2n = conv_interior(a1_, a2_, n);
        T p3n = conv_interior(a1_, a3_, n);
        T pdn = conv_interior(a2_, a2_, n);

        auto pick = [n](const std::vector<T>& full, const T& interior, int a) -> const T& {
            return a == n ? interior : full[static_cast<std::size_t>(a)];
        };

        T S{};
        for (int a = 1; a <= n; ++a) {
            int b = n - a;
            auto sb = static_cast<std::size_t>(b);
            S = S + pick(p1_, p1n, a) * R_[sb];
            S = S - scale(pick(p2_, p2n, a) * qb_[sb], Rational(6));
            S = S + scale(pick(p3_, p3n, a) * qc_[sb], Rational(4));
            S = S + pick(pd_, pdn, a) * qd_[sb];
            S = S - scale(pick(pd_, pdn, a) * qe_[sb], Rational(3));
        }

        T rhs = scale(S, Rational(-1));
        if (n >= 4) {
            T s4{};
            for (int a = 0; a <= n - 4; ++a)
                s4 = s4 + (u4_[static_cast<std::size_t>(a)] - qe_[static_cast<std::size_t>(a)]) *
                              R_[static_cast<std::size_t>(n - 4 - a)];
            rhs = rhs + g2_ * s4;
        }
        if (n >= 5) {
            T s5{};
            for (int a = 0; a <= n - 5; ++a)
                s5 = s5 + (u5_[static_cast<std::size_t>(a)] - qe_[static_cast<std::size_t>(a)]) *
                              R_[static_cast<std::size_t>(n - 5 - a)];
            rhs = rhs + scale(lam_ * s5, Rational(12));
        }
        if (n >= 6) {
            T s6{};
            for (int a = 0; a <= n - 6; ++a)
                s6 = s6 + R_[static_cast<std::size_t>(a)] * R_[static_cast<std::size_t>(n - 6 - a)];
            rhs = rhs - g3_ * s6;
        }
        push(scale(rhs, Rational(1, 4LL * n * (static_cast<long long>(n) * n - 1))));
    }

    T g2_, lam_, g3_;
    std::vector<T> C_;
    std::vector<T> a1_, a2_, a3_, a4_, a6_, a7_, a8_, y1_;
    std::vector<T> R_, p1_, p2_, p3_, pd_, qb_, qc_, qd_, qe_, u4_, u5_;
};

inline TauExpansion<Rational> tau_coeffs_quartic(const ParameterTriple& p, int N) {
    TauExpansion<Rational> t;
    t.order = N;
    t.method = "quartic";
    t.params = p;
    t.coeffs.first_index = 0;
    t.coeffs.producer = "tau-quartic";
    t.coeffs.order = N;
    QuarticRecursion<Rational> rec(p.g2, p.lambda, p.g3);
    t.coeffs.values = rec.run(N);
    return t;
}

inline TauExpansion<WeightedPolynomial> tau_coeffs_quartic_symbolic(int N) {
    TauExpansion<WeightedPolynomial> t;
    t.order = N;
    t.method = "quartic";
    t.coeffs.first_index = 0;
    t.coeffs.producer = "tau-quartic";
    t.coeffs.order = N;
    QuarticRecursion<WeightedPolynomial> rec(WeightedPolynomial::g2(),
                                             WeightedPolynomial::lambda(),
                                             WeightedPolynomial::g3());
    t.coeffs.values = rec.run(N);
    return t;
}

// ---------------------------------------------------------------------------
// Triple-sum representation
//   tau(z) = sum A_{l,m,n} (g2/2)^l (6 lambda)^m (2 g3)^n z^s / s!,
//   s = 4l + 5m + 6n + 1,
// determined by A_{0,0,0} = 1, A_{0,0,1} = -3 and, for all other entries,
//
//   s(s-1)(s-2)(s-7)/s! A = -1/2 sum'  b_{s1,s2}/(s1! s2!) A' A''   (split of (l,m,n))
//                           + sum_{m-1} A'A''/(s1!s2!) + sum_{l-1} A'A''/(s1!s2!)
//
// where sum' omits the two endpoint splits.
// ---------------------------------------------------------------------------

struct TripleSumTable {
    struct Entry {
        int l, m, n;
        Rational value;
    };
    std::vector<Entry> entries; // ordered by increasing s, ties lexicographic
    int s_max = 0;

    int l_cap = 0, m_cap = 0, n_cap = 0;
    std::vector<Rational> dense;
    std::vector<char> present;

    std::size_t slot(int l, int m, int n) const {
        return (static_cast<std::size_t>(l) * static_cast<std::size_t>(m_cap + 1) +
                static_cast<std::size_t>(m)) *
                   static_cast<std::size_t>(n_cap + 1) +
               static_cast<std::size_t>(n);
    }
    bool has(int l, int m, int n) const {
        if (l < 0 || m < 0 || n < 0 || l > l_cap || m > m_cap || n > n_cap) return false;
        return present[slot(l, m, n)] != 0;
    }
    const Rational& at(int l, int m, int n) const {
        if (!has(l, m, n)) throw std::out_of_range("TripleSumTable: missing entry");
        return dense[slot(l, m, n)];
    }
};

inline int triple_sum_s(int l, int m, int n) { return 4 * l + 5 * m + 6 * n + 1; }

inline TripleSumTable triple_sum_coeffs(int s_max) {
    if (s_max < 1) throw std::invalid_argument("triple_sum_coeffs: need s_max >= 1");
    TripleSumTable t;
    t.s_max = s_max;
    t.l_cap = (s_max - 1) / 4;
    t.m_cap = (s_max - 1) / 5;
    t.n_cap = (s_max - 1) / 6;
    t.dense.assign(
        static_cast<std::size_t>(t.l_cap + 1) * static_cast<std::size_t>(t.m_cap + 1) *
            static_cast<std::size_t>(t.n_cap + 1),
        Rational(0));
    t.present.assign(t.dense.size(), 0);

    std::vector<std::array<int, 4>> idx; // (s, l, m, n)
    for (int l = 0; l <= t.l_cap; ++l)
        for (int m = 0; m <= t.m_cap; ++m)
            for (int n = 0; n <= t.n_cap; ++n) {
                int s = triple_sum_s(l, m, n);
                if (s <= s_max) idx.push_back({s, l, m, n});
            }
    std::sort(idx.begin(), idx.end());

    std::vector<mpz_class> fact(static_cast<std::size_t>(s_max) + 2);
    for (std::size_t i = 0; i < fact.size(); ++i) fact[i] = factorial(static_cast<unsigned long>(i));

    for (const auto& [s, l, m, n] : idx) {
        Rational value;
        if (l == 0 && m == 0 && n == 0) {
            value = Rational(1);
        } else if (l == 0 && m == 0 && n == 1) {
            value = Rational(-3);
        } else {
            // Integer entries are the overwhelmingly common case, so the
            // pair sums accumulate in an mpz with a rational side channel.
            // The split weights are symmetric (b_{s1,s2} = b_{s2,s1} and
            // C(s+1,s1) = C(s+1,s2) for s1+s2 = s+1), so unordered pairs
            // count twice.
            mpz_class int_acc(0), wbuf, pbuf;
            Rational frac_acc(0);
            auto accumulate = [&](const Rational& A1, const Rational& A2, const mpz_class& w,
                                  bool twice) {
                if (A1.den() == 1 && A2.den() == 1) {
                    pbuf = A1.num() * A2.num();
                    pbuf *= w;
                    if (twice) pbuf <<= 1;
                    int_acc += pbuf;
                } else {
                    Rational term(w * A1.num() * A2.num(), A1.den() * A2.den());
                    frac_acc += twice ? term + term : term;
                }
            };
            // sum' with weight  -1/2 * b_{s1,s2} * s!/(s1! s2!) = -1/2 b C(s+1,s1)/(s+1)
            Rational acc(0);
            for (int l1 = 0; l1 <= l; ++l1)
                for (int m1 = 0; m1 <= m; ++m1)
                    for (int n1 = 0; n1 <= n; ++n1) {
                        if (l1 == 0 && m1 == 0 && n1 == 0) continue;
                        if (l1 == l && m1 == m && n1 == n) continue;
                        int l2 = l - l1, m2 = m - m1, n2 = n - n1;
                        if (std::array<int, 3>{l1, m1, n1} > std::array<int, 3>{l2, m2, n2})
                            continue;
                        if (!t.has(l1, m1, n1) || !t.has(l2, m2, n2)) continue;
                        int s1 = triple_sum_s(l1, m1, n1);
                        int s2 = triple_sum_s(l2, m2, n2);
                        wbuf = binomial(static_cast<unsigned long>(s + 1),
                                        static_cast<unsigned long>(s1));
                        wbuf *= static_cast<long>(hirota_b(s1, s2));
                        bool diagonal = l1 == l2 && m1 == m2 && n1 == n2;
                        accumulate(t.at(l1, m1, n1), t.at(l2, m2, n2), wbuf, !diagonal);
                    }
            acc = (Rational(int_acc) + frac_acc) * Rational(-1, 2 * (s + 1));
            // shifted sums: s1 + s2 = s - 4 for the lambda shift and
            // s - 3 for the g2 shift, so the weights s!/(s1!s2!) differ:
            //   C(s-4,s1) * s(s-1)(s-2)(s-3)   and   C(s-3,s1) * s(s-1)(s-2)
            long long pf = static_cast<long long>(s) * (s - 1) * (s - 2);
            auto add_shifted = [&](int dl, int dm, int choose_base, long long post) {
                int lm = l - dl, mm = m - dm;
                if (lm < 0 || mm < 0) return;
                int_acc = 0;
                frac_acc = Rational(0);
                for (int l1 = 0; l1 <= lm; ++l1)
                    for (int m1 = 0; m1 <= mm; ++m1)
                        for (int n1 = 0; n1 <= n; ++n1) {
                            int l2 = lm - l1, m2 = mm - m1, n2 = n - n1;
                            if (std::array<int, 3>{l1, m1, n1} > std::array<int, 3>{l2, m2, n2})
                                continue;
                            if (!t.has(l1, m1, n1) || !t.has(l2, m2, n2)) continue;
                            int s1 = triple_sum_s(l1, m1, n1);
                            wbuf = binomial(static_cast<unsigned long>(choose_base),
                                            static_cast<unsigned long>(s1));
                            bool diagonal = l1 == l2 && m1 == m2 && n1 == n2;
                            accumulate(t.at(l1, m1, n1), t.at(l2, m2, n2), wbuf, !diagonal);
                        }
                acc += (Rational(int_acc) + frac_acc) * Rational(post);
            };
            add_shifted(0, 1, s - 4, pf * (s - 3));
            add_shifted(1, 0, s - 3, pf);
            value = acc / Rational(pf * (s - 7));
        }
        t.dense[t.slot(l, m, n)] = value;
        t.present[t.slot(l, m, n)] = 1;
        t.entries.push_back({l, m, n, value});
    }
    return t;
}

/// Non-integer entries; the series is conjectured to have none.
inline std::vector<std::array<int, 3>> integrality_report(const TripleSumTable& t) {
    std::vector<std::array<int, 3>> bad;
    for (const auto& e : t.entries)
        if (!e.value.is_integer()) bad.push_back({e.l, e.m, e.n});
    return bad;
}
inline std::vector<std::array<int, 3>> integrality_report(int s_max) {
    return integrality_report(triple_sum_coeffs(s_max));
}

struct coverage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline TauExpansion<Rational> tau_from_triple_sum(const TripleSumTable& t,
                                                  const ParameterTriple& p, int N) {
    if (t.s_max < N + 1)
        throw coverage_error("tau_from_triple_sum: table depth s_max < N+1");
    TauExpansion<Rational> out;
    out.order = N;
    out.method = "triple-sum";
    out.params = p;
    out.coeffs.first_index = 0;
    out.coeffs.producer = "tau-triple-sum";
    out.coeffs.order = N;
    out.coeffs.values.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    Rational half_g2 = p.g2 * Rational(1, 2);
    Rational six_lam = p.lambda * Rational(6);
    Rational two_g3 = p.g3 * Rational(2);
    for (const auto& e : t.entries) {
        int s = triple_sum_s(e.l, e.m, e.n);
        if (s - 1 > N) continue;
        Rational term = e.value * half_g2.pow(e.l) * six_lam.pow(e.m) * two_g3.pow(e.n);
        out.coeffs.values[static_cast<std::size_t>(s - 1)] +=
            term / Rational(factorial(static_cast<unsigned long>(s)));
    }
    return out;
}

inline TauExpansion<WeightedPolynomial> tau_from_triple_sum_symbolic(const TripleSumTable& t,
                                                                     int N) {
    if (t.s_max < N + 1)
        throw coverage_error("tau_from_triple_sum_symbolic: table depth s_max < N+1");
    TauExpansion<WeightedPolynomial> out;
    out.order = N;
    out.method = "triple-sum";
    out.coeffs.first_index = 0;
    out.coeffs.producer = "tau-triple-sum";
    out.coeffs.order = N;
    out.coeffs.values.assign(static_cast<std::size_t>(N) + 1, WeightedPolynomial{});
    for (const auto& e : t.entries) {
        int s = triple_sum_s(e.l, e.m, e.n);
        if (s - 1 > N) continue;
        Rational coeff = e.value * Rational(1, 2).pow(e.l) * Rational(6).pow(e.m) *
                         Rational(2).pow(e.n) /
                         Rational(factorial(static_cast<unsigned long>(s)));
        out.coeffs.values[static_cast<std::size_t>(s - 1)].add_term({e.l, e.m, e.n}, coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// u = -(log tau)''  and consistency checks.
// ---------------------------------------------------------------------------

/// Laurent coefficients of u from a tau expansion: with L = log(tau/z),
/// c_0 = 1 (from the log z term) and c_n = -n(n-1) L_n.
template <typename T>
CoefficientTable<T> u_from_tau(const TauExpansion<T>& tau, int N) {
    if (tau.order < N) throw std::invalid_argument("u_from_tau: tau order too small");
    PowerSeries<T> unit(0, std::vector<T>(static_cast<std::size_t>(N) + 1), N);
    unit.set_coeff(0, one_like(T{}));
    for (int n = 2; n <= N; ++n) unit.set_coeff(n, tau.coeffs.at(n));
    PowerSeries<T> L = series_log_unit(unit, N);
    CoefficientTable<T> c;
    c.first_index = 0;
    c.producer = "u-from-tau";
    c.order = N;
    c.values.assign(static_cast<std::size_t>(N) + 1, T{});
    c.values[0] = one_like(T{});
    for (int n = 1; n <= N; ++n)
        c.values[static_cast<std::size_t>(n)] =
            scale(L.coeff(n), Rational(-static_cast<long>(n) * (n - 1)));
    return c;
}

/// tau -> exp(a z) * kappa * tau as a series; kappa stands in for e^b.
inline PowerSeries<Rational> apply_gauge(const TauExpansion<Rational>& tau, const Rational& a,
                                         const Rational& kappa, int N) {
    PowerSeries<Rational> ts(1, std::vector<Rational>(static_cast<std::size_t>(N)), N);
    ts.set_coeff(1, Rational(1));
    for (int n = 2; n + 1 <= N; ++n) ts.set_coeff(n + 1, tau.coeffs.at(n));
    PowerSeries<Rational> az(0, std::vector<Rational>(2), N);
    az.set_coeff(1, a);
    PowerSeries<Rational> E = series_exp_zero(az, N);
    return scale(series_product(E, ts, N), kappa);
}

/// tau series (coefficient of z^{n+1} is C_n) as a PowerSeries.
template <typename T>
PowerSeries<T> tau_series(const TauExpansion<T>& tau) {
    int N = tau.order;
    PowerSeries<T> ts(1, std::vector<T>(static_cast<std::size_t>(N) + 1), N + 1);
    ts.set_coeff(1, one_like(T{}));
    for (int n = 2; n <= N; ++n) ts.set_coeff(n + 1, tau.coeffs.at(n));
    return ts;
}

/// Multiply every coefficient of a series by a scalar of the same ring.
template <typename T>
PowerSeries<T> forced_mul(const T& s, const PowerSeries<T>& a) {
    PowerSeries<T> r(a.offset(), std::vector<T>(static_cast<std::size_t>(a.size())), a.order());
    for (int e = a.offset(); e < a.offset() + a.size(); ++e) r.set_coeff(e, s * a.coeff(e));
    return r;
}

/// D_z^4 tau.tau - (12 lambda z + g2) tau^2, re-derived through series
/// products (D_z^4 f.f = 2 f f'''' - 8 f' f''' + 6 f''^2). Exact through
/// order N-2 for a table exact to C_N; identically zero for a solution.
template <typename T>
PowerSeries<T> bilinear_residual_series(const T& g2s, const T& lams,
                                        const TauExpansion<T>& tau) {
    PowerSeries<T> t0 = tau_series(tau);
    PowerSeries<T> t1 = t0.derivative();
    PowerSeries<T> t2 = t1.derivative();
    PowerSeries<T> t3 = t2.derivative();
    PowerSeries<T> t4 = t3.derivative();
    auto prod = [](const PowerSeries<T>& a, const PowerSeries<T>& b) {
        return series_product(a, b, std::min(a.order() + b.offset(), b.order() + a.offset()));
    };
    PowerSeries<T> D = scale(prod(t0, t4), Rational(2)) + scale(prod(t1, t3), Rational(-8)) +
                       scale(prod(t2, t2), Rational(6));
    PowerSeries<T> tau2 = prod(t0, t0);
    PowerSeries<T> lin = scale(tau2.shifted(1), Rational(12));
    PowerSeries<T> r = D - forced_mul(lams, lin) - forced_mul(g2s, tau2);
    return r;
}

/// The degree-four equation evaluated on a tau table; exact through N-2.
template <typename T>
PowerSeries<T> quartic_residual_series(const T& g2s, const T& lams, const T& g3s,
                                       const TauExpansion<T>& tau) {
    PowerSeries<T> t0 = tau_series(tau);
    PowerSeries<T> t1 = t0.derivative();
    PowerSeries<T> t2 = t1.derivative();
    PowerSeries<T> t3 = t2.derivative();
    auto prod = [](const PowerSeries<T>& a, const PowerSeries<T>& b) {
        return series_product(a, b, std::min(a.order() + b.offset(), b.order() + a.offset()));
    };
    PowerSeries<T> tau2 = prod(t0, t0);
    PowerSeries<T> tau3 = prod(tau2, t0);
    PowerSeries<T> tau4 = prod(tau3, t0);
    PowerSeries<T> r = prod(tau2, prod(t3, t3));
    r = r - scale(prod(prod(t0, t1), prod(t2, t3)), Rational(6));
    r = r + scale(prod(prod(t1, prod(t1, t1)), t3), Rational(4));
    r = r + scale(prod(t0, prod(t2, prod(t2, t2))), Rational(4));
    PowerSeries<T> tp_tpp = prod(t1, t2);
    r = r - scale(prod(tp_tpp, tp_tpp), Rational(3));
    r = r - forced_mul(g2s, prod(tau2, prod(t0, t2) - prod(t1, t1)));
    PowerSeries<T> tt1 = prod(t0, t1);
    PowerSeries<T> inner = prod(tau3, t2) - prod(tt1, tt1);
    r = r - scale(forced_mul(lams, inner.shifted(1) - prod(tau3, t1)), Rational(12));
    r = r + forced_mul(g3s, tau4);
    return r;
}

// ---------------------------------------------------------------------------
// Hamiltonian consistency: with h = -6 lambda (log tau)' and v = u',
//   (i)  h' - 6 lambda u = 0
//   (ii) h = v^2/2 - 2u^3 + g2 u / 2 + 6 lambda z u + g3/2
// hold as exact Laurent series (the integration constant is fixed so that
// h vanishes identically when lambda = 0).
// ---------------------------------------------------------------------------

struct HamiltonianReport {
    bool ok = false;
    int order_checked = 0;
    int first_bad_exponent = 0;
    Rational max_abs_deviation;
};

inline HamiltonianReport hamiltonian_check(const ParameterTriple& p, int N) {
    LaurentExpansion lc = laurent_coeffs(p, N);
    TauExpansion<Rational> tc = tau_coeffs_bilinear(p, N);

    PowerSeries<Rational> u(-2, lc.coeffs.values, N - 2);
    PowerSeries<Rational> v = u.derivative();

    PowerSeries<Rational> unit(0, std::vector<Rational>(static_cast<std::size_t>(N) + 1), N);
    unit.set_coeff(0, Rational(1));
    for (int n = 2; n <= N; ++n) unit.set_coeff(n, tc.coeffs.at(n));
    PowerSeries<Rational> L = series_log_unit(unit, N);
    // h = -6 lambda (1/z + L')
    PowerSeries<Rational> h = scale(L.derivative(), p.lambda * Rational(-6));
    h.set_coeff(-1, h.coeff(-1) + p.lambda * Rational(-6));

    HamiltonianReport rep;
    rep.ok = true;

    // (i) h' - 6 lambda u, exact through N-2
    {
        PowerSeries<Rational> r = h.derivative() - scale(u, p.lambda * Rational(6));
        r = r.truncated(N - 2);
        for (int e = r.offset(); e <= r.order(); ++e)
            if (!r.coeff(e).is_zero()) {
                rep.ok = false;
                rep.first_bad_exponent = e;
                if (r.coeff(e).abs() > rep.max_abs_deviation)
                    rep.max_abs_deviation = r.coeff(e).abs();
            }
    }
    // (ii) full Hamiltonian identity, exact through N-6
    {
        auto prod = [](const PowerSeries<Rational>& a, const PowerSeries<Rational>& b) {
            return series_product(a, b, std::min(a.order() + b.offset(), b.order() + a.offset()));
        };
        PowerSeries<Rational> rhs = scale(prod(v, v), Rational(1, 2));
        rhs = rhs - scale(prod(u, prod(u, u)), Rational(2));
        rhs = rhs + scale(u, p.g2 * Rational(1, 2));
        rhs = rhs + scale(u.shifted(1), p.lambda * Rational(6));
        rhs.set_coeff(0, rhs.coeff(0) + p.g3 * Rational(1, 2));
        PowerSeries<Rational> diff = h - rhs;
        rep.order_checked = diff.order();
        for (int e = diff.offset(); e <= diff.order(); ++e)
            if (!diff.coeff(e).is_zero()) {
                rep.ok = false;
                rep.first_bad_exponent = e;
                if (diff.coeff(e).abs() > rep.max_abs_deviation)
                    rep.max_abs_deviation = diff.coeff(e).abs();
            }
    }
    return rep;
}

} // namespace p1

#endif
