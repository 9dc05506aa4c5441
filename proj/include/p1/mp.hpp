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

#ifndef P1SERIES_MP_HPP
#define P1SERIES_MP_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "p1/rational.hpp"

namespace p1 {

/// Bits needed to represent `digits` decimal digits, with headroom.
inline mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 1) digits = 1;
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
}

/// Working precision policy: requested output digits plus 10 guard digits.
inline mpfr_prec_t working_bits(int digits) { return bits_for_digits(digits + 10); }

/// Arbitrary-precision real scalar. Precision is fixed per value; binary
/// operations produce results at the larger operand precision.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }
    MpReal(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.mpq().get_mpq_t(), MPFR_RNDN);
    }
    MpReal(const char* s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0)
            throw parse_error(std::string("not a real number: '") + s + "'");
    }

    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    static MpReal pi(mpfr_prec_t prec) {
        MpReal r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static MpReal from_double(double x, mpfr_prec_t prec) {
        MpReal r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static MpReal nan(mpfr_prec_t prec = 64) {
        MpReal r(prec);
        mpfr_set_nan(r.v_);
        return r;
    }
    static MpReal pow2(long e, mpfr_prec_t prec) {
        MpReal r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    friend MpReal operator+(const MpReal& a, const MpReal& b) { return bin(mpfr_add, a, b); }
    friend MpReal operator-(const MpReal& a, const MpReal& b) { return bin(mpfr_sub, a, b); }
    friend MpReal operator*(const MpReal& a, const MpReal& b) { return bin(mpfr_mul, a, b); }
    friend MpReal operator/(const MpReal& a, const MpReal& b) { return bin(mpfr_div, a, b); }
    MpReal operator-() const {
        MpReal r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MpReal& operator+=(const MpReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator-=(const MpReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator*=(const MpReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator/=(const MpReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend MpReal operator*(const MpReal& a, long b) {
        MpReal r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MpReal operator/(const MpReal& a, long b) {
        MpReal r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

    friend MpReal abs(const MpReal& a) { return un(mpfr_abs, a); }
    friend MpReal sqrt(const MpReal& a) { return un(mpfr_sqrt, a); }
    friend MpReal exp(const MpReal& a) { return un(mpfr_exp, a); }
    friend MpReal log(const MpReal& a) { return un(mpfr_log, a); }
    friend MpReal sin(const MpReal& a) { return un(mpfr_sin, a); }
    friend MpReal cos(const MpReal& a) { return un(mpfr_cos, a); }
    friend MpReal sinh(const MpReal& a) { return un(mpfr_sinh, a); }
    friend MpReal cosh(const MpReal& a) { return un(mpfr_cosh, a); }
    friend MpReal atan2(const MpReal& y, const MpReal& x) { return bin(mpfr_atan2, y, x); }
    friend MpReal hypot(const MpReal& a, const MpReal& b) { return bin(mpfr_hypot, a, b); }
    friend MpReal pow_si(const MpReal& a, long e) {
        MpReal r(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend MpReal root_ui(const MpReal& a, unsigned long k) {
        MpReal r(a.prec());
#if MPFR_VERSION_MAJOR >= 4
        mpfr_rootn_ui(r.v_, a.v_, k, MPFR_RNDN);
#else
        mpfr_root(r.v_, a.v_, k, MPFR_RNDN);
#endif
        return r;
    }
    friend MpReal min(const MpReal& a, const MpReal& b) { return bin(mpfr_min, a, b); }
    friend MpReal max(const MpReal& a, const MpReal& b) { return bin(mpfr_max, a, b); }

    /// Scientific notation with `digits` significant digits; deterministic.
    std::string to_string(int digits) const {
        if (digits < 2) digits = 2;
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%dRe", digits - 1);
        int n = mpfr_snprintf(nullptr, 0, fmt, v_);
        std::string out(static_cast<std::size_t>(n), '\0');
        mpfr_snprintf(out.data(), static_cast<std::size_t>(n) + 1, fmt, v_);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MpReal& x) {
        return os << x.to_string(20);
    }

private:
    template <typename F>
    static MpReal un(F f, const MpReal& a) {
        MpReal r(a.prec());
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    template <typename F>
    static MpReal bin(F f, const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

/// Complex scalar over MpReal. Kept deliberately small: only the operations
/// the series evaluation and root finding need.
class MpComplex {
public:
    MpReal re, im;

    explicit MpComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit MpComplex(const MpReal& r) : re(r), im(MpReal(0L, r.prec())) {}
    MpComplex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}
    MpComplex(const Rational& q, mpfr_prec_t prec) : re(q, prec), im(0L, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    static MpComplex i(mpfr_prec_t prec) { return MpComplex(MpReal(0L, prec), MpReal(1L, prec)); }
    static MpComplex polar(const MpReal& r, const MpReal& theta) {
        return MpComplex(r * cos(theta), r * sin(theta));
    }

    MpComplex operator-() const { return MpComplex(-re, -im); }
    MpComplex conj() const { return MpComplex(re, -im); }

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
        return MpComplex(a.re + b.re, a.im + b.im);
    }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
        return MpComplex(a.re - b.re, a.im - b.im);
    }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return MpComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend MpComplex operator*(const MpComplex& a, const MpReal& s) {
        return MpComplex(a.re * s, a.im * s);
    }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        MpReal d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw std::domain_error("MpComplex: division by zero");
        return MpComplex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    MpComplex& operator+=(const MpComplex& o) { re += o.re; im += o.im; return *this; }
    MpComplex& operator-=(const MpComplex& o) { re -= o.re; im -= o.im; return *this; }

    friend bool operator==(const MpComplex& a, const MpComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend MpReal abs(const MpComplex& a) { return hypot(a.re, a.im); }
    friend MpReal arg(const MpComplex& a) { return atan2(a.im, a.re); }

    friend MpComplex exp(const MpComplex& a) {
        MpReal m = exp(a.re);
        return MpComplex(m * cos(a.im), m * sin(a.im));
    }

    friend MpComplex pow_ui(MpComplex base, unsigned long e) {
        MpComplex r(1L, base.prec());
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string(int digits) const {
        return re.to_string(digits) + (im.sign() < 0 ? " - " : " + ") +
               abs(im).to_string(digits) + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const MpComplex& z) {
        return os << z.to_string(20);
    }
};

} // namespace p1

#endif
