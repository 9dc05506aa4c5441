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

#ifndef P1SERIES_RATIONAL_HPP
#define P1SERIES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace p1 {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact rational of unbounded magnitude. Always stored in lowest terms
/// with positive denominator; every operation is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), no_canon{}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0^negative");
            return Rational(0);
        }
        mpz_class n, d;
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ae);
        mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ae);
        if (e < 0) return Rational(d, n);
        return Rational(n, d);
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        std::string s = num().get_str();
        if (!is_integer()) s += "/" + den().get_str();
        return s;
    }

    double to_double() const { return v_.get_d(); }

    /// Parses an integer, a fraction "p/q", or a finite decimal, exactly.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct no_canon {};
    Rational(mpq_class q, no_canon) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw parse_error("not a rational: '" + std::string(text) + "'"); };
    std::string s(text);
    if (s.empty()) fail();
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
        if (p == start) fail();
        return s.substr(start, p - start);
    };
    std::string intpart = digits(pos);
    if (pos == s.size()) {
        mpz_class n(intpart, 10);
        if (neg) n = -n;
        return Rational(n);
    }
    if (s[pos] == '/') {
        ++pos;
        std::string denpart = digits(pos);
        if (pos != s.size()) fail();
        mpz_class n(intpart, 10), d(denpart, 10);
        if (d == 0) fail();
        if (neg) n = -n;
        return Rational(n, d);
    }
    if (s[pos] == '.') {
        ++pos;
        std::string fracpart = digits(pos);
        if (pos != s.size()) fail();
        mpz_class n(intpart + fracpart, 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fracpart.size());
        if (neg) n = -n;
        return Rational(n, d);
    }
    fail();
    return Rational(0); // unreachable
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational scale(const Rational& x, const Rational& s) { return x * s; }

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace p1

#endif
