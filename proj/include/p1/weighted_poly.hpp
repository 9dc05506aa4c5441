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

#ifndef P1SERIES_WEIGHTED_POLY_HPP
#define P1SERIES_WEIGHTED_POLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "p1/rational.hpp"

namespace p1 {

/// A point (g2, lambda, g3) in parameter space, exact.
struct ParameterTriple {
    Rational g2, lambda, g3;

    friend bool operator==(const ParameterTriple& a, const ParameterTriple& b) {
        return a.g2 == b.g2 && a.lambda == b.lambda && a.g3 == b.g3;
    }
};

/// Monomial exponents for g2^i lambda^j g3^k. Weight is 4i + 5j + 6k.
struct Exponents {
    int g2 = 0, lambda = 0, g3 = 0;
    int weight() const { return 4 * g2 + 5 * lambda + 6 * g3; }
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Polynomial in (g2, lambda, g3) with exact rational coefficients, stored
/// sparsely. Zero coefficients are never kept.
class WeightedPolynomial {
public:
    WeightedPolynomial() = default;
    explicit WeightedPolynomial(const Rational& c) { add_term({}, c); }

    static WeightedPolynomial monomial(Exponents e, const Rational& c) {
        WeightedPolynomial p;
        p.add_term(e, c);
        return p;
    }
    static WeightedPolynomial g2(const Rational& c = Rational(1)) {
        return monomial({1, 0, 0}, c);
    }
    static WeightedPolynomial lambda(const Rational& c = Rational(1)) {
        return monomial({0, 1, 0}, c);
    }
    static WeightedPolynomial g3(const Rational& c = Rational(1)) {
        return monomial({0, 0, 1}, c);
    }

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(Exponents e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeightedPolynomial& operator+=(const WeightedPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    WeightedPolynomial& operator-=(const WeightedPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend WeightedPolynomial operator+(WeightedPolynomial a, const WeightedPolynomial& b) {
        a += b;
        return a;
    }
    friend WeightedPolynomial operator-(WeightedPolynomial a, const WeightedPolynomial& b) {
        a -= b;
        return a;
    }
    WeightedPolynomial operator-() const {
        WeightedPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b) {
        WeightedPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.g2 + eb.g2, ea.lambda + eb.lambda, ea.g3 + eb.g3}, ca * cb);
        return r;
    }
    friend bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Exact value at rational parameters.
    Rational evaluate(const ParameterTriple& p) const {
        Rational r(0);
        for (const auto& [e, c] : terms_)
            r += c * p.g2.pow(e.g2) * p.lambda.pow(e.lambda) * p.g3.pow(e.g3);
        return r;
    }

    /// Substitutes g2 -> z^4 g2, lambda -> z^5 lambda, g3 -> z^6 g3.
    /// For a weight-n homogeneous polynomial this is multiplication by z^n.
    WeightedPolynomial scale_weights(const Rational& zeta) const {
        WeightedPolynomial r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * zeta.pow(e.weight()));
        return r;
    }

    /// Weight if every term has the same one (zero polynomial has any weight).
    std::optional<int> homogeneous_weight() const {
        std::optional<int> w;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (!w)
                w = e.weight();
            else if (*w != e.weight())
                return std::nullopt;
        }
        return w ? w : std::optional<int>(0);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_string();
            auto var = [&](const char* name, int p) {
                if (p == 0) return;
                os << "*" << name;
                if (p > 1) os << "^" << p;
            };
            var("g2", e.g2);
            var("lambda", e.lambda);
            var("g3", e.g3);
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const WeightedPolynomial& p) {
        return os << p.to_string();
    }

private:
    std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const WeightedPolynomial& p) { return p.is_zero(); }
inline WeightedPolynomial scale(const WeightedPolynomial& p, const Rational& s) {
    WeightedPolynomial r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c * s);
    return r;
}
inline WeightedPolynomial one_like(const WeightedPolynomial&) {
    return WeightedPolynomial(Rational(1));
}

} // namespace p1

#endif
