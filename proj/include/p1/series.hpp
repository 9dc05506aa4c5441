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

#ifndef P1SERIES_SERIES_HPP
#define P1SERIES_SERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "p1/rational.hpp"

namespace p1 {

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational one_like(const Rational&) { return Rational(1); }

/// Dense truncated power/Laurent series. The lowest exponent may be
/// negative. `order` is the highest exponent whose coefficient is exact;
/// arithmetic propagates it so that silent precision loss cannot happen.
template <typename T>
class PowerSeries {
public:
    PowerSeries() : offset_(0), order_(-1) {}
    PowerSeries(int offset, std::vector<T> coeffs, int order)
        : offset_(offset), coeffs_(std::move(coeffs)), order_(order) {
        if (order_ < offset_ + static_cast<int>(coeffs_.size()) - 1)
            throw truncation_error("PowerSeries: stored range exceeds stated order");
    }

    static PowerSeries zero(int order) { return PowerSeries(0, {}, order); }
    static PowerSeries monomial(int exponent, T value, int order) {
        std::vector<T> c;
        c.push_back(std::move(value));
        return PowerSeries(exponent, std::move(c), order);
    }

    int offset() const { return offset_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(coeffs_.size()); }

    /// Coefficient of z^e; zero outside the stored range, but asking past
    /// the exact order is a bookkeeping bug.
    const T& coeff(int e) const {
        static const T zero{};
        if (e > order_) throw truncation_error("PowerSeries: coefficient beyond exact order");
        if (e < offset_ || e >= offset_ + size()) return zero;
        return coeffs_[static_cast<std::size_t>(e - offset_)];
    }

    void set_coeff(int e, T v) {
        if (e > order_) throw truncation_error("PowerSeries: coefficient beyond exact order");
        grow_to(e);
        coeffs_[static_cast<std::size_t>(e - offset_)] = std::move(v);
    }

    bool is_zero_series() const {
        for (const auto& c : coeffs_)
            if (!is_zero(c)) return false;
        return true;
    }

    /// Lowest exponent carrying a nonzero coefficient, or order+1 if none.
    int lowest_nonzero() const {
        for (int e = offset_; e < offset_ + size(); ++e)
            if (!is_zero(coeff(e))) return e;
        return order_ + 1;
    }

    PowerSeries truncated(int new_order) const {
        if (new_order > order_) throw truncation_error("PowerSeries: cannot extend by truncation");
        PowerSeries r;
        r.offset_ = offset_;
        r.order_ = new_order;
        int keep = std::max(0, std::min(size(), new_order - offset_ + 1));
        r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + keep);
        return r;
    }

    /// Shift exponents: multiply by z^k.
    PowerSeries shifted(int k) const {
        PowerSeries r = *this;
        r.offset_ += k;
        r.order_ += k;
        return r;
    }

    /// Term-wise derivative; the exact order drops by one.
    PowerSeries derivative() const {
        PowerSeries r;
        r.offset_ = offset_ - 1;
        r.order_ = order_ - 1;
        r.coeffs_.reserve(coeffs_.size());
        for (int e = offset_; e < offset_ + size(); ++e)
            r.coeffs_.push_back(scale(coeff(e), Rational(e)));
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r;
        r.order_ = std::min(a.order_, b.order_);
        int lo = std::min(a.offset_, b.offset_);
        int hi = std::min(r.order_,
                          std::max(a.offset_ + a.size(), b.offset_ + b.size()) - 1);
        r.offset_ = lo;
        for (int e = lo; e <= hi; ++e) r.set_coeff(e, a.safe_coeff(e) + b.safe_coeff(e));
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        return a + scale(b, Rational(-1));
    }

    friend PowerSeries scale(const PowerSeries& a, const Rational& s) {
        PowerSeries r;
        r.offset_ = a.offset_;
        r.order_ = a.order_;
        r.coeffs_.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) r.coeffs_.push_back(scale(c, s));
        return r;
    }

    /// Equality of the overlapping exact ranges.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        int lo = std::min(a.offset_, b.offset_);
        int hi = std::min(a.order_, b.order_);
        for (int e = lo; e <= hi; ++e)
            if (!(a.safe_coeff(e) == b.safe_coeff(e))) return false;
        return true;
    }

private:
    T safe_coeff(int e) const {
        if (e < offset_ || e >= offset_ + size()) return T{};
        return coeffs_[static_cast<std::size_t>(e - offset_)];
    }

    void grow_to(int e) {
        if (coeffs_.empty()) {
            offset_ = e;
            coeffs_.resize(1);
            return;
        }
        if (e < offset_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - e), T{});
            offset_ = e;
        } else if (e >= offset_ + size()) {
            coeffs_.resize(static_cast<std::size_t>(e - offset_ + 1));
        }
    }

    int offset_;
    std::vector<T> coeffs_;
    int order_;
};

/// Cauchy product, exact through min(Na + off_b, Nb + off_a), capped at N.
/// Requesting more than the inputs support is an error, never a silent loss.
template <typename T>
PowerSeries<T> series_product(const PowerSeries<T>& a, const PowerSeries<T>& b, int N) {
    int achievable = std::min(a.order() + b.offset(), b.order() + a.offset());
    if (N > achievable)
        throw truncation_error("series_product: requested order exceeds exact range");
    PowerSeries<T> r(a.offset() + b.offset(),
                     std::vector<T>(static_cast<std::size_t>(
                         std::max(0, N - a.offset() - b.offset() + 1))),
                     N);
    for (int i = a.offset(); i < a.offset() + a.size(); ++i) {
        const T& ai = a.coeff(i);
        if (is_zero(ai)) continue;
        for (int j = b.offset(); j < b.offset() + b.size(); ++j) {
            if (i + j > N) break;
            const T& bj = b.coeff(j);
            if (is_zero(bj)) continue;
            r.set_coeff(i + j, r.coeff(i + j) + ai * bj);
        }
    }
    return r;
}

/// log of a unit series (offset 0, constant term 1), through order N,
/// via L' = a'/a:   n*L_n = n*a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
template <typename T>
PowerSeries<T> series_log_unit(const PowerSeries<T>& a, int N) {
    if (N > a.order()) throw truncation_error("series_log_unit: order exceeds input");
    if (a.offset() > 0 || a.lowest_nonzero() != 0 || !(a.coeff(0) == one_like(a.coeff(0))))
        throw std::domain_error("series_log_unit: series must have constant term 1");
    PowerSeries<T> L(0, std::vector<T>(static_cast<std::size_t>(N + 1)), N);
    for (int n = 1; n <= N; ++n) {
        T s = scale(a.coeff(n), Rational(n));
        for (int k = 1; k < n; ++k) s = s - scale(L.coeff(k) * a.coeff(n - k), Rational(k));
        L.set_coeff(n, scale(s, Rational(1, n)));
    }
    return L;
}

/// exp of a series with zero constant term, through order N:
///   n*E_n = sum_{k=1}^{n} k L_k E_{n-k},  E_0 = 1.
template <typename T>
PowerSeries<T> series_exp_zero(const PowerSeries<T>& L, int N) {
    if (N > L.order()) throw truncation_error("series_exp_zero: order exceeds input");
    if (L.offset() <= 0 && !is_zero(L.coeff(0)))
        throw std::domain_error("series_exp_zero: series must have zero constant term");
    PowerSeries<T> E(0, std::vector<T>(static_cast<std::size_t>(N + 1)), N);
    E.set_coeff(0, one_like(T{}));
    for (int n = 1; n <= N; ++n) {
        T s{};
        for (int k = 1; k <= n; ++k) s = s + scale(L.coeff(k) * E.coeff(n - k), Rational(k));
        E.set_coeff(n, scale(s, Rational(1, n)));
    }
    return E;
}

} // namespace p1

#endif
