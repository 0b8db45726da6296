#pragma once

// Formal power series in t over a field K, truncated at a fixed order N
// (coefficients of t^0..t^N). Arithmetic requires equal orders; reciprocal
// requires a unit constant term.

#include <stdexcept>
#include <vector>

#include "glambda/polynomial.hpp"

namespace glambda {

inline constexpr int kDefaultSeriesOrder = 24;

template <typename K>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(order), c_(static_cast<size_t>(order) + 1, K(0)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static TruncatedSeries from_coeffs(std::vector<K> coeffs) {
        TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    static TruncatedSeries constant(int order, const K& c) {
        TruncatedSeries s(order);
        s.c_[0] = c;
        return s;
    }

    // e^{ct} through order N.
    static TruncatedSeries exp_linear(int order, const K& c) {
        TruncatedSeries s(order);
        K term(1);
        for (int j = 0; j <= order; ++j) {
            s.c_[static_cast<size_t>(j)] = term;
            term = term * c / K(j + 1);
        }
        return s;
    }

    int order() const { return order_; }
    const K& coeff(int j) const {
        if (j < 0 || j > order_) throw std::out_of_range("series coefficient index");
        return c_[static_cast<size_t>(j)];
    }
    void set_coeff(int j, const K& v) { c_.at(static_cast<size_t>(j)) = v; }
    const std::vector<K>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!(v == K(0))) return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order_);
        for (int j = 0; j <= a.order_; ++j) r.c_[static_cast<size_t>(j)] = a.c_[static_cast<size_t>(j)] + b.c_[static_cast<size_t>(j)];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order_);
        for (int j = 0; j <= a.order_; ++j) r.c_[static_cast<size_t>(j)] = a.c_[static_cast<size_t>(j)] - b.c_[static_cast<size_t>(j)];
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r(order_);
        for (int j = 0; j <= order_; ++j) r.c_[static_cast<size_t>(j)] = -c_[static_cast<size_t>(j)];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.c_[static_cast<size_t>(i)] == K(0)) continue;
            for (int j = 0; i + j <= a.order_; ++j)
                r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const K& c) {
        TruncatedSeries r(a.order_);
        for (int j = 0; j <= a.order_; ++j) r.c_[static_cast<size_t>(j)] = a.c_[static_cast<size_t>(j)] * c;
        return r;
    }
    friend TruncatedSeries operator*(const K& c, const TruncatedSeries& a) { return a * c; }

    bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    // 1/S; S(0) must be a unit.
    TruncatedSeries reciprocal() const {
        if (c_[0] == K(0)) throw std::domain_error("non-unit series");
        TruncatedSeries r(order_);
        const K inv0 = K(1) / c_[0];
        r.c_[0] = inv0;
        for (int j = 1; j <= order_; ++j) {
            K acc(0);
            for (int i = 1; i <= j; ++i) acc += c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(j - i)];
            r.c_[static_cast<size_t>(j)] = -inv0 * acc;
        }
        return r;
    }

    // S/t for S with S(0) = 0; the result is one order shorter.
    TruncatedSeries divide_by_t() const {
        if (order_ < 1) throw std::domain_error("series too short to divide by t");
        if (!(c_[0] == K(0))) throw std::domain_error("series not divisible by t");
        TruncatedSeries r(order_ - 1);
        for (int j = 1; j <= order_; ++j) r.c_[static_cast<size_t>(j - 1)] = c_[static_cast<size_t>(j)];
        return r;
    }

    TruncatedSeries truncate(int new_order) const {
        if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
        TruncatedSeries r(new_order);
        for (int j = 0; j <= new_order; ++j) r.c_[static_cast<size_t>(j)] = c_[static_cast<size_t>(j)];
        return r;
    }

    // d/dt, one order shorter.
    TruncatedSeries derivative() const {
        if (order_ < 1) return TruncatedSeries(0);
        TruncatedSeries r(order_ - 1);
        for (int j = 1; j <= order_; ++j) r.c_[static_cast<size_t>(j - 1)] = c_[static_cast<size_t>(j)] * K(j);
        return r;
    }

private:
    void require_same_order(const TruncatedSeries& o) const {
        if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
    }

    int order_;
    std::vector<K> c_;
};

// a/b where a and b may share a power of t (both orders drop accordingly).
// Used for quotients like (e^{lt}-e^{-lt})/(e^t-e^{-t}) whose numerator and
// denominator both vanish at t = 0.
template <typename K>
TruncatedSeries<K> quotient_cancel_t(TruncatedSeries<K> a, TruncatedSeries<K> b) {
    while (b.coeff(0) == K(0)) {
        if (b.is_zero()) throw std::domain_error("division by zero series");
        if (!(a.coeff(0) == K(0))) throw std::domain_error("non-unit series");
        a = a.divide_by_t();
        b = b.divide_by_t();
    }
    return a * b.reciprocal();
}

}  // namespace glambda
