#pragma once

// Dense univariate polynomials over a field K. The coefficient vector never
// carries a trailing zero; the zero polynomial is the empty vector (degree -1).
//
// Everything in the toolkit is built from two instances:
//   Polynomial<Rational>      -- polynomials in lambda
//   Polynomial<LambdaScalar>  -- polynomials in H (and, inside SScalar, in s)

#include <stdexcept>
#include <utility>
#include <vector>

#include "glambda/rational.hpp"

namespace glambda {

template <typename K>
class Polynomial {
public:
    Polynomial() = default;

    // Implicit only from K itself and plain integers; anything else (e.g. GMP
    // expression temporaries) must be materialized by the caller first.
    template <typename T>
        requires(std::is_integral_v<T> || std::is_same_v<std::decay_t<T>, K>)
    Polynomial(const T& c) : coeffs_{K(c)} {
        normalize();
    }

    explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial variable() { return Polynomial(std::vector<K>{K(0), K(1)}); }

    static Polynomial monomial(int degree, const K& c) {
        if (degree < 0) throw std::invalid_argument("negative degree");
        std::vector<K> v(static_cast<size_t>(degree) + 1, K(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }

    const std::vector<K>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == K(1); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return K(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    const K& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    K constant_term() const { return coeff(0); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        std::vector<K> v(coeffs_);
        for (auto& c : v) c = -c;
        Polynomial p;
        p.coeffs_ = std::move(v);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == K(0)) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const K& c) {
        if (c == K(0)) return Polynomial();
        std::vector<K> v(a.coeffs_);
        for (auto& x : v) x *= c;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const K& c, const Polynomial& a) { return a * c; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    K evaluate(const K& x) const {
        K acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // f(x + c), expanded.
    Polynomial shifted(const K& c) const {
        Polynomial acc;
        Polynomial lin(std::vector<K>{c, K(1)});
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + Polynomial(coeffs_[i]);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<K> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * K(static_cast<int>(i));
        return Polynomial(std::move(v));
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc(K(1)), b(*this);
        while (e) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1u;
        }
        return acc;
    }

    // Quotient and remainder; requires a nonzero divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        Polynomial rem = a;
        if (rem.degree() < b.degree()) return {Polynomial(), rem};
        std::vector<K> q(static_cast<size_t>(rem.degree() - b.degree()) + 1, K(0));
        const K inv_lead = K(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int d = rem.degree() - b.degree();
            const K c = rem.leading() * inv_lead;
            q[static_cast<size_t>(d)] = c;
            std::vector<K> v(rem.coeffs_);
            for (int i = 0; i <= b.degree(); ++i) v[static_cast<size_t>(i + d)] -= c * b.coeffs_[static_cast<size_t>(i)];
            rem = Polynomial(std::move(v));
        }
        return {Polynomial(std::move(q)), rem};
    }

    // Exact division; a nonzero remainder is the caller's error.
    friend Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / leading());
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
template <typename K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// (a)_i = a(a+1)...(a+i-1); empty product is 1. Works for polynomials and scalars.
template <typename R>
R pochhammer(const R& a, unsigned i) {
    R acc(1);
    R term(a);
    for (unsigned j = 0; j < i; ++j) {
        acc = acc * term;
        term = term + R(1);
    }
    return acc;
}

}  // namespace glambda
