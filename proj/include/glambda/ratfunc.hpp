#pragma once

// Fraction field of K[x] for a field K. Canonical form: numerator and
// denominator coprime, denominator monic; zero is 0/1. LambdaScalar, the
// coefficient field Q(lambda) used everywhere, is RatFunc<Rational>; the
// two-variable field Q(lambda)(s) used by the gl(infinity) window is
// RatFunc<LambdaScalar>.

#include <stdexcept>
#include <utility>

#include "glambda/polynomial.hpp"

namespace glambda {

template <typename K>
class RatFunc {
public:
    RatFunc() : num_(), den_(K(1)) {}

    template <typename T>
        requires(std::is_integral_v<T> || std::is_same_v<std::decay_t<T>, K>)
    RatFunc(const T& c) : num_(K(c)), den_(K(1)) {}

    RatFunc(Polynomial<K> num) : num_(std::move(num)), den_(K(1)) {}

    RatFunc(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        reduce();
    }

    static RatFunc variable() { return RatFunc(Polynomial<K>::variable()); }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    // Cross-multiplication of reduced forms.
    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Evaluation at x = v; throws on a pole.
    K evaluate(const K& v) const {
        const K d = den_.evaluate(v);
        if (d == K(0)) throw std::domain_error("pole in rational function evaluation");
        return num_.evaluate(v) / d;
    }

    bool has_pole_at(const K& v) const { return den_.evaluate(v) == K(0); }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial<K>(K(1));
            return;
        }
        if (!den_.is_one()) {
            const auto g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = div_exact(num_, g);
                den_ = div_exact(den_, g);
            }
            const K lc = den_.leading();
            if (!(lc == K(1))) {
                const K inv = K(1) / lc;
                num_ = num_ * inv;
                den_ = den_ * inv;
            }
        }
    }

    Polynomial<K> num_;
    Polynomial<K> den_;
};

// --- the coefficient field Q(lambda) ---

using LambdaPoly = Polynomial<Rational>;
using LambdaScalar = RatFunc<Rational>;

inline LambdaScalar lambda() { return LambdaScalar::variable(); }

// lambda -> v, defined only away from poles.
inline Rational eval_lambda(const LambdaScalar& a, const Rational& v) {
    if (a.has_pole_at(v)) throw std::domain_error("pole at integer lambda");
    return a.evaluate(v);
}

inline bool is_rational_constant(const LambdaScalar& a) {
    return a.is_polynomial() && a.num().is_constant();
}

// Structural total order (for deterministic term ordering of quasi-polynomials).
inline int struct_cmp(const Rational& a, const Rational& b) { return cmp(a, b); }

template <typename K>
int struct_cmp(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const int c = struct_cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

template <typename K>
int struct_cmp(const RatFunc<K>& a, const RatFunc<K>& b) {
    const int c = struct_cmp(a.num(), b.num());
    if (c != 0) return c;
    return struct_cmp(a.den(), b.den());
}

}  // namespace glambda
