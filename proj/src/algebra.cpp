#include "glambda/algebra.hpp"

namespace glambda {

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement r = u;
    for (const auto& [d, g] : v.comps_) {
        auto it = r.comps_.find(d);
        if (it == r.comps_.end()) {
            r.comps_[d] = g;
        } else {
            it->second += g;
            if (it->second.is_zero()) r.comps_.erase(it);
        }
    }
    return r;
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) { return u + (-v); }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [d, f] : comps_) r.comps_[d] = -f;
    return r;
}

AlgebraElement operator*(const AlgebraElement& u, const LambdaScalar& c) {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [d, f] : u.comps_) r.comps_[d] = f * c;
    return r;
}

namespace {

// X^a h(H) Y^b with a,b >= 0, normalized by contracting min(a,b) innermost
// X/Y pairs via X h(H) Y = h(H-2) T_0(H).
AlgebraElement contract(int a, HPoly h, int b) {
    while (a > 0 && b > 0) {
        h = shift(h, LambdaScalar(-2)) * t_poly(0);
        --a;
        --b;
    }
    if (h.is_zero()) return AlgebraElement::zero();
    return AlgebraElement::monomial(a - b, h);
}

// Product of two normal-form monomials (degrees d1, d2 with polynomials f, g).
AlgebraElement mul_monomials(int d1, const HPoly& f, int d2, const HPoly& g) {
    if (d1 >= 0 && d2 >= 0) {
        // X^{d1} f(H) X^{d2} g(H) = X^{d1+d2} f(H+2 d2) g(H)
        return AlgebraElement::monomial(d1 + d2, shift(f, LambdaScalar(2 * d2)) * g);
    }
    if (d1 >= 0 && d2 < 0) {
        // X^{d1} [f g](H) Y^{-d2}: contract.
        return contract(d1, f * g, -d2);
    }
    if (d1 < 0 && d2 <= 0) {
        // f(H) Y^{-d1} g(H) Y^{-d2} = f(H) g(H - 2 d1) Y^{-d1-d2}
        return AlgebraElement::monomial(d1 + d2, f * shift(g, LambdaScalar(-2 * d1)));
    }
    // d1 < 0, d2 > 0:  f(H) Y^{b} X^{a} g(H) with b = -d1, a = d2.
    const int b = -d1;
    const int a = d2;
    const int m = std::min(a, b);
    // Y^m X^m = T_1(H) ... T_m(H).
    HPoly w(LambdaScalar(1));
    for (int i = 1; i <= m; ++i) w *= t_poly(i);
    if (b <= a) {
        // f(H) W(H) X^{a-b} g(H) = X^{a-b} (fW)(H+2(a-b)) g(H)
        const int r = a - b;
        return AlgebraElement::monomial(r, shift(f * w, LambdaScalar(2 * r)) * g);
    }
    // f(H) Y^{b-a} W(H) g(H) = f(H) (Wg)(H+2(b-a)) Y^{b-a}
    const int s = b - a;
    return AlgebraElement::monomial(-s, f * shift(w * g, LambdaScalar(2 * s)));
}

}  // namespace

AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement r;
    for (const auto& [d1, f] : u.components())
        for (const auto& [d2, g] : v.components()) r = r + mul_monomials(d1, f, d2, g);
    return r;
}

AlgebraElement ad_pow(const AlgebraElement& y, unsigned p, const AlgebraElement& x) {
    AlgebraElement r = x;
    for (unsigned i = 0; i < p; ++i) r = bracket(y, r);
    return r;
}

AlgebraElement casimir_apply(const AlgebraElement& u) {
    const auto X = AlgebraElement::gen_x();
    const auto Y = AlgebraElement::gen_y();
    const auto H = AlgebraElement::gen_h();
    const AlgebraElement adh = bracket(H, u);
    return bracket(Y, bracket(X, u)) * LambdaScalar(2) + bracket(H, adh) * LambdaScalar(Rational(1, 2)) + adh;
}

AlgebraElement pow(const AlgebraElement& u, unsigned e) {
    AlgebraElement acc = AlgebraElement::one();
    AlgebraElement b = u;
    while (e) {
        if (e & 1u) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1u;
    }
    return acc;
}

MatrixRealization principal_x(int n) {
    MatrixRealization m(n);
    for (int i = 1; i <= n - 1; ++i) m.at(i - 1, i) = Rational(i) * Rational(n - i);
    return m;
}

MatrixRealization principal_y(int n) {
    MatrixRealization m(n);
    for (int i = 1; i <= n - 1; ++i) m.at(i, i - 1) = 1;
    return m;
}

MatrixRealization principal_h(int n) {
    MatrixRealization m(n);
    for (int i = 1; i <= n; ++i) m.at(i - 1, i - 1) = n - 2 * i + 1;
    return m;
}

MatrixRealization specialize(const AlgebraElement& u, int n) {
    if (n < 1) throw std::invalid_argument("specialize: n must be >= 1");
    MatrixRealization acc(n);
    const MatrixRealization X = principal_x(n);
    const MatrixRealization Y = principal_y(n);
    for (const auto& [d, f] : u.components()) {
        // f(diag(alpha_i)) with lambda -> n.
        MatrixRealization fm(n);
        for (int i = 1; i <= n; ++i) {
            const Rational node(n - 2 * i + 1);
            Rational val(0), p(1);
            for (int m = 0; m <= f.degree(); ++m) {
                val += eval_lambda(f.coeff(m), Rational(n)) * p;
                p *= node;
            }
            fm.at(i - 1, i - 1) = val;
        }
        if (d > 0)
            acc = acc + X.pow(static_cast<unsigned>(d)) * fm;
        else if (d < 0)
            acc = acc + fm * Y.pow(static_cast<unsigned>(-d));
        else
            acc = acc + fm;
    }
    return acc;
}

HPoly pn_poly(int n) {
    if (n < 1) throw std::invalid_argument("pn_poly: n must be >= 1");
    HPoly acc(LambdaScalar(1));
    for (int i = 1; i <= n; ++i) acc *= hvar() + HPoly(LambdaScalar(2 * i - 1 - n));
    return acc;
}

HPoly pn_reduce(const HPoly& f, int n) {
    auto [q, r] = divmod(f, pn_poly(n));
    (void)q;
    return r;
}

}  // namespace glambda
