#pragma once

// Normal-form arithmetic in the associative algebra A_lambda generated by
// X, Y, H subject to [X,Y]=H, [H,X]=2X, [H,Y]=-2Y and XY = (lambda^2-(H-1)^2)/4.
//
// Elements are stored in normal form as a finitely supported map
//   degree d > 0  ->  X^d f_d(H)
//   degree d = 0  ->  f_0(H)
//   degree d < 0  ->  f_d(H) Y^{-d}
// (X powers left of their H-polynomial, Y powers right of it). Products are
// normalized with the rewrite rules X f(H) = f(H-2) X, Y f(H) = f(H+2) Y and
// the contractions XY = T_0(H), YX = T_1(H).

#include <map>

#include "glambda/hpoly.hpp"
#include "glambda/matrix.hpp"

namespace glambda {

class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement one() { return from_poly(HPoly(LambdaScalar(1))); }
    static AlgebraElement gen_x() { return monomial(1, HPoly(LambdaScalar(1))); }
    static AlgebraElement gen_y() { return monomial(-1, HPoly(LambdaScalar(1))); }
    static AlgebraElement gen_h() { return from_poly(hvar()); }

    static AlgebraElement from_poly(const HPoly& f) { return monomial(0, f); }

    static AlgebraElement monomial(int degree, const HPoly& f) {
        AlgebraElement u;
        if (!f.is_zero()) u.comps_[degree] = f;
        return u;
    }

    const std::map<int, HPoly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    HPoly component(int degree) const {
        const auto it = comps_.find(degree);
        return it == comps_.end() ? HPoly() : it->second;
    }

    friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
    friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
    AlgebraElement operator-() const;
    friend AlgebraElement operator*(const AlgebraElement& u, const LambdaScalar& c);
    friend AlgebraElement operator*(const LambdaScalar& c, const AlgebraElement& u) { return u * c; }

    bool operator==(const AlgebraElement& o) const { return comps_ == o.comps_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

private:
    std::map<int, HPoly> comps_;
};

AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v);
inline AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) { return mul(u, v); }

inline AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) { return mul(u, v) - mul(v, u); }

// (ad y)^p (x).
AlgebraElement ad_pow(const AlgebraElement& y, unsigned p, const AlgebraElement& x);

// The Casimir Omega = 2YX + H^2/2 + H acting in the adjoint representation:
// 2 (ad Y)(ad X) + (ad H)^2/2 + (ad H).
AlgebraElement casimir_apply(const AlgebraElement& u);

AlgebraElement pow(const AlgebraElement& u, unsigned e);

// --- integer-lambda matrix oracle (principal embedding) ---

using MatrixRealization = SquareMatrix<Rational>;

MatrixRealization principal_x(int n);
MatrixRealization principal_y(int n);
MatrixRealization principal_h(int n);

// Image of u under the principal embedding composed with lambda -> n.
// Throws "pole at integer lambda" when a coefficient denominator vanishes.
MatrixRealization specialize(const AlgebraElement& u, int n);

// P_n(H) = prod_{1<=i<=n} (H - n + 2i - 1), the defining relation of gl(n)_0.
HPoly pn_poly(int n);

// Remainder of f modulo P_n(H); expects lambda-free coefficients.
HPoly pn_reduce(const HPoly& f, int n);

}  // namespace glambda
