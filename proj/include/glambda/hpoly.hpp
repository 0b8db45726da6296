#pragma once

// Polynomials in the Cartan generator H over Q(lambda), plus the small pool of
// operations the rewrite rules and the orthogonal polynomials are built from:
// shifts f(H+c), step-2 forward/backward differences, the quadratic factors
// T_i(H) = (lambda^2 - (H+2i-1)^2)/4, and evaluation at the spectrum nodes
// alpha_i = lambda - 2i + 1.

#include "glambda/ratfunc.hpp"

namespace glambda {

using HPoly = Polynomial<LambdaScalar>;

inline HPoly hvar() { return HPoly::variable(); }

inline HPoly shift(const HPoly& f, const LambdaScalar& c) { return f.shifted(c); }

enum class Direction { forward, backward };

// forward:  f(H+2) - f(H);  backward: f(H) - f(H-2).
inline HPoly difference(const HPoly& f, Direction dir) {
    if (dir == Direction::forward) return shift(f, LambdaScalar(2)) - f;
    return f - shift(f, LambdaScalar(-2));
}

// T_i(H) = (lambda^2 - (H + 2i - 1)^2)/4. T_0 is the normal form of X*Y,
// T_1 the normal form of Y*X.
inline HPoly t_poly(int i) {
    if (i < 0) throw std::invalid_argument("t_poly: negative index");
    const LambdaScalar quarter(Rational(1, 4));
    const HPoly lin = hvar() + HPoly(LambdaScalar(2 * i - 1));
    return quarter * (HPoly(lambda() * lambda()) - lin * lin);
}

// alpha_i = lambda - 2i + 1 (1-based spectrum nodes of the principal embedding).
inline LambdaScalar alpha_node(int i) { return lambda() + LambdaScalar(1 - 2 * i); }

inline LambdaScalar eval_alpha(const HPoly& f, int i) {
    if (i < 1) throw std::invalid_argument("eval_alpha: index must be >= 1");
    return f.evaluate(alpha_node(i));
}

// lambda -> v applied coefficient-wise; throws "pole at integer lambda".
inline Polynomial<Rational> hpoly_eval_lambda(const HPoly& f, const Rational& v) {
    std::vector<Rational> coeffs(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) coeffs[static_cast<size_t>(i)] = eval_lambda(f.coeff(i), v);
    return Polynomial<Rational>(std::move(coeffs));
}

// Promotion of a lambda-free polynomial into Q(lambda)[H].
inline HPoly hpoly_from_rational(const Polynomial<Rational>& f) {
    std::vector<LambdaScalar> coeffs(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) coeffs[static_cast<size_t>(i)] = LambdaScalar(f.coeff(i));
    return HPoly(std::move(coeffs));
}

}  // namespace glambda
