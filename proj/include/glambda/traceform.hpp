#pragma once

// The invariant trace on gl(lambda), normalized so tr(1) = lambda. On C[H] it
// is the polynomial-in-lambda extension of tr f(H) = sum_{i=1..n} f(alpha_i);
// the moments tr(H^m) are recovered by exact Lagrange interpolation through
// the integer points n = 1..m+2 (tr(H^m) is odd of degree m+1 in lambda).

#include "glambda/algebra.hpp"
#include "glambda/series.hpp"

namespace glambda {

class TraceTable {
public:
    explicit TraceTable(int max_degree);

    const LambdaScalar& moment(int m) const;
    int max_degree() const { return static_cast<int>(moments_.size()) - 1; }
    const std::vector<LambdaScalar>& moments() const { return moments_; }

    // Interpolated tr(H^m) as an element of Q[lambda], independent of any table.
    static LambdaScalar interpolate_moment(int m);

private:
    std::vector<LambdaScalar> moments_;
};

// Shared moment store; grows on demand, previously computed entries never change.
const LambdaScalar& trace_moment(int m);

// tr f(H), symbolic in lambda.
LambdaScalar trace_h(const HPoly& f);

// The lambda-divided normalization tr(f)/lambda, under which tr(1) = 1.
LambdaScalar trace_h_normalized(const HPoly& f);

// tr u = tr of the degree-0 component (off-diagonal degrees are traceless).
LambdaScalar trace(const AlgebraElement& u);

// <u, v> = tr(uv).
LambdaScalar form(const AlgebraElement& u, const AlgebraElement& v);

// (e^{lambda t} - e^{-lambda t}) / (e^t - e^{-t}) through order N.
TruncatedSeries<LambdaScalar> trace_series(int order = kDefaultSeriesOrder);

// The lambda = 0 functional with tr(1) = 1:  2t / (e^t - e^{-t}).
TruncatedSeries<LambdaScalar> trace_zero_series(int order = kDefaultSeriesOrder);

// Finite-n oracle: sum_{i=1..n} f(alpha_i) for a lambda-free polynomial.
Rational trace_h_at(const Polynomial<Rational>& f, int n);

}  // namespace glambda
