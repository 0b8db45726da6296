#include "glambda/traceform.hpp"

#include <mutex>

namespace glambda {

namespace {

// Lagrange interpolation through (x_j, y_j), exact over Q.
Polynomial<Rational> lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Polynomial<Rational> master(Rational(1));
    for (const auto& x : xs) master *= Polynomial<Rational>::variable() - Polynomial<Rational>(x);
    Polynomial<Rational> acc;
    for (size_t j = 0; j < xs.size(); ++j) {
        const auto basis = div_exact(master, Polynomial<Rational>::variable() - Polynomial<Rational>(xs[j]));
        Rational denom(1);
        for (size_t i = 0; i < xs.size(); ++i)
            if (i != j) denom *= xs[j] - xs[i];
        acc += basis * (ys[j] / denom);
    }
    return acc;
}

}  // namespace

LambdaScalar TraceTable::interpolate_moment(int m) {
    if (m < 0) throw std::invalid_argument("negative moment index");
    // tr(H^m) has degree m+1 in lambda: m+2 nodes pin it down.
    std::vector<Rational> xs, ys;
    for (int n = 1; n <= m + 2; ++n) {
        xs.emplace_back(n);
        Rational sum(0);
        for (int i = 1; i <= n; ++i) sum += pow_rational(Rational(n - 2 * i + 1), static_cast<unsigned>(m));
        ys.push_back(sum);
    }
    const auto p = lagrange(xs, ys);
    // Odd spectrum symmetry: tr(H^m) is an odd function of lambda (zero for odd m).
    for (int d = 0; d <= p.degree(); d += 2)
        if (!(p.coeff(d) == Rational(0))) throw std::logic_error("trace moment lost odd symmetry");
    return LambdaScalar(p);
}

TraceTable::TraceTable(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative table size");
    moments_.reserve(static_cast<size_t>(max_degree) + 1);
    for (int m = 0; m <= max_degree; ++m) moments_.push_back(interpolate_moment(m));
}

const LambdaScalar& TraceTable::moment(int m) const {
    if (m < 0 || m > max_degree()) throw std::out_of_range("moment index");
    return moments_[static_cast<size_t>(m)];
}

const LambdaScalar& trace_moment(int m) {
    static std::mutex mu;
    static std::vector<LambdaScalar> cache;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= m) cache.push_back(TraceTable::interpolate_moment(static_cast<int>(cache.size())));
    return cache[static_cast<size_t>(m)];
}

LambdaScalar trace_h(const HPoly& f) {
    LambdaScalar acc(0);
    for (int m = 0; m <= f.degree(); ++m) {
        const auto& c = f.coeff(m);
        if (!c.is_zero()) acc += c * trace_moment(m);
    }
    return acc;
}

LambdaScalar trace_h_normalized(const HPoly& f) { return trace_h(f) / lambda(); }

LambdaScalar trace(const AlgebraElement& u) { return trace_h(u.component(0)); }

LambdaScalar form(const AlgebraElement& u, const AlgebraElement& v) { return trace(mul(u, v)); }

TruncatedSeries<LambdaScalar> trace_series(int order) {
    if (order < 1) throw std::invalid_argument("trace_series: order must be >= 1");
    using S = TruncatedSeries<LambdaScalar>;
    const S num = S::exp_linear(order + 1, lambda()) - S::exp_linear(order + 1, -lambda());
    const S den = S::exp_linear(order + 1, LambdaScalar(1)) - S::exp_linear(order + 1, LambdaScalar(-1));
    return quotient_cancel_t(num, den);
}

TruncatedSeries<LambdaScalar> trace_zero_series(int order) {
    if (order < 1) throw std::invalid_argument("trace_zero_series: order must be >= 1");
    using S = TruncatedSeries<LambdaScalar>;
    S num(order + 1);
    num.set_coeff(1, LambdaScalar(2));  // 2t
    const S den = S::exp_linear(order + 1, LambdaScalar(1)) - S::exp_linear(order + 1, LambdaScalar(-1));
    return quotient_cancel_t(num, den);
}

Rational trace_h_at(const Polynomial<Rational>& f, int n) {
    if (n < 1) throw std::invalid_argument("trace_h_at: n must be >= 1");
    Rational sum(0);
    for (int i = 1; i <= n; ++i) sum += f.evaluate(Rational(n - 2 * i + 1));
    return sum;
}

}  // namespace glambda
