#include "glambda/quasifinite.hpp"

#include "glambda/traceform.hpp"

namespace glambda {

HPoly parabolic_generator(const HPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("parabolic_generator: k must be >= 1");
    HPoly acc(LambdaScalar(1));
    for (int i = 0; i < k; ++i) acc *= shift(p, LambdaScalar(2 * i));
    return acc;
}

WeightSeries weight_from_qp(const QP& r, int order) {
    if (order < 1) throw std::invalid_argument("weight_from_qp: order must be >= 1");
    if (!r.value_at_zero().is_zero()) throw std::domain_error("nonvanishing at zero");
    using S = TruncatedSeries<LambdaScalar>;
    const S num = r.to_series(order + 1);
    const S den = S::constant(order + 1, LambdaScalar(1)) - S::exp_linear(order + 1, LambdaScalar(-2));
    return {r, quotient_cancel_t(num, den)};
}

Polynomial<LambdaScalar> t_symbol() {
    const Polynomial<LambdaScalar> lin = Polynomial<LambdaScalar>::variable() + Polynomial<LambdaScalar>(LambdaScalar(1));
    return (Polynomial<LambdaScalar>(lambda() * lambda()) - lin * lin) * LambdaScalar(Rational(1, 4));
}

bool check_annihilation(const QP& r, const HPoly& p) {
    return r.apply_operator(t_symbol() * p).is_zero();
}

QP qp_eval_lambda(const QP& r, const Rational& v) {
    QP acc;
    for (const auto& term : r.terms()) {
        std::vector<LambdaScalar> coeffs(static_cast<size_t>(term.coeff.degree()) + 1);
        for (int d = 0; d <= term.coeff.degree(); ++d) coeffs[static_cast<size_t>(d)] = LambdaScalar(eval_lambda(term.coeff.coeff(d), v));
        acc = acc + QP::exp_term(LambdaScalar(eval_lambda(term.exponent, v)), Polynomial<LambdaScalar>(std::move(coeffs)));
    }
    return acc;
}

bool check_annihilation_at(const QP& r, const HPoly& p, const Rational& lambda_value) {
    const HPoly p_at = hpoly_from_rational(hpoly_eval_lambda(p, lambda_value));
    const HPoly t_at = hpoly_from_rational(hpoly_eval_lambda(t_symbol(), lambda_value));
    return qp_eval_lambda(r, lambda_value).apply_operator(t_at * p_at).is_zero();
}

WeightSeries trace_weight(TraceWeightMode mode, int order) {
    if (mode == TraceWeightMode::nonzero_lambda) {
        const QP r = QP::exp_term(lambda() - LambdaScalar(1)) - QP::exp_term(-(lambda() + LambdaScalar(1)));
        return weight_from_qp(r, order);
    }
    // lambda = 0, normalized tr(1) = 1: R = 2 t e^{-t}.
    const QP r = QP::exp_term(LambdaScalar(-1), Polynomial<LambdaScalar>::variable() * LambdaScalar(2));
    return weight_from_qp(r, order);
}

QP hw_numerator(HwKind kind, const HwParams& params) {
    // Exponent of the i-th telescoping term, one case per weight family.
    const auto exponent = [&](int i) -> LambdaScalar {
        switch (kind) {
            case HwKind::i:
                return params.s - LambdaScalar(2 * i);
            case HwKind::ii:
                return lambda() - LambdaScalar(2 * i + 1);
            case HwKind::iii:
                return -lambda() - LambdaScalar(2 * i + 1);
            case HwKind::iv:
                return lambda() + LambdaScalar(2 * i + 1);
            case HwKind::v:
                return LambdaScalar(1) - lambda() + LambdaScalar(2 * i);
        }
        throw std::logic_error("unreachable");
    };
    const auto theta_at = [&](int i) -> LambdaScalar {
        const auto it = params.theta.find(i);
        return it == params.theta.end() ? LambdaScalar(0) : it->second;
    };
    QP acc;
    if (!params.theta.empty()) {
        const int lo = params.theta.begin()->first;
        const int hi = params.theta.rbegin()->first;
        for (int i = lo; i <= hi + 1; ++i) {
            const LambdaScalar d = theta_at(i) - theta_at(i - 1);
            if (!d.is_zero()) acc = acc + QP::exp_term(exponent(i), Polynomial<LambdaScalar>(d));
        }
    }
    if (kind == HwKind::i && !params.c.is_zero()) {
        acc = acc - (QP::exp_term(params.s) - QP::exp_term(-(lambda() + LambdaScalar(1)))) * params.c;
    }
    return acc;
}

WeightSeries hw_series(HwKind kind, const HwParams& params, int order) {
    return weight_from_qp(hw_numerator(kind, params), order);
}

}  // namespace glambda
