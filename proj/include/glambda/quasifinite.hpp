#pragma once

// Quasi-finite highest-weight machinery: the R(t)/(1-e^{-2t}) characterization
// of highest weights, the trace weight, the five weight-series families
// (m = 0), parabolic generators, and the finite-window check of the gl(infinity)
// cocycle values c(phi(X), phi(H^k Y)) = T(s) s^k.

#include <map>
#include <optional>

#include "glambda/hpoly.hpp"
#include "glambda/matrix.hpp"
#include "glambda/quasipoly.hpp"
#include "glambda/series.hpp"

namespace glambda {

using QP = QuasiPolynomial<LambdaScalar>;

// P(H) P(H+2) ... P(H+2k-2), the generator of the k-th graded piece of the
// minimal parabolic attached to P.
HPoly parabolic_generator(const HPoly& p, int k);

struct WeightSeries {
    QP numerator;                     // R(t), vanishing at 0
    TruncatedSeries<LambdaScalar> f;  // R(t)/(1-e^{-2t}) through the truncation order
};

// Builds R/(1-e^{-2t}); throws "nonvanishing at zero" unless R(0) = 0.
WeightSeries weight_from_qp(const QP& r, int order = kDefaultSeriesOrder);

// T(x) = (lambda^2 - (x+1)^2)/4, the symbol annihilating the trace exponents.
Polynomial<LambdaScalar> t_symbol();

// True iff T(d/dt) P(d/dt) R = 0 exactly (symbolic lambda).
bool check_annihilation(const QP& r, const HPoly& p);

// Same with lambda -> value substituted throughout (needed for lambda = 0,
// where exponents collide and terms merge).
bool check_annihilation_at(const QP& r, const HPoly& p, const Rational& lambda_value);

// lambda -> value on exponents and coefficients, merging collided exponents.
QP qp_eval_lambda(const QP& r, const Rational& v);

enum class TraceWeightMode { nonzero_lambda, zero_lambda };

// The invariant-trace weight: R = e^{(lambda-1)t} - e^{-(lambda+1)t} with
// tr(1) = lambda, or R = 2t e^{-t} with tr(1) = 1 for lambda = 0.
WeightSeries trace_weight(TraceWeightMode mode, int order = kDefaultSeriesOrder);

enum class HwKind { i, ii, iii, iv, v };

struct HwParams {
    std::map<int, LambdaScalar> theta;  // finitely supported coordinates theta_i
    LambdaScalar s = LambdaScalar(0);   // kind i only
    LambdaScalar c = LambdaScalar(0);   // kind i only (central charge)
};

// Numerator quasi-polynomial of the weight series, restricted to m = 0.
QP hw_numerator(HwKind kind, const HwParams& params);

WeightSeries hw_series(HwKind kind, const HwParams& params, int order = kDefaultSeriesOrder);

// --- gl(infinity) cocycle window ---

// The two-variable field Q(lambda)(s) for fully symbolic window runs.
using SScalar = RatFunc<LambdaScalar>;

inline SScalar s_var() { return SScalar::variable(); }
inline SScalar s_lambda() { return SScalar(Polynomial<LambdaScalar>(lambda())); }

template <typename K>
struct WindowRow {
    int k;
    K cocycle;
    K expected;
    bool match;
};

template <typename K>
struct WindowReport {
    K lambda_value;
    K s_value;
    int window;
    std::vector<WindowRow<K>> rows;
    TruncatedSeries<K> correction;  // (e^{st} - e^{-(lambda+1)t})/(1-e^{-2t})
    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }
};

// The triangular-gauge realization on the index window [-N, N]:
// X v_i = u_i v_{i+1} with u_i = (lambda-s-2i-1)(lambda+s+2i+1)/4,
// Y v_i = v_{i-1}, H v_i = (s+2i) v_i. Rows/columns are indexed by i + N.
// [phi(X), phi(Y)] = phi(H) holds on interior indices (|i| < N); the two
// boundary diagonal entries are truncation artifacts.
template <typename K>
struct WindowRealization {
    int window;
    K lambda_value;
    K s_value;
    SquareMatrix<K> x;
    SquareMatrix<K> h;
    SquareMatrix<K> y;
};

template <typename K>
WindowRealization<K> build_window_realization(const K& lambda_value, const K& s_value, int window,
                                              const std::vector<K>* gauge = nullptr) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    const int n = 2 * window + 1;  // logical indices -N..N map to 0..2N
    const auto row_of = [window](int i) { return i + window; };
    if (gauge) {
        if (static_cast<int>(gauge->size()) != n) throw std::invalid_argument("gauge size mismatch");
        for (const K& d : *gauge)
            if (d == K(0)) throw std::invalid_argument("gauge entries must be nonzero");
    }
    const K quarter = K(1) / K(4);
    WindowRealization<K> w{window, lambda_value, s_value, SquareMatrix<K>(n), SquareMatrix<K>(n), SquareMatrix<K>(n)};
    for (int i = -window; i <= window; ++i) w.h.at(row_of(i), row_of(i)) = s_value + K(2 * i);
    for (int i = -window; i <= window - 1; ++i) {
        const K u = (lambda_value - s_value - K(2 * i + 1)) * (lambda_value + s_value + K(2 * i + 1)) * quarter;
        w.x.at(row_of(i + 1), row_of(i)) = u;
        w.y.at(row_of(i), row_of(i + 1)) = K(1);
    }
    if (gauge) {
        const auto& d = *gauge;
        SquareMatrix<K> conj_x(n), conj_y(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (!(w.x.at(r, c) == K(0)))
                    conj_x.at(r, c) = w.x.at(r, c) * d[static_cast<size_t>(r)] / d[static_cast<size_t>(c)];
                if (!(w.y.at(r, c) == K(0)))
                    conj_y.at(r, c) = w.y.at(r, c) * d[static_cast<size_t>(r)] / d[static_cast<size_t>(c)];
            }
        w.x = conj_x;
        w.y = conj_y;
    }
    return w;
}

// Evaluates the cocycle values c(phi(X), phi(H^k Y)) = tr([J, phi(X)] phi(H^k) phi(Y))
// for k = 0..k_max and compares with T(s)s^k. J is diagonal -kappa(i), the
// convention under which the expected values T(s)s^k come out exactly. An
// optional diagonal gauge conjugates the realization first (the cocycle must
// not move).
template <typename K>
WindowReport<K> glinf_window(const K& lambda_value, const K& s_value, int window, int k_max,
                             const std::vector<K>* gauge = nullptr) {
    if (k_max < 0) throw std::invalid_argument("glinf_window: k_max must be >= 0");
    if (window < k_max + 2) throw std::domain_error("insufficient window");
    const auto w = build_window_realization(lambda_value, s_value, window, gauge);
    const int n = 2 * window + 1;

    SquareMatrix<K> j(n);
    for (int i = -window; i <= 0; ++i) j.at(i + window, i + window) = K(-1);

    const K quarter = K(1) / K(4);
    const K t_of_s = (lambda_value * lambda_value - (s_value + K(1)) * (s_value + K(1))) * quarter;
    const SquareMatrix<K> bracket_jx = commutator(j, w.x);

    WindowReport<K> report{lambda_value, s_value, window, {}, TruncatedSeries<K>(window)};
    SquareMatrix<K> h_power = SquareMatrix<K>::identity(n);
    K expected = t_of_s;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) {
            h_power = h_power * w.h;
            expected = expected * s_value;
        }
        const K cocycle = (bracket_jx * h_power * w.y).trace();
        report.rows.push_back({k, cocycle, expected, cocycle == expected});
    }

    using S = TruncatedSeries<K>;
    const S num = S::exp_linear(window + 1, s_value) - S::exp_linear(window + 1, -(lambda_value + K(1)));
    const S den = S::constant(window + 1, K(1)) - S::exp_linear(window + 1, K(-2));
    report.correction = quotient_cancel_t(num, den);
    return report;
}

}  // namespace glambda
