#include "glambda/verify.hpp"

#include "glambda/modchar.hpp"
#include "glambda/orthopoly.hpp"
#include "glambda/quasifinite.hpp"
#include "glambda/traceform.hpp"

namespace glambda {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return make_rational(num(rng), den(rng));
}

LambdaScalar random_scalar(std::mt19937_64& rng, int max_lambda_degree) {
    std::uniform_int_distribution<int> deg(0, max_lambda_degree);
    const int d = deg(rng);
    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    return LambdaScalar(Polynomial<Rational>(std::move(coeffs)));
}

HPoly random_hpoly(std::mt19937_64& rng, int max_h_degree, int max_lambda_degree) {
    std::uniform_int_distribution<int> deg(0, max_h_degree);
    const int d = deg(rng);
    std::vector<LambdaScalar> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs) c = random_scalar(rng, max_lambda_degree);
    return HPoly(std::move(coeffs));
}

AlgebraElement random_element(std::mt19937_64& rng, int max_abs_degree, int max_h_degree) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> degree(-max_abs_degree, max_abs_degree);
    AlgebraElement u;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) u = u + AlgebraElement::monomial(degree(rng), random_hpoly(rng, max_h_degree));
    return u;
}

namespace {

CheckResult pass(std::string name, std::string detail = "ok") { return {std::move(name), true, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

}  // namespace

CheckResult verify_routes(int k_max) {
    const std::string name = "routes(ad=nabla=hahn, k<=" + std::to_string(k_max) + ")";
    for (int k = 0; k <= k_max; ++k)
        for (int l = 0; l <= k; ++l) {
            const HPoly a = f_ad(k, l).poly;
            const HPoly b = f_nabla(k, l).poly;
            const HPoly c = f_hahn(k, l).poly;
            if (!(a == b && b == c))
                return fail(name, "route mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l));
            if (!a.is_zero() && a.degree() != k - l)
                return fail(name, "degree mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    return pass(name, std::to_string((k_max + 1) * (k_max + 2) / 2) + " triples agree");
}

CheckResult verify_norms(int k_max, int k_max_zero) {
    const std::string name = "norms(closed form, k<=" + std::to_string(k_max) + ")";
    for (int k = 0; k <= k_max; ++k)
        for (int l = 0; l <= k; ++l) {
            const HPoly f = f_nabla(k, l).poly;
            if (inner(f, f, l) != c_norm(k, l, true))
                return fail(name, "norm mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    // Pinned spot value of the k=2, l=0 norm.
    {
        const LambdaScalar expected = LambdaScalar(Rational(4, 5)) * lambda() *
                                      (lambda() * lambda() - LambdaScalar(1)) *
                                      (lambda() * lambda() - LambdaScalar(4));
        const HPoly f20 = f_nabla(2, 0).poly;
        if (inner(f20, f20, 0) != expected) return fail(name, "spot value <f20,f20> mismatch");
    }
    // lambda = 0 branch as the limit of inner/lambda.
    for (int k = 0; k <= k_max_zero; ++k)
        for (int l = 0; l <= k; ++l) {
            const HPoly f = f_nabla(k, l).poly;
            const LambdaScalar ratio = inner(f, f, l) / lambda();
            if (eval_lambda(ratio, Rational(0)) != c_norm_zero(k, l))
                return fail(name, "lambda=0 norm mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    return pass(name);
}

CheckResult verify_diffeq(int k_max) {
    const std::string name = "diffeq(k<=" + std::to_string(k_max) + ")";
    for (int k = 0; k <= k_max; ++k)
        for (int l = 0; l <= k; ++l)
            if (!check_diffeq(k, l))
                return fail(name, "difference equation fails at k=" + std::to_string(k) + " l=" + std::to_string(l));
    return pass(name);
}

CheckResult verify_gram(int k_max, int l_max) {
    const std::string name =
        "gram(k<=" + std::to_string(k_max) + ", l<=" + std::to_string(l_max) + ")";
    for (int l = 0; l <= l_max; ++l)
        if (!check_gram(k_max, l)) return fail(name, "Gram matrix not diagonal at l=" + std::to_string(l));
    return pass(name);
}

CheckResult verify_dual(int n_max) {
    const std::string name = "dual(n<=" + std::to_string(n_max) + ")";
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l <= n - 1; ++l)
            if (!check_dual(n, l))
                return fail(name, "dual orthogonality fails at n=" + std::to_string(n) + " l=" + std::to_string(l));
    return pass(name);
}

CheckResult verify_casimir(int n_max) {
    const std::string name = "casimir(n<=" + std::to_string(n_max) + ")";
    // Hand-verified n=2 shape: the k=1 summand H^2/2 + 2 T_1 - 3/2 equals -H at lambda=2.
    {
        using QPoly = Polynomial<Rational>;
        const QPoly h = QPoly::variable();
        const QPoly t1 = (QPoly(Rational(4)) - (h + QPoly(Rational(1))) * (h + QPoly(Rational(1)))) * Rational(1, 4);
        const QPoly k1_term = h * h * Rational(1, 2) + t1 * Rational(2) - QPoly(Rational(3, 2));
        if (k1_term != -h) return fail(name, "hand-verified n=2 summand mismatch");
    }
    for (int n = 1; n <= n_max; ++n)
        if (!check_casimir(n)) return fail(name, "Casimir identity fails at n=" + std::to_string(n));
    return pass(name);
}

CheckResult verify_embedding(int n_max, int pairs_per_n, std::uint64_t seed) {
    const std::string name = "embedding(oracle, n in 2.." + std::to_string(n_max) + ")";
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= n_max; ++n) {
        if (!specialize(pow(AlgebraElement::gen_x(), static_cast<unsigned>(n)), n).is_zero())
            return fail(name, "X^n does not vanish at n=" + std::to_string(n));
        for (int p = 0; p < pairs_per_n; ++p) {
            const AlgebraElement u = random_element(rng);
            const AlgebraElement v = random_element(rng);
            const AlgebraElement w = mul(u, v);
            if (specialize(w, n) != specialize(u, n) * specialize(v, n))
                return fail(name, "specialize/mul mismatch at n=" + std::to_string(n));
            if (eval_lambda(trace(w), Rational(n)) != specialize(w, n).trace())
                return fail(name, "trace mismatch at n=" + std::to_string(n));
        }
    }
    return pass(name, std::to_string(pairs_per_n) + " pairs per n");
}

CheckResult verify_trace_series(int order) {
    const std::string name = "traceseries(through t^" + std::to_string(order) + ")";
    const auto series = trace_series(order);
    Rational fact(1);
    for (int m = 0; m <= order; ++m) {
        if (m > 0) fact *= m;
        if (series.coeff(m) != trace_moment(m) / LambdaScalar(fact))
            return fail(name, "coefficient of t^" + std::to_string(m) + " differs from tr(H^m)/m!");
    }
    // lambda = 0: the normalized series equals the closed-form weight and the
    // coefficientwise limit of trace_series/lambda.
    const auto zero = trace_zero_series(order);
    const auto weight = trace_weight(TraceWeightMode::zero_lambda, order).f;
    if (zero != weight) return fail(name, "lambda=0 series differs from the weight form");
    for (int m = 0; m <= order; ++m) {
        const LambdaScalar limit = series.coeff(m) / lambda();
        if (LambdaScalar(eval_lambda(limit, Rational(0))) != zero.coeff(m))
            return fail(name, "lambda->0 limit mismatch at t^" + std::to_string(m));
    }
    return pass(name);
}

CheckResult verify_window(int k_max, int window, int gauges, std::uint64_t seed) {
    const std::string name = "window(cocycle, k<=" + std::to_string(k_max) + ", N=" + std::to_string(window) + ")";
    const SScalar lam = s_lambda();
    const SScalar s = s_var();
    const auto base = glinf_window<SScalar>(lam, s, window, k_max);
    if (!base.all_match()) return fail(name, "cocycle values differ from T(s)s^k");
    std::mt19937_64 rng(seed);
    for (int g = 0; g < gauges; ++g) {
        std::vector<SScalar> diag;
        for (int i = 0; i < 2 * window + 1; ++i) {
            Rational d = random_rational(rng);
            while (d == 0) d = random_rational(rng);
            diag.emplace_back(LambdaScalar(d));
        }
        const auto gauged = glinf_window<SScalar>(lam, s, window, k_max, &diag);
        for (int k = 0; k <= k_max; ++k)
            if (!(gauged.rows[static_cast<size_t>(k)].cocycle == base.rows[static_cast<size_t>(k)].cocycle))
                return fail(name, "cocycle not gauge invariant at k=" + std::to_string(k));
    }
    return pass(name, std::to_string(gauges) + " gauges invariant");
}

namespace {

// The polynomial part of the annihilator that T(d/dt) does not already supply:
// the minimal annihilator of R with one factor each of x-(lambda-1) and
// x+(lambda+1) divided out when present.
Polynomial<LambdaScalar> parabolic_symbol(const QP& r) {
    Polynomial<LambdaScalar> ann = r.min_annihilator();
    const Polynomial<LambdaScalar> x = Polynomial<LambdaScalar>::variable();
    for (const auto& root : {lambda() - LambdaScalar(1), -(lambda() + LambdaScalar(1))}) {
        const auto factor = x - Polynomial<LambdaScalar>(root);
        auto [q, rem] = divmod(ann, factor);
        if (rem.is_zero()) ann = q;
    }
    return ann;
}

bool weight_series_consistent(const WeightSeries& ws, int order) {
    using S = TruncatedSeries<LambdaScalar>;
    const S den = S::constant(order, LambdaScalar(1)) - S::exp_linear(order, LambdaScalar(-2));
    return ws.f * den == ws.numerator.to_series(order);
}

}  // namespace

CheckResult verify_weights(int configs, int order, std::uint64_t seed) {
    const std::string name = "weights(" + std::to_string(configs) + " configs)";
    // The trace-weight solutions, both branches.
    {
        const auto tw = trace_weight(TraceWeightMode::nonzero_lambda, order);
        if (!check_annihilation(tw.numerator, HPoly(LambdaScalar(1)))) return fail(name, "trace weight not annihilated");
        if (!weight_series_consistent(tw, order)) return fail(name, "trace weight series inconsistent");
        if (tw.f != trace_series(order)) return fail(name, "trace weight differs from trace series");
        const auto tz = trace_weight(TraceWeightMode::zero_lambda, order);
        if (!check_annihilation_at(tz.numerator, HPoly(LambdaScalar(1)), Rational(0)))
            return fail(name, "lambda=0 weight not annihilated");
        if (!weight_series_consistent(tz, order)) return fail(name, "lambda=0 weight series inconsistent");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind_pick(0, 4);
    std::uniform_int_distribution<int> support(-3, 3);
    std::uniform_int_distribution<int> support_size(1, 3);
    for (int c = 0; c < configs; ++c) {
        const HwKind kind = static_cast<HwKind>(kind_pick(rng));
        HwParams params;
        const int m = support_size(rng);
        for (int t = 0; t < m; ++t) {
            Rational v = random_rational(rng);
            if (v == 0) v = 1;
            params.theta[support(rng)] = LambdaScalar(v);
        }
        if (kind == HwKind::i) {
            params.s = LambdaScalar(random_rational(rng));
            params.c = LambdaScalar(random_rational(rng));
        }
        const QP r = hw_numerator(kind, params);
        if (!r.value_at_zero().is_zero()) return fail(name, "hw numerator does not vanish at zero");
        const auto ws = hw_series(kind, params, order);
        if (!weight_series_consistent(ws, order)) return fail(name, "hw weight series inconsistent");
        const auto p = parabolic_symbol(r);
        if (!check_annihilation(r, p)) return fail(name, "hw numerator not annihilated by T*P");
        auto [q, rem] = divmod(t_symbol() * p, r.min_annihilator());
        (void)q;
        if (!rem.is_zero()) return fail(name, "minimal annihilator does not divide T*P");
    }
    return pass(name);
}

CheckResult verify_conjecture_finite(int n_max) {
    const std::string name = "conjecture-finite(lambda=n<=" + std::to_string(n_max) + ")";
    for (int n = 2; n <= n_max; ++n)
        for (int l = 0; l <= std::min(1, n - 2); ++l) {
            ConjectureOptions opt;
            opt.l = l;
            for (int i = l + 1; i <= std::min(n, l + 3); ++i)
                for (int j = l + 1; j <= std::min(n, l + 3); ++j) opt.pairs.emplace_back(i, j);
            opt.casimir_indices = {1};
            opt.k_max_schedule = {n - 1};
            const auto table = conjecture_scan(Rational(n), opt);
            // At lambda = n with k_max = n-1 both explorer sums collapse to
            // the finite identities, so every residual is exactly zero.
            for (const auto& row : table.rows)
                if (!row.exact || row.exact_residual != 0)
                    return fail(name, "nonzero residual at n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
    return pass(name);
}

CheckResult verify_modchar(int nu_max) {
    const std::string name = "modchar(|nu|<=" + std::to_string(nu_max) + ")";
    for (int n = 1; n <= nu_max; ++n)
        for (const auto& nu : partitions_of(n)) {
            const auto result = char_poly(nu);
            // Independent route: roots lambda - 2(a_1+...+a_i) - 1 over the
            // cumulative multiplicities of the distinct part values.
            HPoly expected(LambdaScalar(1));
            int distinct = 0;
            {
                const auto& parts = nu.parts();
                int cumulative = 0;
                size_t i = 0;
                while (i < parts.size()) {
                    size_t j = i;
                    while (j < parts.size() && parts[j] == parts[i]) ++j;
                    cumulative += static_cast<int>(j - i);
                    ++distinct;
                    expected *= hvar() - HPoly(lambda() - LambdaScalar(2 * cumulative + 1));
                    i = j;
                }
            }
            if (result.derived != expected) return fail(name, "derived roots mismatch");
            if (result.derived.degree() != distinct) return fail(name, "derived root count mismatch");
            // Both n(nu) conventions stay emittable and consistent.
            if (n_stat(nu, NuConvention::printed) != nu.size()) return fail(name, "printed n(nu) is not |nu|");
            const auto qc = q_character(nu, NuConvention::standard, 6);
            if (static_cast<int>(qc.hook_denominator.size()) != nu.size())
                return fail(name, "hook count differs from |nu|");
        }
    return pass(name);
}

std::vector<CheckResult> run_verify_group(const std::string& group, const VerifyParams& p) {
    std::vector<CheckResult> out;
    const bool all = group == "all";
    if (all || group == "hahn") out.push_back(verify_routes(p.k_max));
    if (all || group == "ortho") {
        out.push_back(verify_norms(p.k_max, std::min(p.k_max, 6)));
        out.push_back(verify_gram(p.k_max, std::min(p.l_max, p.k_max)));
    }
    if (all || group == "diffeq") out.push_back(verify_diffeq(p.k_max));
    if (all || group == "dual") out.push_back(verify_dual(p.n_max));
    if (all || group == "casimir") out.push_back(verify_casimir(p.n_max));
    if (all || group == "embedding") out.push_back(verify_embedding(p.n_max, p.pairs, p.seed));
    if (all || group == "weights") {
        out.push_back(verify_trace_series(p.order));
        out.push_back(verify_window(p.window_k, p.window, p.gauges, p.seed));
        out.push_back(verify_weights(p.configs, std::max(p.order, 8), p.seed));
    }
    if (all || group == "modchar") out.push_back(verify_modchar(p.nu_max));
    if (all || group == "conjecture-finite") out.push_back(verify_conjecture_finite(p.n_max));
    if (out.empty()) throw std::invalid_argument("unknown verify group: " + group);
    return out;
}

}  // namespace glambda
