#include "glambda/orthopoly.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace glambda {

namespace {

void require_kl(int k, int l) {
    if (k < 0 || l < 0 || l > k) throw std::invalid_argument("need 0 <= l <= k");
}

// T_i over an arbitrary coefficient field, lambda given as a value.
template <typename K>
Polynomial<K> t_poly_at(int i, const K& lam) {
    const Polynomial<K> lin = Polynomial<K>::variable() + Polynomial<K>(K(2 * i - 1));
    return (Polynomial<K>(K(lam * lam)) - lin * lin) * (K(1) / K(4));
}

template <typename K>
Polynomial<K> weight_product_at(int l, const K& lam) {
    Polynomial<K> acc(K(1));
    for (int i = 1; i <= l; ++i) acc *= t_poly_at(i, lam);
    return acc;
}

// nabla^{k-l}(T_1...T_k) / (T_1...T_l) over any field; the division is exact
// (that divisibility is the content of the difference route) and stays exact
// under lambda -> value.
template <typename K>
Polynomial<K> fkl_nabla_at(int k, int l, const K& lam) {
    Polynomial<K> num = weight_product_at(k, lam);
    for (int i = 0; i < k - l; ++i) num = num - num.shifted(K(-2));
    if (l == 0) return num;
    auto [q, r] = divmod(num, weight_product_at(l, lam));
    if (!r.is_zero()) throw std::domain_error("divisibility failure");
    return q;
}

}  // namespace

OrthoPoly f_ad(int k, int l) {
    if (k < 0 || l < -k || l > k) throw std::invalid_argument("need |l| <= k");
    const auto e = ad_pow(AlgebraElement::gen_y(), static_cast<unsigned>(k - l),
                          AlgebraElement::monomial(k, HPoly(LambdaScalar(1))));
    for (const auto& [d, f] : e.components())
        if (d != l && !f.is_zero()) throw std::logic_error("ad-power not concentrated in one degree");
    return {k, l, e.component(l)};
}

OrthoPoly f_nabla(int k, int l) {
    require_kl(k, l);
    return {k, l, fkl_nabla_at(k, l, lambda())};
}

OrthoPoly f_hahn(int k, int l) {
    require_kl(k, l);
    // 3F2(l-k, l+k+1, (1-lambda-H)/2 ; l+1, l+1-lambda | 1), a terminating sum
    // of k-l+1 terms, times T_0(alpha_{l+1})...T_0(alpha_k) = prod j(lambda-j).
    const LambdaScalar half(Rational(1, 2));
    const HPoly a3 = (HPoly(LambdaScalar(1) - lambda()) - hvar()) * half;
    HPoly sum;
    for (int i = 0; i <= k - l; ++i) {
        const unsigned ui = static_cast<unsigned>(i);
        const LambdaScalar numer =
            pochhammer(LambdaScalar(l - k), ui) * pochhammer(LambdaScalar(l + k + 1), ui);
        const LambdaScalar denom = pochhammer(LambdaScalar(l + 1), ui) *
                                   pochhammer(LambdaScalar(l + 1) - lambda(), ui) *
                                   LambdaScalar(factorial(ui));
        sum += pochhammer(a3, ui) * (numer / denom);
    }
    LambdaScalar prefactor(1);
    for (int j = l + 1; j <= k; ++j) prefactor *= LambdaScalar(j) * (lambda() - LambdaScalar(j));
    return {k, l, sum * prefactor};
}

HPoly weight_product(int l) { return weight_product_at(l, lambda()); }

LambdaScalar inner(const HPoly& f, const HPoly& g, int l) {
    if (l < 0) throw std::invalid_argument("inner: l must be >= 0");
    return trace_h(f * g * weight_product(l));
}

LambdaScalar c_norm(int k, int l, bool include_lambda) {
    require_kl(k, l);
    const Rational factor = factorial(static_cast<unsigned>(k - l)) / factorial(static_cast<unsigned>(k + l)) *
                            factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k)) /
                            Rational(2 * k + 1);
    LambdaScalar acc(factor);
    if (include_lambda) acc *= lambda();
    for (int j = 1; j <= k; ++j) acc *= lambda() * lambda() - LambdaScalar(j * j);
    return acc;
}

Rational c_norm_zero(int k, int l) {
    require_kl(k, l);
    const Rational mag = factorial(static_cast<unsigned>(k - l)) / factorial(static_cast<unsigned>(k + l)) *
                         pow_rational(factorial(static_cast<unsigned>(k)), 4) / Rational(2 * k + 1);
    return (k % 2 == 0) ? mag : -mag;
}

bool check_diffeq(int k, int l) {
    require_kl(k, l);
    const HPoly f = f_nabla(k, l).poly;
    const HPoly df = difference(f, Direction::forward);
    const HPoly lhs = t_poly(0) * difference(df, Direction::backward) -
                      LambdaScalar(l + 1) * (hvar() + HPoly(LambdaScalar(l))) * df +
                      LambdaScalar((k - l) * (k + l + 1)) * f;
    return lhs.is_zero();
}

bool check_gram(int k_max, int l) {
    if (l < 0 || l > k_max) throw std::invalid_argument("need 0 <= l <= k_max");
    std::vector<HPoly> fs;
    for (int k = l; k <= k_max; ++k) fs.push_back(f_nabla(k, l).poly);
    const HPoly w = weight_product(l);
    for (int k = l; k <= k_max; ++k)
        for (int k1 = k; k1 <= k_max; ++k1) {
            const LambdaScalar entry = trace_h(fs[static_cast<size_t>(k - l)] * fs[static_cast<size_t>(k1 - l)] * w);
            const LambdaScalar expected = (k == k1) ? c_norm(k, l, true) : LambdaScalar(0);
            if (entry != expected) return false;
        }
    return true;
}

Rational fkl_value(int k, int l, const Rational& lam, const Rational& x) {
    require_kl(k, l);
    const auto t_at = [&lam](int m, const Rational& v) -> Rational {
        const Rational lin = v + Rational(2 * m - 1);
        return (lam * lam - lin * lin) / 4;
    };
    Rational num(0);
    for (int j = 0; j <= k - l; ++j) {
        Rational term = binomial(static_cast<unsigned>(k - l), static_cast<unsigned>(j));
        if (j % 2 == 1) term = -term;
        const Rational node = x - Rational(2 * j);
        for (int m = 1; m <= k; ++m) term *= t_at(m, node);
        num += term;
    }
    Rational den(1);
    for (int m = 1; m <= l; ++m) den *= t_at(m, x);
    if (den == 0) throw std::domain_error("weight vanishes at evaluation node");
    return num / den;
}

Rational c_norm_value(int k, int l, const Rational& lam, bool include_lambda) {
    require_kl(k, l);
    Rational acc = factorial(static_cast<unsigned>(k - l)) / factorial(static_cast<unsigned>(k + l)) *
                   factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k)) / Rational(2 * k + 1);
    if (include_lambda) acc *= lam;
    for (int j = 1; j <= k; ++j) acc *= lam * lam - Rational(j * j);
    if (acc == 0) throw std::domain_error("degenerate norm");
    return acc;
}

bool check_dual(int n, int l) {
    if (n < 1 || l < 0 || l + 1 > n) throw std::invalid_argument("need 0 <= l < n");
    const Rational lam(n);
    for (int i = l + 1; i <= n; ++i)
        for (int j = l + 1; j <= n; ++j) {
            const Rational ai(n - 2 * i + 1), aj(n - 2 * j + 1);
            Rational weight(1);
            for (int m = 1; m <= l; ++m) {
                const Rational lin = ai + Rational(2 * m - 1);
                weight *= (lam * lam - lin * lin) / 4;
            }
            Rational sum(0);
            for (int k = l; k <= n - 1; ++k)
                sum += fkl_value(k, l, lam, ai) * fkl_value(k, l, lam, aj) * weight / c_norm_value(k, l, lam, true);
            if (sum != Rational(i == j ? 1 : 0)) return false;
        }
    return true;
}

bool check_casimir(int n) {
    if (n < 1) throw std::invalid_argument("check_casimir: n must be >= 1");
    const Rational lam(n);
    using QPoly = Polynomial<Rational>;
    QPoly lhs;
    for (int k = 0; k <= n - 1; ++k) {
        const QPoly fk0 = fkl_nabla_at(k, 0, lam);
        QPoly term = fk0 * fk0 * (Rational(1) / c_norm_value(k, 0, lam, true));
        for (int l = 1; l <= k; ++l) {
            const QPoly fkl = fkl_nabla_at(k, l, lam);
            term += fkl * fkl * weight_product_at(l, lam) * (Rational(2) / c_norm_value(k, l, lam, true));
        }
        term -= QPoly(Rational(Rational(2 * k + 1) / lam));
        lhs += term;
    }
    // lhs must equal -H modulo P_n(H).
    QPoly pn(Rational(1));
    for (int i = 1; i <= n; ++i) pn *= QPoly::variable() + QPoly(Rational(2 * i - 1 - n));
    auto [q, r] = divmod(lhs + QPoly::variable(), pn);
    (void)q;
    return r.is_zero();
}

// --- explorer ---

namespace {

using MpFloat = boost::multiprecision::mpfr_float;

MpFloat to_float(const Rational& q) {
    MpFloat f;
    mpfr_set_q(f.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return f;
}

struct ExactOps {
    using Num = Rational;
    static Num from_rational(const Rational& q) { return q; }
    static Num abs(const Num& v) { return ::abs(v); }
    static std::string str(const Num& v) { return rational_str(v); }
};

struct FloatOps {
    using Num = MpFloat;
    unsigned digits;
    static Num from_rational(const Rational& q) { return to_float(q); }
    static Num abs(const Num& v) { return boost::multiprecision::abs(v); }
    std::string str(const Num& v) const { return v.str(digits); }
};

template <typename Ops>
ResidualTable scan_impl(const Rational& lam, const ConjectureOptions& opt, const Ops& ops) {
    using Num = typename Ops::Num;
    if (opt.l < 0) throw std::invalid_argument("conjecture_scan: l must be >= 0");
    for (const auto& [i, j] : opt.pairs)
        if (i <= opt.l || j <= opt.l) throw std::invalid_argument("conjecture_scan: indices must exceed l");
    for (int i : opt.casimir_indices)
        if (i < 1) throw std::invalid_argument("conjecture_scan: indices are 1-based");
    std::vector<int> schedule = opt.k_max_schedule;
    std::sort(schedule.begin(), schedule.end());
    schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
    if (schedule.empty()) throw std::invalid_argument("conjecture_scan: empty k_max schedule");
    if (schedule.front() < opt.l) throw std::invalid_argument("conjecture_scan: k_max below l");
    const int k_top = schedule.back();

    const std::string lam_text = rational_str(lam);
    const auto alpha = [&lam](int i) -> Rational { return lam - Rational(2 * i - 1); };
    ResidualTable table;

    // Dual sum: sum over k of f_kl(a_i) f_kl(a_j) T_1(a_i)...T_l(a_i) / c_kl.
    auto pairs = opt.pairs;
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [i, j] : pairs) {
        const Rational ai = alpha(i), aj = alpha(j);
        Rational weight(1);
        for (int m = 1; m <= opt.l; ++m) {
            const Rational lin = ai + Rational(2 * m - 1);
            weight *= (lam * lam - lin * lin) / 4;
        }
        Num sum(0);
        const Num target = ops.from_rational(Rational(i == j ? 1 : 0));
        size_t next = 0;
        for (int k = opt.l; k <= k_top; ++k) {
            const Rational term_q =
                fkl_value(k, opt.l, lam, ai) * fkl_value(k, opt.l, lam, aj) * weight / c_norm_value(k, opt.l, lam, opt.include_lambda);
            sum += ops.from_rational(term_q);
            while (next < schedule.size() && schedule[next] == k) {
                const Num res = Ops::abs(sum - target);
                ResidualRow row;
                row.lambda_text = lam_text;
                row.l = opt.l;
                row.i = i;
                row.j = j;
                row.k_max = schedule[next];
                row.partial_sum = ops.str(sum);
                row.target = ops.str(target);
                row.residual = ops.str(res);
                if constexpr (std::is_same_v<Num, Rational>) {
                    row.exact = true;
                    row.exact_residual = res;
                }
                table.rows.push_back(std::move(row));
                ++next;
            }
        }
    }

    // Casimir sum: rows carry j = 0 and target -alpha_i.
    auto cindices = opt.casimir_indices;
    std::sort(cindices.begin(), cindices.end());
    cindices.erase(std::unique(cindices.begin(), cindices.end()), cindices.end());
    for (int i : cindices) {
        const Rational ai = alpha(i);
        const Num target = ops.from_rational(-ai);
        Num sum(0);
        size_t next = 0;
        for (int k = 0; k <= k_top; ++k) {
            Rational term_q = fkl_value(k, 0, lam, ai) * fkl_value(k, 0, lam, ai) / c_norm_value(k, 0, lam, opt.include_lambda);
            Rational weight(1);
            for (int l = 1; l <= k; ++l) {
                const Rational lin = ai + Rational(2 * l - 1);
                weight *= (lam * lam - lin * lin) / 4;
                // Once T_l(a_i) = 0 (l reaches i at integer-distance nodes) every
                // remaining summand carries the zero weight factor.
                if (weight == 0) break;
                const Rational f = fkl_value(k, l, lam, ai);
                term_q += Rational(2) * f * f * weight / c_norm_value(k, l, lam, opt.include_lambda);
            }
            term_q -= Rational(2 * k + 1) / lam;
            sum += ops.from_rational(term_q);
            while (next < schedule.size() && schedule[next] == k) {
                const Num res = Ops::abs(sum - target);
                ResidualRow row;
                row.lambda_text = lam_text;
                row.i = i;
                row.k_max = schedule[next];
                row.partial_sum = ops.str(sum);
                row.target = ops.str(target);
                row.residual = ops.str(res);
                if constexpr (std::is_same_v<Num, Rational>) {
                    row.exact = true;
                    row.exact_residual = res;
                }
                table.rows.push_back(std::move(row));
                ++next;
            }
        }
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const ResidualRow& a, const ResidualRow& b) { return a.k_max < b.k_max; });
    return table;
}

}  // namespace

ResidualTable conjecture_scan(const Rational& lam, const ConjectureOptions& options) {
    return scan_impl(lam, options, ExactOps{});
}

ResidualTable conjecture_scan_float(const Rational& lam, const ConjectureOptions& options, unsigned digits) {
    if (digits == 0) throw std::invalid_argument("float precision must be positive");
    boost::multiprecision::mpfr_float::default_precision(digits);
    return scan_impl(lam, options, FloatOps{digits});
}

}  // namespace glambda
