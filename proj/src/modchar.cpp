#include "glambda/modchar.hpp"

#include <algorithm>

#include "glambda/hpoly.hpp"

namespace glambda {

Partition::Partition(std::vector<int> p) : parts_(std::move(p)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::vector<int> hooks(const Partition& nu) {
    const auto& rows = nu.parts();
    // Column lengths of the diagram.
    std::vector<int> cols(rows.empty() ? 0 : static_cast<size_t>(rows[0]), 0);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < rows[static_cast<size_t>(r)]; ++c) ++cols[static_cast<size_t>(c)];
    std::vector<int> h;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < rows[static_cast<size_t>(r)]; ++c)
            h.push_back((rows[static_cast<size_t>(r)] - c) + (cols[static_cast<size_t>(c)] - r) - 1);
    std::sort(h.rbegin(), h.rend());
    return h;
}

QuasiPolynomial<LambdaScalar> gen_fun(const Partition& nu) {
    QuasiPolynomial<LambdaScalar> acc;
    const auto& parts = nu.parts();
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
        acc = acc + QuasiPolynomial<LambdaScalar>::exp_term(
                        alpha_node(i), Polynomial<LambdaScalar>(LambdaScalar(parts[static_cast<size_t>(i - 1)])));
    return acc;
}

CharPolyResult char_poly(const Partition& nu) {
    // Stated form: write nu = (theta_1^{a_1} ... theta_m^{a_m}) with distinct
    // parts theta and multiplicities a; the roots are lambda + 2(a_1+...+a_i) + 1.
    HPoly stated(LambdaScalar(1));
    {
        const auto& parts = nu.parts();
        int cumulative = 0;
        size_t i = 0;
        while (i < parts.size()) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            cumulative += static_cast<int>(j - i);
            stated *= hvar() - HPoly(lambda() + LambdaScalar(2 * cumulative + 1));
            i = j;
        }
    }
    // Derived form: exponents of gen*(1-e^{-2t}) with the leading lambda-1 term dropped.
    HPoly derived(LambdaScalar(1));
    {
        const auto g = gen_fun(nu);
        const auto telescoped = g - g.scale_exp(LambdaScalar(-2));
        const LambdaScalar leading = alpha_node(1);  // lambda - 1
        for (const auto& term : telescoped.terms()) {
            if (term.exponent == leading) continue;
            derived *= hvar() - HPoly(term.exponent);
        }
    }
    return {stated, derived, stated == derived};
}

int n_stat(const Partition& nu, NuConvention convention) {
    int s = 0;
    const auto& parts = nu.parts();
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
        s += (convention == NuConvention::standard ? i - 1 : 1) * parts[static_cast<size_t>(i - 1)];
    return s;
}

QCharacter q_character(const Partition& nu, NuConvention convention, int order) {
    if (order < 0) throw std::invalid_argument("q_character: order must be >= 0");
    const auto hs = hooks(nu);
    const int shift = n_stat(nu, convention);
    using S = TruncatedSeries<Rational>;
    S acc(order);
    if (shift <= order) {
        acc.set_coeff(shift, Rational(1));
        for (int h : hs) {
            // 1/(1 - q^h) = 1 + q^h + q^{2h} + ...
            S geo(order);
            for (int e = 0; e <= order; e += h) geo.set_coeff(e, Rational(1));
            acc = acc * geo;
        }
    }
    return {nu.size(), shift, hs, acc};
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate(n, n, current, out);
    return out;
}

}  // namespace glambda
