#pragma once

// Quasi-polynomials: finite sums  sum_i p_i(t) e^{s_i t}  with exact exponents
// s_i in K and polynomial multiplicities p_i. These are exactly the kernels of
// constant-coefficient differential operators, which is how they are used:
// apply_operator runs O(d/dt) termwise and min_annihilator recovers the monic
// operator of least degree killing the sum.

#include <vector>

#include "glambda/polynomial.hpp"
#include "glambda/ratfunc.hpp"
#include "glambda/series.hpp"

namespace glambda {

template <typename K>
class QuasiPolynomial {
public:
    struct Term {
        K exponent;
        Polynomial<K> coeff;
    };

    QuasiPolynomial() = default;

    static QuasiPolynomial exp_term(const K& s, Polynomial<K> p = Polynomial<K>(K(1))) {
        QuasiPolynomial q;
        q.terms_.push_back({s, std::move(p)});
        q.normalize();
        return q;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        QuasiPolynomial r;
        r.terms_ = a.terms_;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        r.normalize();
        return r;
    }
    friend QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b) { return a + (-b); }
    QuasiPolynomial operator-() const {
        QuasiPolynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend QuasiPolynomial operator*(const QuasiPolynomial& a, const K& c) {
        QuasiPolynomial r(a);
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        r.normalize();
        return r;
    }

    bool operator==(const QuasiPolynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(struct_cmp(terms_[i].exponent, o.terms_[i].exponent) == 0 && terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const QuasiPolynomial& o) const { return !(*this == o); }

    // Multiplication by e^{st}.
    QuasiPolynomial scale_exp(const K& s) const {
        QuasiPolynomial r(*this);
        for (auto& t : r.terms_) t.exponent = t.exponent + s;
        r.normalize();
        return r;
    }

    // d/dt:  (p e^{st})' = (p' + s p) e^{st}.
    QuasiPolynomial derive() const {
        QuasiPolynomial r;
        for (const auto& t : terms_) r.terms_.push_back({t.exponent, t.coeff.derivative() + t.coeff * t.exponent});
        r.normalize();
        return r;
    }

    // O(d/dt) for a constant-coefficient operator given by its symbol.
    QuasiPolynomial apply_operator(const Polynomial<K>& symbol) const {
        QuasiPolynomial acc;
        QuasiPolynomial deriv(*this);
        for (int m = 0; m <= symbol.degree(); ++m) {
            if (!(symbol.coeff(m) == K(0))) acc = acc + deriv * symbol.coeff(m);
            if (m < symbol.degree()) deriv = deriv.derive();
        }
        return acc;
    }

    K value_at_zero() const {
        K acc(0);
        for (const auto& t : terms_) acc += t.coeff.constant_term();
        return acc;
    }

    TruncatedSeries<K> to_series(int order) const {
        TruncatedSeries<K> acc(order);
        for (const auto& t : terms_) {
            const auto e = TruncatedSeries<K>::exp_linear(order, t.exponent);
            TruncatedSeries<K> p(order);
            for (int d = 0; d <= t.coeff.degree() && d <= order; ++d) p.set_coeff(d, t.coeff.coeff(d));
            acc = acc + p * e;
        }
        return acc;
    }

    // The monic generator of the annihilator ideal: prod_i (x - s_i)^{deg p_i + 1}.
    Polynomial<K> min_annihilator() const {
        Polynomial<K> acc(K(1));
        for (const auto& t : terms_) {
            const Polynomial<K> lin = Polynomial<K>::variable() - Polynomial<K>(t.exponent);
            acc = acc * lin.pow(static_cast<unsigned>(t.coeff.degree()) + 1);
        }
        return acc;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return struct_cmp(a.exponent, b.exponent) < 0; });
        std::vector<Term> merged;
        for (auto& t : terms_) {
            if (!merged.empty() && struct_cmp(merged.back().exponent, t.exponent) == 0)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        terms_.clear();
        for (auto& t : merged)
            if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
    }

    std::vector<Term> terms_;
};

// Convenience names matching how the operations are used elsewhere.
template <typename K>
QuasiPolynomial<K> qp_add(const QuasiPolynomial<K>& a, const QuasiPolynomial<K>& b) {
    return a + b;
}
template <typename K>
QuasiPolynomial<K> qp_scale_exp(const QuasiPolynomial<K>& a, const K& s) {
    return a.scale_exp(s);
}
template <typename K>
QuasiPolynomial<K> qp_derive(const QuasiPolynomial<K>& a) {
    return a.derive();
}
template <typename K>
TruncatedSeries<K> qp_to_series(const QuasiPolynomial<K>& a, int order) {
    return a.to_series(order);
}

}  // namespace glambda
