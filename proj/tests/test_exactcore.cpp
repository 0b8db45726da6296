#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glambda/hpoly.hpp"
#include "glambda/quasipoly.hpp"
#include "glambda/series.hpp"
#include "glambda/verify.hpp"

using namespace glambda;

namespace {
const LambdaScalar L = lambda();
HPoly H() { return hvar(); }
}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
    CHECK(rational_str(make_rational(-3, 2)) == "-3/2");
    CHECK(rational_str(Rational(7)) == "7");
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 3) == 20);
}

TEST_CASE("lambda scalars reduce to monic denominator with coprime parts") {
    // (lambda^2-1)/(2 lambda+2) -> (lambda-1)/2
    const LambdaScalar a(Polynomial<Rational>(std::vector<Rational>{-1, 0, 1}),
                         Polynomial<Rational>(std::vector<Rational>{2, 2}));
    CHECK(a.den().is_one());
    CHECK(a.num() == Polynomial<Rational>(std::vector<Rational>{make_rational(-1, 2), make_rational(1, 2)}));
    CHECK(a == (L - LambdaScalar(1)) * LambdaScalar(make_rational(1, 2)));

    const LambdaScalar b = LambdaScalar(1) / (L + LambdaScalar(1));
    CHECK(b.den().leading() == 1);
    CHECK((a * b) == (L - LambdaScalar(1)) / (LambdaScalar(2) * (L + LambdaScalar(1))));

    // zero is 0/1
    const LambdaScalar z = a - a;
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
}

TEST_CASE("shift expands binomially and is degree preserving") {
    const HPoly h2 = H() * H();
    CHECK(shift(h2, LambdaScalar(-2)) == h2 - LambdaScalar(4) * H() + HPoly(LambdaScalar(4)));
    const HPoly f = H() * H() * H() - LambdaScalar(2) * H() + HPoly(L);
    CHECK(shift(f, LambdaScalar(0)) == f);
    CHECK(shift(f, L).degree() == f.degree());
    // shift(T_i, 2) = T_{i+1}
    for (int i = 0; i <= 5; ++i) CHECK(shift(t_poly(i), LambdaScalar(2)) == t_poly(i + 1));
}

TEST_CASE("differences") {
    CHECK(difference(H(), Direction::forward) == HPoly(LambdaScalar(2)));
    CHECK(difference(t_poly(1), Direction::backward) == -H());
    CHECK(difference(HPoly(L * L), Direction::forward).is_zero());
    // degree drops by exactly one on nonconstant input
    const HPoly f = H() * H() * H() + H();
    CHECK(difference(f, Direction::forward).degree() == 2);
}

TEST_CASE("t_poly") {
    // T_1 = lambda^2/4 - (H+1)^2/4
    const LambdaScalar q(make_rational(1, 4));
    const HPoly hp1 = H() + HPoly(LambdaScalar(1));
    CHECK(t_poly(1) == q * (HPoly(L * L) - hp1 * hp1));
    // T_0 = (lambda^2 - (H-1)^2)/4
    const HPoly hm1 = H() - HPoly(LambdaScalar(1));
    CHECK(t_poly(0) == q * (HPoly(L * L) - hm1 * hm1));
    CHECK(t_poly(1).degree() == 2);
    // T_0 at alpha_1 = lambda - 1
    CHECK(t_poly(0).evaluate(alpha_node(1)) == L - LambdaScalar(1));
}

TEST_CASE("eval_alpha on the node grid") {
    CHECK(eval_alpha(H(), 1) == L - LambdaScalar(1));
    CHECK(eval_alpha(HPoly(LambdaScalar(1)), 7) == LambdaScalar(1));
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            const bool zero = eval_alpha(t_poly(j), i).is_zero();
            CHECK(zero == (i == j));
        }
    CHECK_THROWS_AS(eval_alpha(H(), 0), std::invalid_argument);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(LambdaScalar(5), 0) == LambdaScalar(1));
    CHECK(pochhammer(Rational(-1), 2) == 0);
    // (l-k)_i = 0 once i > k-l: terminating-series guard
    CHECK(pochhammer(Rational(-2), 3) == 0);
    CHECK(pochhammer(Rational(-2), 2) == 2);
    CHECK(pochhammer(H(), 3) == H() * (H() + HPoly(LambdaScalar(1))) * (H() + HPoly(LambdaScalar(2))));
}

TEST_CASE("series arithmetic") {
    using S = TruncatedSeries<LambdaScalar>;
    const int N = 8;
    SUBCASE("exp(lt) exp(-lt) = 1") {
        const S prod = S::exp_linear(N, L) * S::exp_linear(N, -L);
        CHECK(prod == S::constant(N, LambdaScalar(1)));
    }
    SUBCASE("sinh ratio opens with lambda + lambda(lambda^2-1) t^2/6") {
        const S num = S::exp_linear(N, L) - S::exp_linear(N, -L);
        const S den = S::exp_linear(N, LambdaScalar(1)) - S::exp_linear(N, LambdaScalar(-1));
        const S ratio = quotient_cancel_t(num, den);
        CHECK(ratio.coeff(0) == L);
        CHECK(ratio.coeff(1).is_zero());
        CHECK(ratio.coeff(2) == L * (L * L - LambdaScalar(1)) / LambdaScalar(6));
        CHECK(ratio.coeff(3).is_zero());
    }
    SUBCASE("reciprocal of a non-unit throws") {
        const S bad = S::constant(N, LambdaScalar(1)) - S::exp_linear(N, LambdaScalar(-2));
        CHECK_THROWS_WITH_AS(bad.reciprocal(), "non-unit series", std::domain_error);
    }
    SUBCASE("order mismatch throws") {
        CHECK_THROWS_AS(S::constant(4, LambdaScalar(1)) * S::constant(5, LambdaScalar(1)), std::invalid_argument);
    }
    SUBCASE("truncate and derivative shorten the order") {
        const S e = S::exp_linear(N, L);
        CHECK(e.truncate(3) == S::exp_linear(3, L));
        CHECK(e.derivative() == S::exp_linear(N - 1, L) * L);
    }
    SUBCASE("reciprocal inverts") {
        const S e = S::exp_linear(N, L + LambdaScalar(3));
        CHECK(e * e.reciprocal() == S::constant(N, LambdaScalar(1)));
    }
}

TEST_CASE("quasi-polynomial calculus") {
    using Q = QuasiPolynomial<LambdaScalar>;
    const LambdaScalar lm1 = L - LambdaScalar(1);
    SUBCASE("derivative of a pure exponential") {
        const Q r = Q::exp_term(lm1);
        CHECK(qp_derive(r) == Q::exp_term(lm1, Polynomial<LambdaScalar>(lm1)));
    }
    SUBCASE("cancellation empties the term list") {
        const Q r = Q::exp_term(L) - Q::exp_term(L);
        CHECK(r.is_zero());
        CHECK(r.terms().empty());
    }
    SUBCASE("t e^{-t} expands to t - t^2 + t^3/2") {
        const Q r = Q::exp_term(LambdaScalar(-1), Polynomial<LambdaScalar>::variable());
        const auto s = qp_to_series(r, 3);
        CHECK(s.coeff(0).is_zero());
        CHECK(s.coeff(1) == LambdaScalar(1));
        CHECK(s.coeff(2) == LambdaScalar(-1));
        CHECK(s.coeff(3) == LambdaScalar(make_rational(1, 2)));
    }
    SUBCASE("scale_exp shifts every exponent") {
        const Q r = Q::exp_term(lm1) + Q::exp_term(LambdaScalar(2), Polynomial<LambdaScalar>::variable());
        const Q shifted = qp_scale_exp(r, -L);
        CHECK(shifted == Q::exp_term(-LambdaScalar(1)) +
                             Q::exp_term(LambdaScalar(2) - L, Polynomial<LambdaScalar>::variable()));
    }
    SUBCASE("minimal annihilator kills the quasi-polynomial") {
        const Q r = Q::exp_term(lm1, Polynomial<LambdaScalar>::variable()) + Q::exp_term(LambdaScalar(2));
        CHECK(r.apply_operator(r.min_annihilator()).is_zero());
        CHECK(r.min_annihilator().degree() == 3);
    }
}

TEST_CASE("property: ring axioms on random H-polynomials") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 40; ++iter) {
        const HPoly a = random_hpoly(rng, 4), b = random_hpoly(rng, 4), c = random_hpoly(rng, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("property: backward difference is the shifted forward difference") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        const HPoly f = random_hpoly(rng, 5);
        CHECK(difference(shift(f, LambdaScalar(-2)), Direction::forward) == difference(f, Direction::backward));
    }
}

TEST_CASE("property: series of the derivative is the derivative of the series") {
    std::mt19937_64 rng(4242);
    using Q = QuasiPolynomial<LambdaScalar>;
    for (int iter = 0; iter < 20; ++iter) {
        Q r;
        for (int t = 0; t < 3; ++t) {
            std::vector<LambdaScalar> cs{random_scalar(rng), random_scalar(rng)};
            r = r + Q::exp_term(random_scalar(rng, 1), Polynomial<LambdaScalar>(std::move(cs)));
        }
        const int N = 7;
        CHECK(qp_to_series(qp_derive(r), N - 1) == qp_to_series(r, N).derivative());
    }
}
