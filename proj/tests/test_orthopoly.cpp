#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glambda/orthopoly.hpp"

using namespace glambda;

namespace {
const LambdaScalar L = lambda();
HPoly f20_expected() { return LambdaScalar(3) * hvar() * hvar() + HPoly(LambdaScalar(1) - L * L); }
}  // namespace

TEST_CASE("adjoint route base cases") {
    CHECK(f_ad(1, 1).poly == HPoly(LambdaScalar(1)));
    CHECK(f_ad(1, 0).poly == -hvar());
    // f_{1,-1} = -2 = (-1)^1 (2!/0!) f_{1,1}
    CHECK(f_ad(1, -1).poly == HPoly(LambdaScalar(-2)));
}

TEST_CASE("difference route base cases") {
    CHECK(f_nabla(1, 0).poly == -hvar());
    CHECK(f_nabla(2, 0).poly == f20_expected());
    for (int k = 0; k <= 6; ++k) CHECK(f_nabla(k, k).poly == HPoly(LambdaScalar(1)));
}

TEST_CASE("hypergeometric route base cases") {
    for (int k = 0; k <= 6; ++k) CHECK(f_hahn(k, k).poly == HPoly(LambdaScalar(1)));
    CHECK(f_hahn(1, 0).poly == -hvar());
    CHECK(f_hahn(2, 0).poly == f20_expected());
}

TEST_CASE("route agreement and degrees up to k = 6") {
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= k; ++l) {
            const auto a = f_ad(k, l).poly;
            CHECK(a == f_nabla(k, l).poly);
            CHECK(a == f_hahn(k, l).poly);
            CHECK(a.degree() == k - l);
        }
}

TEST_CASE("X^l f_kl reproduces the ad-power element") {
    const auto Y = AlgebraElement::gen_y();
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= k; ++l) {
            const auto via_ad =
                ad_pow(Y, static_cast<unsigned>(k - l), AlgebraElement::monomial(k, HPoly(LambdaScalar(1))));
            CHECK(AlgebraElement::monomial(l, f_nabla(k, l).poly) == via_ad);
        }
}

TEST_CASE("T_1 at the off-node alpha_2 is lambda - 1") {
    CHECK(eval_alpha(t_poly(1), 2) == L - LambdaScalar(1));
}

TEST_CASE("mirror relation f_{k,-l} = (-1)^l (k+l)!/(k-l)! f_{kl}") {
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; l <= k; ++l) {
            Rational factor = factorial(static_cast<unsigned>(k + l)) / factorial(static_cast<unsigned>(k - l));
            if (l % 2 == 1) factor = -factor;
            CHECK(f_ad(k, -l).poly == f_ad(k, l).poly * LambdaScalar(factor));
        }
}

TEST_CASE("ad-route elements are Casimir eigenvectors with eigenvalue 2k(k+1)") {
    const auto Y = AlgebraElement::gen_y();
    for (int k = 1; k <= 8; ++k)
        for (int l = -k; l <= k; ++l) {
            const auto e = ad_pow(Y, static_cast<unsigned>(k - l), AlgebraElement::monomial(k, HPoly(LambdaScalar(1))));
            CHECK(casimir_apply(e) == e * LambdaScalar(2 * k * (k + 1)));
        }
}

TEST_CASE("inner products") {
    CHECK(inner(HPoly(LambdaScalar(1)), HPoly(LambdaScalar(1)), 0) == L);
    CHECK(inner(HPoly(LambdaScalar(1)), f20_expected(), 0).is_zero());
    // <f_11, f_11>_1 = tr(T_1) = lambda(lambda^2-1)/6
    CHECK(inner(HPoly(LambdaScalar(1)), HPoly(LambdaScalar(1)), 1) == L * (L * L - LambdaScalar(1)) / LambdaScalar(6));
}

TEST_CASE("closed-form norms") {
    CHECK(c_norm(0, 0, true) == L);
    CHECK(c_norm(1, 0, true) == L * (L * L - LambdaScalar(1)) / LambdaScalar(3));
    CHECK(c_norm(1, 0, true) == inner(f_nabla(1, 0).poly, f_nabla(1, 0).poly, 0));
    CHECK(c_norm(1, 0, true) == trace_h(hvar() * hvar()));
    const LambdaScalar c20 = LambdaScalar(make_rational(4, 5)) * L * (L * L - LambdaScalar(1)) * (L * L - LambdaScalar(4));
    CHECK(c_norm(2, 0, true) == c20);
    CHECK(c_norm(2, 0, true) == inner(f20_expected(), f20_expected(), 0));
    // the alternative normalization drops exactly the lambda factor
    CHECK(c_norm(2, 0, false) * L == c_norm(2, 0, true));
}

TEST_CASE("lambda = 0 norms via the limit of inner/lambda") {
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= k; ++l) {
            const HPoly f = f_nabla(k, l).poly;
            const LambdaScalar ratio = inner(f, f, l) / L;
            CHECK(eval_lambda(ratio, Rational(0)) == c_norm_zero(k, l));
        }
}

TEST_CASE("difference equation") {
    CHECK(check_diffeq(1, 0));
    CHECK(check_diffeq(2, 0));
    for (int k = 0; k <= 7; ++k)
        for (int l = 0; l <= k; ++l) CHECK(check_diffeq(k, l));
}

TEST_CASE("Gram matrices are diagonal") {
    CHECK(check_gram(4, 0));
    CHECK(check_gram(4, 2));
    // spot check of an off-diagonal entry
    CHECK(inner(f_nabla(0, 0).poly, f_nabla(2, 0).poly, 0).is_zero());
}

TEST_CASE("dual orthogonality at integer lambda") {
    SUBCASE("hand-expanded n = 2 case") {
        // k=0 term is 1/2, k=1 term is alpha_i alpha_j / 2
        const Rational lam(2);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                const Rational ai(2 - 2 * i + 1), aj(2 - 2 * j + 1);
                const Rational sum = Rational(1, 2) + ai * aj / 2;
                CHECK(sum == (i == j ? 1 : 0));
                CHECK(fkl_value(0, 0, lam, ai) == 1);
                CHECK(fkl_value(1, 0, lam, ai) == -ai);
                CHECK(c_norm_value(0, 0, lam, true) == 2);
                CHECK(c_norm_value(1, 0, lam, true) == 2);
            }
        CHECK(check_dual(2, 0));
    }
    CHECK(check_dual(5, 0));
    CHECK(check_dual(5, 2));
}

TEST_CASE("Casimir identity in C[H]/(P_n)") {
    CHECK(check_casimir(1));
    CHECK(check_casimir(2));
    CHECK(check_casimir(6));
}

TEST_CASE("numeric value route matches the symbolic polynomials") {
    const Rational lam(make_rational(17, 3));
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= k; ++l) {
            const auto sym = hpoly_eval_lambda(f_nabla(k, l).poly, lam);
            for (int i = l + 1; i <= l + 3; ++i) {
                const Rational node = lam - Rational(2 * i - 1);
                CHECK(fkl_value(k, l, lam, node) == sym.evaluate(node));
            }
        }
}

TEST_CASE("conjecture explorer") {
    SUBCASE("integer lambda recovers the finite dual identity") {
        ConjectureOptions opt;
        opt.l = 0;
        opt.pairs = {{1, 1}, {1, 2}, {2, 2}};
        opt.k_max_schedule = {1};
        const auto table = conjecture_scan(Rational(2), opt);
        REQUIRE(table.rows.size() == 3);
        for (const auto& row : table.rows) {
            CHECK(row.exact);
            CHECK(row.exact_residual == 0);
        }
    }
    SUBCASE("degenerate norm is reported") {
        ConjectureOptions opt;
        opt.l = 0;
        opt.pairs = {{1, 1}};
        opt.k_max_schedule = {3};
        CHECK_THROWS_WITH_AS(conjecture_scan(Rational(2), opt), "degenerate norm", std::domain_error);
    }
    SUBCASE("rational lambda = 1000 produces finite monotone residual reports") {
        ConjectureOptions opt;
        opt.l = 1;
        opt.pairs = {{2, 2}, {2, 3}};
        opt.casimir_indices = {1};
        opt.k_max_schedule = {2, 4, 8};
        const auto table = conjecture_scan(Rational(1000), opt);
        CHECK(table.rows.size() == 3 * 2 + 3);
        for (const auto& row : table.rows) CHECK(row.exact);
    }
    SUBCASE("float mode tracks the exact values") {
        ConjectureOptions opt;
        opt.l = 0;
        opt.pairs = {{1, 1}};
        opt.k_max_schedule = {4};
        const auto exact = conjecture_scan(Rational(50), opt);
        const auto approx = conjecture_scan_float(Rational(50), opt, 30);
        REQUIRE(exact.rows.size() == approx.rows.size());
        // compare through the decimal expansion of the exact value
        const double e = Rational(exact.rows[0].exact_residual).get_d();
        const double a = std::stod(approx.rows[0].residual);
        CHECK(std::abs(e - a) <= 1e-12 * std::max(1.0, std::abs(e)));
    }
    SUBCASE("schedule below l is rejected") {
        ConjectureOptions opt;
        opt.l = 2;
        opt.pairs = {{3, 3}};
        opt.k_max_schedule = {1};
        CHECK_THROWS_AS(conjecture_scan(Rational(9), opt), std::invalid_argument);
    }
}

TEST_CASE("invalid index ranges are rejected") {
    CHECK_THROWS_AS(f_nabla(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(f_nabla(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(f_ad(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_dual(2, 2), std::invalid_argument);
}
