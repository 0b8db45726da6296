#pragma once

// The orthogonal polynomials f_{kl} of gl(lambda) by three independent routes:
//   f_ad    -- extraction from (ad Y)^{k-l}(X^k) = X^l f_{kl}
//   f_nabla -- backward differences, nabla^{k-l}(T_1...T_k) / (T_1...T_l)
//   f_hahn  -- the terminating 3F2 closed form (continuous Hahn / Chebyshev)
// together with their norms, the discrete inner products, the identity checks
// of the finite theory, and the numerical explorer for the dual-orthogonality
// conjecture at non-integer lambda.

#include <string>
#include <utility>
#include <vector>

#include "glambda/traceform.hpp"

namespace glambda {

struct OrthoPoly {
    int k;
    int l;
    HPoly poly;
};

// f_{kl} from the adjoint route; -k <= l <= k (negative l yields f_{k,-|l|}).
OrthoPoly f_ad(int k, int l);

// f_{kl} from the difference route; 0 <= l <= k. Inexact division throws
// "divisibility failure" (it would falsify the closed form).
OrthoPoly f_nabla(int k, int l);

// f_{kl} from the hypergeometric closed form; 0 <= l <= k.
OrthoPoly f_hahn(int k, int l);

// T_1(H) ... T_l(H); the empty product (l = 0) is 1.
HPoly weight_product(int l);

// <f, g>_l = tr(f g T_1...T_l), symbolic in lambda.
LambdaScalar inner(const HPoly& f, const HPoly& g, int l);

// The closed-form norm <f_kl, f_kl>_l. With include_lambda (default) the
// value carries its leading lambda factor; without it, the variant with that
// factor dropped. Both normalizations are first-class.
LambdaScalar c_norm(int k, int l, bool include_lambda = true);

struct NormValue {
    int k;
    int l;
    LambdaScalar value;
};

inline NormValue norm_value(int k, int l, bool include_lambda = true) {
    return {k, l, c_norm(k, l, include_lambda)};
}

// The lambda = 0 branch: (-1)^k (k-l)!/(k+l)! (k!)^4 / (2k+1).
Rational c_norm_zero(int k, int l);

// Difference equation T_0 nabla delta f - (l+1)(H+l) delta f + (k-l)(k+l+1) f = 0.
bool check_diffeq(int k, int l);

// Gram matrix of {f_{kl}}_{k=l..k_max} under <.,.>_l: diagonal with entries c_norm.
bool check_gram(int k_max, int l);

// Dual orthogonality at integer lambda = n (exact rational arithmetic).
bool check_dual(int n, int l);

// The quadratic-Casimir identity in C[H]/(P_n(H)).
bool check_casimir(int n);

// --- numeric value route (used by the integer checks and the explorer) ---

// f_{kl}(x) at a numeric lambda; exact.
Rational fkl_value(int k, int l, const Rational& lam, const Rational& x);

// c_{kl} at a numeric lambda; throws "degenerate norm" when it vanishes.
Rational c_norm_value(int k, int l, const Rational& lam, bool include_lambda);

// --- dual-orthogonality conjecture explorer ---

struct ConjectureOptions {
    int l = 0;
    std::vector<std::pair<int, int>> pairs;  // (i, j) with i, j > l, for the dual sums
    std::vector<int> casimir_indices;        // i >= 1, for the Casimir sums
    std::vector<int> k_max_schedule;
    bool include_lambda = true;
};

struct ResidualRow {
    std::string lambda_text;
    int l = 0;
    int i = 0;
    int j = 0;  // 0 marks a Casimir-sum row (indexed by i alone)
    int k_max = 0;
    std::string partial_sum;
    std::string target;
    std::string residual;
    bool exact = false;
    Rational exact_residual;  // valid when exact
};

struct ResidualTable {
    std::vector<ResidualRow> rows;
};

// Exact rational partial sums of both conjectured identities against their targets.
ResidualTable conjecture_scan(const Rational& lam, const ConjectureOptions& options);

// Same scan in MPFR floats with the given decimal precision.
ResidualTable conjecture_scan_float(const Rational& lam, const ConjectureOptions& options, unsigned digits);

}  // namespace glambda
