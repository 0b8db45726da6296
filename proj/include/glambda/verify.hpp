#pragma once

// Named verification suites over the identity checks. Each runner returns a
// pass/fail result with a short diagnostic; the CLI `verify` subcommand and
// the acceptance harness both drive these.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "glambda/algebra.hpp"

namespace glambda {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Seeded generators used by the randomized suites (and the property tests).
Rational random_rational(std::mt19937_64& rng);
LambdaScalar random_scalar(std::mt19937_64& rng, int max_lambda_degree = 2);
HPoly random_hpoly(std::mt19937_64& rng, int max_h_degree, int max_lambda_degree = 2);
AlgebraElement random_element(std::mt19937_64& rng, int max_abs_degree = 3, int max_h_degree = 3);

CheckResult verify_routes(int k_max);
CheckResult verify_norms(int k_max, int k_max_zero);
CheckResult verify_diffeq(int k_max);
CheckResult verify_gram(int k_max, int l_max);
CheckResult verify_dual(int n_max);
CheckResult verify_casimir(int n_max);
CheckResult verify_embedding(int n_max, int pairs_per_n, std::uint64_t seed);
CheckResult verify_trace_series(int order);
CheckResult verify_window(int k_max, int window, int gauges, std::uint64_t seed);
CheckResult verify_weights(int configs, int order, std::uint64_t seed);
CheckResult verify_conjecture_finite(int n_max);
CheckResult verify_modchar(int nu_max);

struct VerifyParams {
    int k_max = 6;
    int n_max = 6;
    int l_max = 4;
    int order = 16;
    int pairs = 50;
    int gauges = 5;
    int window = 10;
    int window_k = 8;
    int configs = 10;
    int nu_max = 6;
    std::uint64_t seed = 20240901;
};

// Runs the named group ("ortho", "diffeq", "casimir", "dual", "hahn",
// "embedding", "weights", "modchar", "conjecture-finite" or "all").
std::vector<CheckResult> run_verify_group(const std::string& group, const VerifyParams& params);

}  // namespace glambda
