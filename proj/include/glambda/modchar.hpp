#pragma once

// Combinatorial invariants of the tensor-power modules V^nu: the highest-weight
// generating function, the characteristic polynomial in two variants (a direct
// product over cumulative multiplicities and one derived from the telescoped
// generating function; they disagree by a sign convention the match flag
// measures), and the q-character via hook lengths with both n(nu) statistics.

#include <vector>

#include "glambda/quasipoly.hpp"
#include "glambda/ratfunc.hpp"
#include "glambda/series.hpp"

namespace glambda {

struct Partition {
    explicit Partition(std::vector<int> p);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // |nu|

private:
    std::vector<int> parts_;  // weakly decreasing, all >= 1
};

// Hook lengths of the Young diagram, one per cell, sorted descending.
std::vector<int> hooks(const Partition& nu);

// sum_i nu_i e^{(lambda - 2i + 1) t}.
QuasiPolynomial<RatFunc<Rational>> gen_fun(const Partition& nu);

struct CharPolyResult {
    Polynomial<RatFunc<Rational>> stated;   // prod (H - lambda - 2a_1 - ... - 2a_i - 1)
    Polynomial<RatFunc<Rational>> derived;  // roots = exponents of gen*(1-e^{-2t}) minus the lambda-1 term
    bool match;                             // literal equality of the two
};

CharPolyResult char_poly(const Partition& nu);

enum class NuConvention { standard, printed };

// n(nu): the standard statistic sum (i-1) nu_i, or the printed variant
// sum nu_i = |nu| (both are kept so the discrepancy stays measurable).
int n_stat(const Partition& nu, NuConvention convention);

struct QCharacter {
    int a_power;                        // |nu|
    int q_shift;                        // n(nu)
    std::vector<int> hook_denominator;  // hook lengths of prod (1 - q^{h})
    TruncatedSeries<Rational> series;   // q^{n(nu)} / prod (1 - q^{h}) through order N
};

QCharacter q_character(const Partition& nu, NuConvention convention, int order);

std::vector<Partition> partitions_of(int n);

}  // namespace glambda
