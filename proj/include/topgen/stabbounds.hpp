// Bounds on the dimension of a linear SL_n-variety admitting a nontrivial
// generic stabilizer: the quantities beta, alpha_d, alpha, the exact
// rational (9/4)n^2 threshold, and an exact-enumeration counterpart over
// all noncentral shapes.  No floating point anywhere in this module.
#pragma once

#include <optional>
#include <vector>

#include "topgen/rational.hpp"

namespace topgen::stabbounds {

// beta = ceil(n(d-2)/(d-1)), defined for the d >= 3 branch only.
int beta(int n, int d);

// Largest possible dimension of a class needing d elements to generate:
// d = 2 -> n^2 - n; d >= 3 -> n^2 - beta^2 - (n - beta).
int alpha_d_upper(int n, int d);

// alpha = max over 2 <= d <= n of d * alpha_d_upper(n, d); the check
// asserts alpha <= floor((9/4) n^2) with exact arithmetic.
int alpha_upper(int n);
bool threshold_check(int n);

struct AlphaRow {
    int d = 0;
    int alpha_d_upper = 0;
    std::optional<int> alpha_d_exact; // max class dimension among shapes needing d
};

struct AlphaTable {
    int n = 0;
    std::vector<AlphaRow> rows; // d = 2..n
    int alpha_upper = 0;
    std::optional<int> alpha_exact;
    Rational threshold; // (9/4) n^2
};

// Upper-bound table only (any n >= 3).
AlphaTable alpha_table(int n);

// Table with exact rows computed by enumerating every noncentral shape of
// dimension n (3 <= n <= 12): for each shape d = min_generators and
// dim = class_dimension; alpha_d_exact is the max dim with that d.  The
// enumeration runs over all noncentral shapes, a superset of the
// prime-order classes the bound is stated for, so the exact alpha is
// itself an upper bound for the narrower set.  Verifies
// alpha_d_exact <= alpha_d_upper for every d.
AlphaTable alpha_exact(int n);

// The linear-variety fixed-point bound: bound = d/(d-1) * dim_V + dim_C as
// an exact rational (the statement as printed), and the sufficient
// condition dim_V > d * dim_C for the fixed-point set to have strictly
// smaller dimension, which is what the threshold argument consumes.
struct VcBound {
    Rational bound;
    bool strictly_smaller = false;
};

VcBound vc_dimension_bound(int dim_v, int dim_c, int d);

} // namespace topgen::stabbounds
