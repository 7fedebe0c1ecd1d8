#include "topgen/stabbounds.hpp"

#include <stdexcept>

#include "topgen/classdata.hpp"

namespace topgen::stabbounds {

int beta(int n, int d) {
    if (n < 3)
        throw std::invalid_argument("beta needs n >= 3");
    if (d < 3)
        throw std::domain_error("beta is defined only for d >= 3");
    if (d > n)
        throw std::invalid_argument("beta needs d <= n");
    long long num = static_cast<long long>(n) * (d - 2);
    return static_cast<int>((num + (d - 1) - 1) / (d - 1));
}

int alpha_d_upper(int n, int d) {
    if (n < 3)
        throw std::invalid_argument("alpha_d needs n >= 3");
    if (d < 2 || d > n)
        throw std::invalid_argument("alpha_d needs 2 <= d <= n");
    if (d == 2)
        return n * n - n;
    int b = beta(n, d);
    return n * n - b * b - (n - b);
}

int alpha_upper(int n) {
    if (n < 3)
        throw std::invalid_argument("alpha needs n >= 3");
    int best = 0;
    for (int d = 2; d <= n; ++d)
        best = std::max(best, d * alpha_d_upper(n, d));
    return best;
}

bool threshold_check(int n) {
    // alpha <= floor((9/4) n^2), exactly: 4*alpha <= 9 n^2
    Rational alpha(alpha_upper(n));
    Rational threshold(9LL * n * n, 4);
    return alpha <= threshold;
}

AlphaTable alpha_table(int n) {
    if (n < 3)
        throw std::invalid_argument("alpha table needs n >= 3");
    AlphaTable t;
    t.n = n;
    t.threshold = Rational(9LL * n * n, 4);
    for (int d = 2; d <= n; ++d)
        t.rows.push_back({d, alpha_d_upper(n, d), std::nullopt});
    t.alpha_upper = alpha_upper(n);
    return t;
}

AlphaTable alpha_exact(int n) {
    if (n < 3 || n > classdata::kEnumerationCap)
        throw std::runtime_error("exact alpha enumeration supports 3 <= n <= " +
                                 std::to_string(classdata::kEnumerationCap));
    AlphaTable t = alpha_table(n);
    std::vector<std::optional<int>> best(static_cast<size_t>(n) + 1);
    for (const auto& shape : classdata::enumerate_shapes(n)) {
        int d = classdata::min_generators(shape);
        int dim = classdata::class_dimension(shape);
        auto& slot = best[static_cast<size_t>(d)];
        if (!slot || *slot < dim)
            slot = dim;
    }
    int alpha = 0;
    for (auto& row : t.rows) {
        row.alpha_d_exact = best[static_cast<size_t>(row.d)];
        if (row.alpha_d_exact) {
            if (*row.alpha_d_exact > row.alpha_d_upper)
                throw std::logic_error("exact alpha_d exceeds its upper bound at d = " +
                                       std::to_string(row.d));
            alpha = std::max(alpha, row.d * *row.alpha_d_exact);
        }
    }
    t.alpha_exact = alpha;
    return t;
}

VcBound vc_dimension_bound(int dim_v, int dim_c, int d) {
    if (d < 2)
        throw std::domain_error("the fixed-point bound needs d >= 2");
    if (dim_v < 1 || dim_c < 0)
        throw std::invalid_argument("need dim_V >= 1 and dim_C >= 0");
    VcBound out;
    out.bound = Rational(d, d - 1) * Rational(dim_v) + Rational(dim_c);
    out.strictly_smaller = dim_v > static_cast<long long>(d) * dim_c;
    return out;
}

} // namespace topgen::stabbounds
