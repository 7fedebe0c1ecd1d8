#include "topgen/gf/random.hpp"

#include <numeric>
#include <stdexcept>

#include "topgen/gf/factor.hpp"

namespace topgen::gf {

Matrix random_invertible(int n, const FieldPtr& field, Rng& rng) {
    for (;;) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, rng.below(field->q()));
        if (m.determinant() != 0)
            return m;
    }
}

Matrix random_special_linear(int n, const FieldPtr& field, Rng& rng) {
    Matrix m = random_invertible(n, field, rng);
    std::uint64_t d = m.determinant();
    if (d != 1) {
        std::uint64_t di = field->inv(d);
        for (int j = 0; j < n; ++j)
            m.set(n - 1, j, field->mul(m.at(n - 1, j), di));
    }
    return m;
}

Matrix random_conjugate(const Matrix& x, Rng& rng) {
    if (!x.square())
        throw std::invalid_argument("conjugation needs a square matrix");
    Matrix g = random_special_linear(x.rows(), x.field(), rng);
    Matrix gi = *g.inverse();
    return g * x * gi;
}

namespace {

// trial-division factorization; false when a cofactor > limit^2 remains
// unfactored
bool factorize64(std::uint64_t v, std::vector<std::pair<std::uint64_t, int>>& out,
                 std::uint64_t limit = 1u << 20) {
    for (std::uint64_t d = 2; d <= limit && d * d <= v; ++d) {
        if (v % d)
            continue;
        int e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (v > 1) {
        if (v > limit * limit)
            return false; // cofactor might be composite
        out.emplace_back(v, 1);
    }
    return true;
}

} // namespace

std::optional<std::uint64_t> element_order(const Matrix& x, std::uint64_t cap) {
    if (!x.square())
        throw std::invalid_argument("element order needs a square matrix");
    if (x.determinant() == 0)
        throw std::invalid_argument("element order needs an invertible matrix");
    if (x.is_identity())
        return 1;

    const FieldPtr& F = x.field();
    // order bound from the characteristic polynomial: semisimple part
    // divides lcm(q^deg - 1), unipotent part divides p^ceil(log_p n)
    bool have_bound = false;
    std::uint64_t bound = 1;
    {
        Factorization fac = factor_poly(char_poly(x), 0x0bdeull);
        bool overflow = false;
        auto lcm_with = [&](std::uint64_t v) {
            std::uint64_t g = std::gcd(bound, v);
            unsigned __int128 l = static_cast<unsigned __int128>(bound / g) * v;
            if (l > static_cast<unsigned __int128>(~0ull)) {
                overflow = true;
                return;
            }
            bound = static_cast<std::uint64_t>(l);
        };
        int max_mult = 1;
        for (const auto& fp : fac.factors) {
            max_mult = std::max(max_mult, fp.multiplicity);
            std::uint64_t qd = 1;
            for (int i = 0; i < fp.factor.degree() && !overflow; ++i) {
                if (qd > (~0ull) / F->q())
                    overflow = true;
                else
                    qd *= F->q();
            }
            if (overflow)
                break;
            lcm_with(qd - 1);
        }
        if (!overflow && max_mult > 1) {
            // unipotent part: p^ceil(log_p(largest block)), and block
            // sizes are at most the factor multiplicity
            std::uint64_t pp = 1;
            while (pp < static_cast<std::uint64_t>(max_mult) && !overflow) {
                if (pp > (~0ull) / F->p())
                    overflow = true;
                else
                    pp *= F->p();
            }
            if (!overflow)
                lcm_with(pp);
        }
        have_bound = !overflow;
    }

    if (have_bound) {
        std::vector<std::pair<std::uint64_t, int>> primes;
        if (factorize64(bound, primes)) {
            // refine: strip each prime while the power check still holds
            std::uint64_t t = bound;
            for (const auto& [p, e] : primes) {
                for (int i = 0; i < e; ++i) {
                    std::uint64_t cand = t / p;
                    if (t % p == 0 && x.pow(cand).is_identity())
                        t = cand;
                    else
                        break;
                }
            }
            return t;
        }
    }

    // plain iteration
    Matrix acc = x;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (acc.is_identity())
            return t;
        acc = acc * x;
    }
    return std::nullopt;
}

} // namespace topgen::gf
