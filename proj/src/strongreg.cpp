#include "topgen/gf/strongreg.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "topgen/gf/factor.hpp"

namespace topgen::gf {

bool is_strongly_regular(const Matrix& x) {
    if (!x.square())
        throw std::invalid_argument("strong regularity needs a square matrix");
    const FieldPtr& F = x.field();
    Poly chi = char_poly(x);
    if (gcd(chi, chi.derivative()).degree() != 0)
        return false; // repeated eigenvalue: not regular semisimple

    Factorization fac = factor_poly(chi, 0x57a0ull);
    unsigned lcm_deg = 1;
    for (const auto& fp : fac.factors)
        lcm_deg = static_cast<unsigned>(
            std::lcm<std::uint64_t>(lcm_deg, static_cast<unsigned>(fp.factor.degree())));

    std::vector<std::uint64_t> eigenvalues;
    FieldPtr big = F;
    if (lcm_deg == 1) {
        for (const auto& fp : fac.factors)
            eigenvalues.push_back(F->neg(fp.factor.coeff(0)));
    } else {
        big = Field::gf_internal(F->p(), F->degree() * lcm_deg);
        Embedding emb(F, big);
        for (const auto& fp : fac.factors) {
            Poly lifted = emb.map(fp.factor);
            auto rs = roots_in_field(lifted, 0x57a1ull);
            if (static_cast<int>(rs.size()) != fp.factor.degree())
                throw std::logic_error("factor failed to split in its splitting field");
            eigenvalues.insert(eigenvalues.end(), rs.begin(), rs.end());
        }
    }

    std::unordered_set<std::uint64_t> ratios;
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        for (size_t j = 0; j < eigenvalues.size(); ++j) {
            if (i == j)
                continue;
            std::uint64_t r = big->mul(eigenvalues[i], big->inv(eigenvalues[j]));
            if (!ratios.insert(r).second)
                return false; // the same ratio from two ordered pairs
        }
    return true;
}

} // namespace topgen::gf
