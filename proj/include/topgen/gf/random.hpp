// Random sampling in SL_n(q) and element orders.
#pragma once

#include <cstdint>
#include <optional>

#include "topgen/gf/matrix.hpp"
#include "topgen/rng.hpp"

namespace topgen::gf {

// Uniform element of GL_n(q): rejection sampling of a uniform matrix until
// invertible.
Matrix random_invertible(int n, const FieldPtr& field, Rng& rng);

// Uniform element of SL_n(q): a uniform invertible matrix with its last
// row scaled by det^-1.  A -> (A', det A) is a bijection
// GL_n -> SL_n x F*, so the result is exactly uniform on SL_n(q).
Matrix random_special_linear(int n, const FieldPtr& field, Rng& rng);

// g x g^-1 with g uniform in SL_n(q).
Matrix random_conjugate(const Matrix& x, Rng& rng);

// Least t >= 1 with x^t = I.  Tries the divisor-refinement route first:
// the characteristic polynomial bounds the order by
// p^ceil(log_p max_block) * lcm(q^(deg f) - 1) over irreducible factors f,
// and the bound is refined prime by prime.  Falls back to iteration when
// the bound or its factorization leaves 64 bits; nullopt when the
// iteration cap is exceeded.
std::optional<std::uint64_t> element_order(const Matrix& x,
                                           std::uint64_t cap = 1u << 20);

} // namespace topgen::gf
