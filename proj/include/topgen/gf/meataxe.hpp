// Module irreducibility over a finite field, decided by kernel-vector
// spinning with the two-sided dual certificate.
//
// Given generators acting on F_q^n (columns, left action), the test finds
// a singular element B of the generated algebra (an irreducible factor of
// a random element's characteristic polynomial, evaluated at it) and
// spins kernel vectors of B under the generators.  A proper spin is a
// certified invariant subspace.  When every projective point of ker(B)
// spins to the full space and every point of ker(B^T) spins to the full
// space under the transposed generators, the module is certified
// irreducible; a proper dual spin yields the invariant subspace as the
// annihilator of the dual submodule.  Nullity-one elements are preferred
// (one point per side); larger kernels fall back to enumerating all
// projective points while that stays cheap.
#pragma once

#include <cstdint>
#include <vector>

#include "topgen/gf/matrix.hpp"
#include "topgen/rng.hpp"

namespace topgen::gf {

enum class ModuleVerdict { Irreducible, Reducible, Inconclusive };

struct IrreducibilityResult {
    ModuleVerdict verdict = ModuleVerdict::Inconclusive;
    // For Reducible: columns span a proper nonzero invariant subspace.
    Matrix invariant_subspace;
    int rounds_used = 0;
};

IrreducibilityResult irreducibility_test(const std::vector<Matrix>& generators,
                                         Rng& rng, int max_rounds = 48);

// Spin of a single vector (column matrix) under the generators: the
// smallest invariant subspace containing it, as a column basis.
Matrix spin(const Matrix& vec, const std::vector<Matrix>& generators);

} // namespace topgen::gf
