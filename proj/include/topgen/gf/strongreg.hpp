// Strongly regular elements: regular semisimple matrices whose nontrivial
// eigenvalue ratios are pairwise distinct.  Eigenvalues are taken in the
// splitting field of the characteristic polynomial, constructed on the
// fly; element representations are capped at 64 bits, and exceeding the
// cap raises.
#pragma once

#include "topgen/gf/matrix.hpp"

namespace topgen::gf {

// False when the matrix is not regular semisimple (characteristic
// polynomial not squarefree); otherwise checks that every value
// lambda_i / lambda_j with i != j occurs for exactly one ordered pair.
bool is_strongly_regular(const Matrix& x);

} // namespace topgen::gf
