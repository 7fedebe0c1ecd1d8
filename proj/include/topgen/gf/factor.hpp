// Complete factorization of univariate polynomials over GF(q):
// squarefree decomposition (characteristic-aware), distinct-degree
// splitting, and seeded equal-degree splitting (quadratic-residue split
// for odd q, trace-map split for q even).  Also root extraction, subfield
// embeddings, and deterministic irreducibility.
#pragma once

#include <cstdint>
#include <vector>

#include "topgen/gf/poly.hpp"
#include "topgen/rng.hpp"

namespace topgen::gf {

struct FactorPower {
    Poly factor; // monic irreducible
    int multiplicity = 1;
};

struct Factorization {
    std::uint64_t unit = 1; // leading coefficient of the input
    std::vector<FactorPower> factors;
};

// Complete factorization; deterministic for a given seed, factors sorted
// by (degree, coefficients).  The product of unit and factor powers
// reproduces the input exactly.
Factorization factor_poly(const Poly& f, std::uint64_t seed);

bool is_irreducible(const Poly& f);

// All roots in the coefficient field, with multiplicity, sorted.
std::vector<std::uint64_t> roots_in_field(const Poly& f, std::uint64_t seed);

// Embedding of a subfield into an extension with the same characteristic
// and divisible degree.  Determined by the image of the small field's
// polynomial-basis generator (the lexicographically least root of the
// small modulus in the big field, for reproducibility).
class Embedding {
public:
    Embedding(FieldPtr from, FieldPtr into);

    const FieldPtr& from() const { return from_; }
    const FieldPtr& into() const { return into_; }
    std::uint64_t map(std::uint64_t a) const;
    Poly map(const Poly& f) const;

private:
    FieldPtr from_;
    FieldPtr into_;
    std::uint64_t gen_image_ = 0;
};

} // namespace topgen::gf
