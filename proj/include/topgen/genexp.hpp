// Finite-group experiments over SL_n(q): exact brute-force generation
// probabilities on tiny groups, seeded Monte Carlo estimates with Wilson
// intervals, order-r semisimple class shapes, good/bad class
// classification, and empirical verification of the eigenspace
// intersection formula.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topgen/classdata.hpp"
#include "topgen/gf/matrix.hpp"
#include "topgen/rational.hpp"
#include "topgen/rng.hpp"

namespace topgen::genexp {

using BigInt = boost::multiprecision::cpp_int;

// |SL_n(q)| = q^(n(n-1)/2) * (q^2 - 1)(q^3 - 1) ... (q^n - 1), exactly.
BigInt special_linear_order(int n, std::uint64_t q);

// Factor a prime power q = p^k; throws when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

// Breadth-first closure of the generated subgroup under multiplication.
struct ClosureResult {
    bool capped = false;
    std::uint64_t order = 0; // exact subgroup order when not capped
};
ClosureResult bfs_group_closure(const std::vector<gf::Matrix>& generators,
                                std::uint64_t cap);

// Whether the generators generate all of SL_n(q).  Certified either by
// exact closure or by exceeding |G|/2 distinct elements (a proper
// subgroup has index at least two).
bool generates_special_linear(const std::vector<gf::Matrix>& generators,
                              std::uint64_t group_order, std::uint64_t cap);

// The full conjugacy class of a representative inside SL_n(q), as the
// orbit under conjugation by elementary transvection generators.
std::vector<gf::Matrix> conjugacy_class_orbit(const gf::Matrix& rep, std::uint64_t cap);

// Elementary transvection generating set of SL_n(q).
std::vector<gf::Matrix> elementary_generators(int n, const gf::FieldPtr& field);

// Exact generation probability over the full class pair, by exhaustive
// enumeration (tiny groups only: needs |SL_n(q)| <= cap).
struct ExactProbability {
    Rational probability;
    std::uint64_t pairs = 0;
    std::uint64_t generating = 0;
};
ExactProbability exact_generation_probability(const gf::Matrix& rep_c,
                                              const gf::Matrix& rep_d,
                                              std::uint64_t cap = 200000);

// --- Monte Carlo estimation -------------------------------------------

enum class ExperimentMode { Exact, MonteCarlo };

struct ExperimentConfig {
    int n = 0;
    std::uint64_t p = 2;
    unsigned k = 1;
    // classes: explicit specs (with or without concrete values; a
    // determinant-one assignment is searched when absent)
    classdata::ClassSpec class_c;
    classdata::ClassSpec class_d;
    std::optional<std::uint64_t> r, s; // element orders, when classes came from orders
    std::uint64_t sample_count = 500;
    std::uint64_t master_seed = 1729;
    std::uint64_t closure_cap = 10000000; // max distinct elements stored
    ExperimentMode mode = ExperimentMode::MonteCarlo;

    std::uint64_t q() const {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < k; ++i)
            v *= p;
        return v;
    }
};

struct GenerationReport {
    ExperimentConfig config;
    std::uint64_t generating = 0;
    std::uint64_t reducible = 0;
    std::uint64_t proper_irreducible = 0;
    std::uint64_t inconclusive = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0; // Wilson, 95%
    double wall_ms = 0.0;            // diagnostics only; never serialized
};

// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

// Sample pairs of random conjugates of the two representatives and
// classify each pair:
//   reducible          - certified invariant subspace,
//   generating         - exact closure equals |SL_n(q)| (only when the
//                        group order fits the closure cap),
//   proper_irreducible - irreducible but closure proper or infeasible,
//   inconclusive       - the irreducibility test gave up.
// Generation is only ever certified by closure, so p_hat is a lower
// bound.  Per-sample RNG streams derive from (master_seed, index).
//
// The config-only form realizes the two symbolic classes as Jordan
// representatives over GF(q); classes whose eigenvalues live in a proper
// extension (Frobenius-orbit shapes) must be passed as explicit
// representatives instead.
GenerationReport estimate_generation_probability(const ExperimentConfig& config);
GenerationReport estimate_generation_probability(const ExperimentConfig& config,
                                                 const gf::Matrix& rep_c,
                                                 const gf::Matrix& rep_d);

// --- order-r semisimple class shapes over GF(q) ------------------------

// Multiplicity profile of an order-r semisimple class: eigenvalue one
// with multiplicity a, plus Frobenius orbits of nontrivial r-th roots of
// unity, each of degree l = ord(q mod r), with multiplicities c_i.
struct ClassShape {
    int n = 0;
    std::uint64_t r = 0;
    int orbit_degree = 0;            // l
    int fixed_multiplicity = 0;      // a
    std::vector<int> orbit_multiplicities; // c_i, non-increasing
    int gamma_over_closure = 0;      // max(a, max c_i)
    int class_dimension = 0;         // over the algebraic closure
    bool quadratic = false;          // at most two distinct eigenvalues
    bool realizable = false;         // det-one representative exists in SL_n(q)

    std::string str() const;
};

// All shapes with a + l * sum(c_i) = n, at least one orbit, the central
// shape excluded; the number of distinct orbits used never exceeds
// (r-1)/l.  Requires r prime, r not dividing q, and r | |SL_n(q)|.
std::vector<ClassShape> enumerate_prime_order_shapes(int n, std::uint64_t q, std::uint64_t r);

// Representative of a realizable shape in SL_n(q): identity block plus
// companion blocks of the minimal polynomials of order-r elements in the
// degree-l extension.
gf::Matrix shape_representative(const ClassShape& shape, const gf::FieldPtr& field);

// The symbolic class of the shape over the algebraic closure.
classdata::ClassSpec shape_to_class(const ClassShape& shape);

// --- good/bad classification -------------------------------------------

struct ShapePairVerdict {
    size_t index_r = 0, index_s = 0; // into the two shape lists
    bool generating = false;         // generation criterion on the pair
    int dim_omega = 0;
};

struct GoodBadReport {
    std::vector<ClassShape> shapes_r, shapes_s; // realizable shapes only
    std::vector<ShapePairVerdict> pairs;
    std::optional<ShapePairVerdict> best_good;  // max-dimensional good pair
    int max_bad_dim = -1;
    bool good_exists = false; // generating pair strictly dominating all bad pairs
};

// Requires odd-ish validity: (r, s) = (2, 2) is rejected.
GoodBadReport classify_good_bad(int n, std::uint64_t q, std::uint64_t r, std::uint64_t s);

// --- eigenspace intersection verification ------------------------------

struct IntersectionReport {
    int expected_lower_bound = 0; // t = sum(gamma) - n(e-1)
    std::uint64_t samples = 0;
    std::uint64_t bound_held = 0;   // measured dim >= t
    std::uint64_t equality = 0;     // measured dim == t
    int min_dim = 0, max_dim = 0;
};

// Realize each class over GF(q), sample random conjugates, intersect the
// chosen largest eigenspaces by stacked-kernel rank.  Requires t >= 1.
IntersectionReport verify_intersection_formula(const classdata::ClassTuple& tuple,
                                               std::uint64_t q, std::uint64_t samples,
                                               std::uint64_t seed);

} // namespace topgen::genexp
