// Symbolic model of noncentral conjugacy classes of SL_n over an
// algebraically closed field, and the topological-generation decision
// procedure for tuples of such classes.
//
// A class is recorded by its Jordan type: a multiset of (eigenvalue label,
// Jordan block partition) pairs.  Eigenvalues are opaque labels, not field
// elements; everything the decision procedure needs (largest eigenspace
// dimension, minimal polynomial degree, class dimension) is a function of
// the partitions alone.  Concrete field values are attached only when a
// matrix representative is realized (see gf/realize.hpp).
//
// Classes are understood up to scalar rescaling, so no determinant
// condition is imposed at this level.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topgen::classdata {

// Jordan block sizes for one eigenvalue, kept non-increasing.
using Partition = std::vector<int>;

struct LabeledBlocks {
    std::string label;
    Partition blocks;

    bool operator==(const LabeledBlocks&) const = default;
};

// The full Jordan type.  Entries are kept in a canonical order (block
// partitions descending lexicographically, then label) so that equality,
// serialization and tie-breaking are deterministic.
struct EigenBlockProfile {
    std::vector<LabeledBlocks> entries;

    bool operator==(const EigenBlockProfile&) const = default;
};

enum class OrderModCenter { Involution, Other };

struct ClassSpec {
    int n = 0;
    EigenBlockProfile profile;
    // Required when n = 2 and the generation criterion is asked; the Jordan
    // type alone cannot tell whether a class squares into the center.
    std::optional<OrderModCenter> order_mod_center;
    // Optional concrete eigenvalues, label -> serialized field element
    // ("c0,c1,..." little-endian in the modulus basis).  Consumed only by
    // the finite-field layer.
    std::map<std::string, std::string> concrete_values;

    bool operator==(const ClassSpec&) const = default;
};

// Validating factory: normalizes partitions to non-increasing order,
// sorts entries canonically, and rejects central or malformed profiles.
ClassSpec make_class(int n, std::vector<LabeledBlocks> entries,
                     std::optional<OrderModCenter> order_mod_center = std::nullopt,
                     std::map<std::string, std::string> concrete_values = {});

// Throws std::invalid_argument if the spec is malformed (size mismatch,
// duplicate labels, non-positive blocks, central shape).
void validate(const ClassSpec& spec);

struct ClassTuple {
    std::vector<ClassSpec> classes;

    int n() const { return classes.empty() ? 0 : classes.front().n; }
    int e() const { return static_cast<int>(classes.size()); }

    bool operator==(const ClassTuple&) const = default;
};

ClassTuple make_tuple(std::vector<ClassSpec> classes);
void validate(const ClassTuple& tuple);

enum class Outcome {
    Generating,
    EigenspaceObstruction,
    QuadraticPairObstruction,
    SL2InvolutionObstruction,
};

const char* to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::Generating;
    // Present exactly for EigenspaceObstruction: the forced common
    // eigenspace dimension sum(gamma_i) - n(e-1) >= 1.
    std::optional<int> witness;

    bool generating() const { return outcome == Outcome::Generating; }
};

// Dimension of the largest eigenspace: the maximal number of Jordan blocks
// attached to a single eigenvalue.  1 <= gamma <= n-1 for noncentral specs.
int gamma(const ClassSpec& spec);

// Degree of the minimal polynomial: sum over labels of the largest block.
int minimal_polynomial_degree(const ClassSpec& spec);
bool is_quadratic(const ClassSpec& spec);

// dim C_G(x) in SL_n: sum over labels of the squared transpose-partition
// entries, minus one.  The per-label formula is the unipotent centralizer
// dimension; distinct eigenvalues contribute block-diagonally, so the sum
// extends it to mixed and semisimple classes (checked against a commutant
// nullity oracle in the tests).
int centralizer_dimension(const ClassSpec& spec);
int class_dimension(const ClassSpec& spec);

// dim Omega = sum of class dimensions.
int dim_omega(const ClassTuple& tuple);

// The decision procedure.  For n >= 3: generating iff
//   (i)  sum(gamma_i) <= n(e-1), and
//   (ii) not (e = 2 and both classes quadratic).
// For n = 2 only e = 2 is supported and the verdict is
// SL2InvolutionObstruction iff both classes are involutions modulo the
// center, Generating otherwise.
Verdict generation_criterion(const ClassTuple& tuple);

// Minimal e such that e copies of the class admit a generating tuple
// (n >= 3): ceil(n/(n-gamma)) clamped below at 2, bumped to 3 when that
// value is 2 and the class is quadratic.  Always in [2, n].
int min_generators(const ClassSpec& spec);

// Dimension restriction SL_n -> SL_{n-1}: in each class, pick the first
// label attaining gamma, take its smallest block, delete it if it has size
// one and shrink it by one otherwise.  Requires n >= 3 and a tuple
// satisfying the generation criterion; the result satisfies
// sum(gamma_i') <= (n-1)(e-1).
ClassTuple restrict_tuple(const ClassTuple& tuple);

// max(0, sum(gamma_i) - n(e-1)): a lower bound on the dimension of the
// intersection of any choice of largest eigenspaces, attained generically.
int eigenspace_intersection_lower_bound(const ClassTuple& tuple);

// All noncentral shapes of dimension n up to label renaming: one spec per
// multiset of partitions with total size n and at most max_labels parts
// (max_labels <= 0 means no cap beyond n).  Labels are assigned "a", "b",
// ... in canonical order.  n must be at most kEnumerationCap.
inline constexpr int kEnumerationCap = 12;
std::vector<ClassSpec> enumerate_shapes(int n, int max_labels = 0);

// Canonical one-line rendering, e.g. "a:[2,1] b:[1]".
std::string to_string(const ClassSpec& spec);

} // namespace topgen::classdata
