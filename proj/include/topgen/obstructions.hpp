// Dimension / fixed-point obstruction arithmetic for tuples of SL_n
// classes, together with the catalogue of maximal positive-dimensional
// closed subgroups and the SL_3 base-case dimension audit.
#pragma once

#include <string>
#include <vector>

#include "topgen/classdata.hpp"

namespace topgen::obstructions {

enum class SubgroupFamily {
    C1,           // maximal parabolic P_m
    C2,           // GL_m wr S_t, n = mt
    C4Tensor,     // GL_{n1} (x) GL_{n2}, n = n1*n2
    C4TensorPower,// (tensor^t GL_m).S_t, n = m^t
    C6Symplectic, // Sp_n, n even
    C6Orthogonal, // SO_n, characteristic != 2
};

const char* to_string(SubgroupFamily f);

struct MaximalSubgroupEntry {
    SubgroupFamily family;
    std::string structure; // display string, e.g. "GL_2 wr S_3"
    int m = 0, t = 0, n1 = 0, n2 = 0; // as applicable to the family
    std::string condition;            // the table's side condition
    int rank = 0;                     // closed-form rank column
};

// All catalogue rows instantiated at n.  Characteristic enters only as a
// flag: p = 2 drops the orthogonal row.  p = 0 means characteristic zero.
std::vector<MaximalSubgroupEntry> maximal_subgroup_table(int n, int characteristic = 0);

// Fixed-point dimension of a class on projective (n-1)-space: gamma - 1.
int fixed_point_dim_projective(const classdata::ClassSpec& spec);

// Whether every tuple from Omega fixes a line:
// sum(gamma_j - 1) >= (e-1)(n-1).  Integer-equivalent to
// sum(gamma_j) > n(e-1), i.e. the eigenspace obstruction.
bool parabolic_obstruction(const classdata::ClassTuple& tuple);

// dim Y_M <= dim Delta + dim G/M; this is just the sum, kept as a named
// operation so audits read like the inequality they implement.
int ym_dimension_bound(int dim_delta, int dim_coset);

// SL_3 base-case audit: per maximal subgroup class (and the subfield
// case), check the strict inequality
//   dim Omega > sum of per-class caps on dim(C ∩ M) + dim G/M.
// Caps are catalogue data, not computed: 2 per class for SO_3
// (dim G/M = 5); 2 per non-quadratic and 1 per quadratic class for the
// torus normalizer (dim G/M = 6); 0 per class for subfield subgroups
// (dim G/M = 8).
struct AuditCase {
    std::string subgroup;
    int dim_coset = 0;
    int cap_sum = 0;
    int dim_omega = 0;
    bool strict_pass = false;
};

struct AuditReport {
    std::vector<AuditCase> cases;
    bool overall_pass = false;
};

AuditReport sl3_base_case_audit(const classdata::ClassTuple& tuple);

} // namespace topgen::obstructions
