#include "topgen/obstructions.hpp"

#include <stdexcept>

namespace topgen::obstructions {

using classdata::ClassSpec;
using classdata::ClassTuple;

const char* to_string(SubgroupFamily f) {
    switch (f) {
    case SubgroupFamily::C1: return "C1";
    case SubgroupFamily::C2: return "C2";
    case SubgroupFamily::C4Tensor: return "C4a";
    case SubgroupFamily::C4TensorPower: return "C4b";
    case SubgroupFamily::C6Symplectic: return "C6-symplectic";
    case SubgroupFamily::C6Orthogonal: return "C6-orthogonal";
    }
    return "?";
}

std::vector<MaximalSubgroupEntry> maximal_subgroup_table(int n, int characteristic) {
    if (n < 2)
        throw std::invalid_argument("subgroup table needs n >= 2");
    std::vector<MaximalSubgroupEntry> rows;

    for (int m = 1; m <= n - 1; ++m) {
        MaximalSubgroupEntry r;
        r.family = SubgroupFamily::C1;
        r.structure = "P_" + std::to_string(m);
        r.m = m;
        r.condition = "1 <= m <= n-1";
        r.rank = n - 2;
        rows.push_back(std::move(r));
    }
    for (int m = 1; m < n; ++m) {
        if (n % m != 0)
            continue;
        int t = n / m;
        if (t < 2)
            continue;
        MaximalSubgroupEntry r;
        r.family = SubgroupFamily::C2;
        r.structure = "GL_" + std::to_string(m) + " wr S_" + std::to_string(t);
        r.m = m;
        r.t = t;
        r.condition = "n = mt, t >= 2";
        r.rank = t * (m - 1);
        rows.push_back(std::move(r));
    }
    for (int n1 = 2; n1 * n1 < n; ++n1) {
        if (n % n1 != 0)
            continue;
        int n2 = n / n1;
        if (n1 >= n2)
            continue;
        MaximalSubgroupEntry r;
        r.family = SubgroupFamily::C4Tensor;
        r.structure = "GL_" + std::to_string(n1) + " (x) GL_" + std::to_string(n2);
        r.n1 = n1;
        r.n2 = n2;
        r.condition = "n = n1*n2, 2 <= n1 < n2";
        r.rank = n1 + n2 - 2;
        rows.push_back(std::move(r));
    }
    for (int m = 3; m * m <= n; ++m) {
        long long pw = static_cast<long long>(m) * m;
        for (int t = 2; pw <= n; ++t, pw *= m) {
            if (pw == n) {
                MaximalSubgroupEntry r;
                r.family = SubgroupFamily::C4TensorPower;
                r.structure = "(x)^" + std::to_string(t) + " GL_" + std::to_string(m) +
                              " . S_" + std::to_string(t);
                r.m = m;
                r.t = t;
                r.condition = "n = m^t, m >= 3, t >= 2";
                r.rank = t * (m - 1);
                rows.push_back(std::move(r));
            }
        }
    }
    if (n % 2 == 0) {
        MaximalSubgroupEntry r;
        r.family = SubgroupFamily::C6Symplectic;
        r.structure = "Sp_" + std::to_string(n);
        r.condition = "n even";
        r.rank = n / 2;
        rows.push_back(std::move(r));
    }
    if (characteristic != 2) {
        MaximalSubgroupEntry r;
        r.family = SubgroupFamily::C6Orthogonal;
        r.structure = "SO_" + std::to_string(n);
        r.condition = "characteristic != 2";
        r.rank = n / 2;
        rows.push_back(std::move(r));
    }
    return rows;
}

int fixed_point_dim_projective(const ClassSpec& spec) {
    return classdata::gamma(spec) - 1;
}

bool parabolic_obstruction(const ClassTuple& tuple) {
    classdata::validate(tuple);
    const int n = tuple.n();
    const int e = tuple.e();
    long long lhs = 0;
    for (const auto& c : tuple.classes)
        lhs += classdata::gamma(c) - 1;
    return lhs >= static_cast<long long>(e - 1) * (n - 1);
}

int ym_dimension_bound(int dim_delta, int dim_coset) {
    if (dim_delta < 0 || dim_coset < 0)
        throw std::invalid_argument("dimensions must be nonnegative");
    return dim_delta + dim_coset;
}

AuditReport sl3_base_case_audit(const ClassTuple& tuple) {
    classdata::validate(tuple);
    if (tuple.n() != 3)
        throw std::invalid_argument("the base-case audit is for n = 3 tuples");
    classdata::Verdict v = classdata::generation_criterion(tuple);
    if (!v.generating())
        throw std::invalid_argument(
            std::string("audit requires a tuple satisfying the generation criterion; got ") +
            classdata::to_string(v.outcome));

    const int dim = classdata::dim_omega(tuple);
    AuditReport rep;

    // irreducible primitive case: every intersected class meets SO_3 in
    // dimension at most 2
    {
        AuditCase c;
        c.subgroup = "SO3";
        c.dim_coset = 5;
        c.cap_sum = 2 * tuple.e();
        c.dim_omega = dim;
        c.strict_pass = dim > ym_dimension_bound(c.cap_sum, c.dim_coset);
        rep.cases.push_back(std::move(c));
    }
    // torus normalizer: quadratic classes meet it in dimension at most 1,
    // others in dimension at most 2
    {
        AuditCase c;
        c.subgroup = "torus-normalizer";
        c.dim_coset = 6;
        int caps = 0;
        for (const auto& cl : tuple.classes)
            caps += classdata::is_quadratic(cl) ? 1 : 2;
        c.cap_sum = caps;
        c.dim_omega = dim;
        c.strict_pass = dim > ym_dimension_bound(c.cap_sum, c.dim_coset);
        rep.cases.push_back(std::move(c));
    }
    // subfield subgroups: finite intersection with every class
    {
        AuditCase c;
        c.subgroup = "subfield";
        c.dim_coset = 8;
        c.cap_sum = 0;
        c.dim_omega = dim;
        c.strict_pass = dim > ym_dimension_bound(c.cap_sum, c.dim_coset);
        rep.cases.push_back(std::move(c));
    }

    rep.overall_pass = true;
    for (const auto& c : rep.cases)
        rep.overall_pass &= c.strict_pass;
    return rep;
}

} // namespace topgen::obstructions
