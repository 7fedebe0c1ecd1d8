#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "topgen/genexp.hpp"
#include "topgen/gf/factor.hpp"

namespace topgen::genexp {

namespace {

bool is_prime_u64(std::uint64_t r) {
    if (r < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= r; ++d)
        if (r % d == 0)
            return false;
    return true;
}

// multiplicative order of q modulo r (r prime, r not dividing q)
std::uint64_t ord_mod(std::uint64_t q, std::uint64_t r) {
    std::uint64_t v = q % r;
    if (v == 0)
        throw std::invalid_argument("order undefined: r divides q");
    std::uint64_t acc = v, l = 1;
    while (acc != 1) {
        acc = acc * v % r;
        ++l;
        if (l > r)
            throw std::logic_error("order search overran the group");
    }
    return l;
}

// Does an injective assignment of the multiplicities to distinct nonzero
// exponents mod r exist with sum(s_j * c_j) = 0 mod r?  Used only in the
// l = 1 case, where the orbit "norms" are the individual r-th roots.
bool exponent_assignment_exists(const std::vector<int>& mults, std::uint64_t r) {
    const size_t u = mults.size();
    if (u == 0)
        return false;
    if (r <= 64) {
        std::vector<std::uint64_t> pick(u, 0);
        auto rec = [&](auto&& self, size_t i) -> bool {
            if (i == u) {
                std::uint64_t sum = 0;
                for (size_t j = 0; j < u; ++j)
                    sum = (sum + pick[j] * static_cast<std::uint64_t>(mults[j])) % r;
                return sum == 0;
            }
            for (std::uint64_t s = 1; s < r; ++s) {
                bool dup = false;
                for (size_t j = 0; j < i; ++j)
                    dup |= (pick[j] == s);
                if (dup)
                    continue;
                pick[i] = s;
                if (self(self, i + 1))
                    return true;
            }
            return false;
        };
        return rec(rec, 0);
    }
    // r large: a single orbit cannot cancel (c < r), two or more always
    // can by fixing all but the last exponent and solving for it
    if (u == 1)
        return static_cast<std::uint64_t>(mults[0]) % r == 0;
    auto inv_mod = [&](std::uint64_t a) {
        std::uint64_t res = 1, e = r - 2, b = a % r;
        while (e) {
            if (e & 1)
                res = res * b % r;
            b = b * b % r;
            e >>= 1;
        }
        return res;
    };
    std::uint64_t cu_inv = inv_mod(static_cast<std::uint64_t>(mults[u - 1]) % r);
    for (std::uint64_t shift = 0; shift < 4 * u + 8; ++shift) {
        std::uint64_t sum = 0;
        for (size_t j = 0; j + 1 < u; ++j) {
            std::uint64_t s = j + 1 + (j + 2 == u ? shift : 0);
            sum = (sum + s % r * static_cast<std::uint64_t>(mults[j])) % r;
        }
        std::uint64_t last = (r - sum) % r * cu_inv % r;
        if (last == 0)
            continue;
        bool dup = false;
        for (size_t j = 0; j + 1 < u; ++j) {
            std::uint64_t s = j + 1 + (j + 2 == u ? shift : 0);
            dup |= (last == s);
        }
        if (!dup)
            return true;
    }
    return false;
}

void descending_partitions(int total, int max_parts, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxval) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_parts)
            return;
        for (int v = std::min(rem, maxval); v >= 1; --v) {
            cur.push_back(v);
            self(self, rem - v, v);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
}

} // namespace

std::string ClassShape::str() const {
    std::string s = "r" + std::to_string(r) + ":l" + std::to_string(orbit_degree) +
                    ":a" + std::to_string(fixed_multiplicity) + ":c[";
    for (size_t i = 0; i < orbit_multiplicities.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(orbit_multiplicities[i]);
    }
    s += "]";
    return s;
}

std::vector<ClassShape> enumerate_prime_order_shapes(int n, std::uint64_t q,
                                                     std::uint64_t r) {
    if (n < 2)
        throw std::invalid_argument("shape enumeration needs n >= 2");
    auto [p, k] = prime_power(q);
    if (!is_prime_u64(r))
        throw std::invalid_argument("r must be prime, got " + std::to_string(r));
    if (r == p)
        throw std::invalid_argument(
            "r divides q: unipotent shapes are handled by the symbolic layer");
    const std::uint64_t l64 = ord_mod(q, r);
    if (l64 > static_cast<std::uint64_t>(n))
        throw std::invalid_argument("no elements of order " + std::to_string(r) +
                                    " in SL_" + std::to_string(n) + "(" +
                                    std::to_string(q) + ")");
    const int l = static_cast<int>(l64);
    const std::uint64_t orbits_available = (r - 1) / l64 == 0 ? 1 : (r - 1) / l64;

    std::vector<ClassShape> shapes;
    for (int a = 0; a <= n - l; ++a) {
        if ((n - a) % l != 0)
            continue;
        const int M = (n - a) / l; // total orbit multiplicity
        std::vector<std::vector<int>> parts;
        int max_parts = static_cast<int>(
            std::min<std::uint64_t>(orbits_available, static_cast<std::uint64_t>(M)));
        descending_partitions(M, max_parts, parts);
        for (auto& cs : parts) {
            // central: a scalar matrix, only possible with a single
            // eigenvalue: a = 0, l = 1, one orbit carrying everything
            if (a == 0 && l == 1 && cs.size() == 1)
                continue;
            ClassShape sh;
            sh.n = n;
            sh.r = r;
            sh.orbit_degree = l;
            sh.fixed_multiplicity = a;
            sh.orbit_multiplicities = cs;
            int gmax = a;
            for (int c : cs)
                gmax = std::max(gmax, c);
            sh.gamma_over_closure = gmax;
            int cent = a * a;
            for (int c : cs)
                cent += l * c * c;
            sh.class_dimension = n * n - cent;
            int distinct = (a > 0 ? 1 : 0) + l * static_cast<int>(cs.size());
            sh.quadratic = distinct <= 2;
            if (l >= 2) {
                // each orbit's eigenvalue product is a power of
                // eta^((q^l-1)/(q-1)); r divides that exponent because r
                // is prime to q-1, so every norm is 1 and any choice of
                // orbits has determinant one
                std::uint64_t t = 0, qi = 1;
                for (int i = 0; i < l; ++i) {
                    t = (t + qi) % r;
                    qi = qi * (q % r) % r;
                }
                if (t != 0)
                    throw std::logic_error("orbit norm exponent not divisible by r");
                sh.realizable = true;
            } else {
                std::vector<int> mults = cs;
                // determinant = eta^(sum s_j c_j); eigenvalue one
                // contributes nothing
                sh.realizable = exponent_assignment_exists(mults, r);
            }
            shapes.push_back(std::move(sh));
        }
    }
    // canonical order: descending class dimension, then gamma, then a
    std::sort(shapes.begin(), shapes.end(), [](const ClassShape& x, const ClassShape& y) {
        if (x.class_dimension != y.class_dimension)
            return x.class_dimension > y.class_dimension;
        if (x.gamma_over_closure != y.gamma_over_closure)
            return x.gamma_over_closure < y.gamma_over_closure;
        return x.fixed_multiplicity > y.fixed_multiplicity;
    });
    return shapes;
}

classdata::ClassSpec shape_to_class(const ClassShape& shape) {
    std::vector<classdata::LabeledBlocks> entries;
    if (shape.fixed_multiplicity > 0)
        entries.push_back(
            {"one", classdata::Partition(static_cast<size_t>(shape.fixed_multiplicity), 1)});
    for (size_t j = 0; j < shape.orbit_multiplicities.size(); ++j)
        for (int i = 0; i < shape.orbit_degree; ++i)
            entries.push_back(
                {"o" + std::to_string(j + 1) + "_" + std::to_string(i + 1),
                 classdata::Partition(static_cast<size_t>(shape.orbit_multiplicities[j]), 1)});
    return classdata::make_class(shape.n, std::move(entries));
}

gf::Matrix shape_representative(const ClassShape& shape, const gf::FieldPtr& field) {
    if (!shape.realizable)
        throw std::invalid_argument("shape " + shape.str() +
                                    " has no determinant-one representative over GF(" +
                                    std::to_string(field->q()) + ")");
    const std::uint64_t q = field->q();
    const std::uint64_t r = shape.r;
    const int l = shape.orbit_degree;
    const int n = shape.n;
    const size_t u = shape.orbit_multiplicities.size();

    // Minimal polynomials of the chosen orbits over GF(q).
    std::vector<gf::Poly> minpolys;
    if (l == 1) {
        // eta of order r inside GF(q)*: first by packed value
        std::uint64_t eta = 0;
        for (std::uint64_t cand = 2; cand < q; ++cand) {
            std::uint64_t e = field->pow(cand, (q - 1) / r);
            if (e != 1) {
                eta = e;
                break;
            }
        }
        if (eta == 0)
            throw std::logic_error("no element of order r in GF(q)");
        // injective exponents with weighted sum 0 mod r, lexicographically
        // first (r is small here; realizability was already established)
        std::vector<std::uint64_t> pick(u, 0);
        auto rec = [&](auto&& self, size_t i) -> bool {
            if (i == u) {
                std::uint64_t sum = 0;
                for (size_t j = 0; j < u; ++j)
                    sum = (sum + pick[j] * static_cast<std::uint64_t>(
                                               shape.orbit_multiplicities[j])) % r;
                return sum == 0;
            }
            for (std::uint64_t s = 1; s < r; ++s) {
                bool dup = false;
                for (size_t j = 0; j < i; ++j)
                    dup |= (pick[j] == s);
                if (!dup) {
                    pick[i] = s;
                    if (self(self, i + 1))
                        return true;
                }
            }
            return false;
        };
        if (!rec(rec, 0))
            throw std::logic_error("realizable shape lost its exponent assignment");
        for (size_t j = 0; j < u; ++j)
            minpolys.push_back(gf::Poly::linear_root(field, field->pow(eta, pick[j])));
    } else {
        auto [p, k] = prime_power(q);
        gf::FieldPtr big = gf::Field::gf_internal(p, k * static_cast<unsigned>(l));
        gf::Embedding emb(field, big);
        // preimages of embedded small-field elements
        std::unordered_map<std::uint64_t, std::uint64_t> down;
        for (std::uint64_t v = 0; v < q; ++v)
            down[emb.map(v)] = v;
        // eta of multiplicative order r in the big field
        std::uint64_t big_order = big->q() - 1;
        if (big_order % r != 0)
            throw std::logic_error("degree-l extension lacks order-r elements");
        std::uint64_t eta = 0;
        for (std::uint64_t cand = 2; cand < big->q(); ++cand) {
            std::uint64_t e = big->pow(cand, big_order / r);
            if (e != 1) {
                eta = e;
                break;
            }
        }
        // orbit representatives: cosets of <q> in (Z/r)*, smallest member
        std::vector<std::uint64_t> reps;
        std::vector<bool> used(r, false);
        for (std::uint64_t s = 1; s < r && reps.size() < u; ++s) {
            if (used[s])
                continue;
            reps.push_back(s);
            std::uint64_t t = s;
            for (int i = 0; i < l; ++i) {
                used[t] = true;
                t = t * (q % r) % r;
            }
        }
        if (reps.size() < u)
            throw std::logic_error("not enough Frobenius orbits for the shape");
        for (std::uint64_t s : reps) {
            // minimal polynomial: product of (x - eta^(s q^i))
            gf::Poly f = gf::Poly::constant(big, 1);
            std::uint64_t exp = s;
            for (int i = 0; i < l; ++i) {
                f = f * gf::Poly::linear_root(big, big->pow(eta, exp));
                exp = exp * (q % r) % r;
            }
            // coefficients lie in the embedded copy of GF(q); map down
            std::vector<std::uint64_t> coeffs;
            for (std::uint64_t c : f.coeffs()) {
                auto it = down.find(c);
                if (it == down.end())
                    throw std::logic_error("orbit polynomial not defined over GF(q)");
                coeffs.push_back(it->second);
            }
            minpolys.push_back(gf::Poly(field, std::move(coeffs)));
        }
    }

    // assemble: identity block, then c_j copies of each companion block
    gf::Matrix m(field, n, n);
    int pos = 0;
    for (int i = 0; i < shape.fixed_multiplicity; ++i, ++pos)
        m.set(pos, pos, 1);
    for (size_t j = 0; j < u; ++j) {
        const gf::Poly& f = minpolys[j];
        const int deg = f.degree();
        for (int copy = 0; copy < shape.orbit_multiplicities[j]; ++copy) {
            for (int i = 0; i < deg; ++i) {
                if (i + 1 < deg)
                    m.set(pos + i + 1, pos + i, 1);
                m.set(pos + i, pos + deg - 1, field->neg(f.coeff(static_cast<size_t>(i))));
            }
            pos += deg;
        }
    }
    if (pos != n)
        throw std::logic_error("shape blocks do not fill the matrix");
    if (m.determinant() != 1)
        throw std::logic_error("shape representative has determinant != 1");
    return m;
}

GoodBadReport classify_good_bad(int n, std::uint64_t q, std::uint64_t r, std::uint64_t s) {
    if (r == 2 && s == 2)
        throw std::invalid_argument("the pair (2, 2) is excluded");
    GoodBadReport rep;
    for (const auto& sh : enumerate_prime_order_shapes(n, q, r))
        if (sh.realizable)
            rep.shapes_r.push_back(sh);
    for (const auto& sh : enumerate_prime_order_shapes(n, q, s))
        if (sh.realizable)
            rep.shapes_s.push_back(sh);
    if (rep.shapes_r.empty() || rep.shapes_s.empty())
        throw std::invalid_argument("no realizable shapes for the requested orders");

    rep.max_bad_dim = -1;
    for (size_t i = 0; i < rep.shapes_r.size(); ++i)
        for (size_t j = 0; j < rep.shapes_s.size(); ++j) {
            classdata::ClassTuple t = classdata::make_tuple(
                {shape_to_class(rep.shapes_r[i]), shape_to_class(rep.shapes_s[j])});
            ShapePairVerdict v;
            v.index_r = i;
            v.index_s = j;
            v.generating = classdata::generation_criterion(t).generating();
            v.dim_omega = classdata::dim_omega(t);
            if (!v.generating)
                rep.max_bad_dim = std::max(rep.max_bad_dim, v.dim_omega);
            rep.pairs.push_back(v);
        }
    for (const auto& v : rep.pairs) {
        if (!v.generating)
            continue;
        if (v.dim_omega > rep.max_bad_dim) {
            if (!rep.best_good || v.dim_omega > rep.best_good->dim_omega)
                rep.best_good = v;
            rep.good_exists = true;
        }
    }
    return rep;
}

} // namespace topgen::genexp
