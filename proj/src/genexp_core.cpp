#include "topgen/genexp.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace topgen::genexp {

BigInt special_linear_order(int n, std::uint64_t q) {
    if (n < 2 || q < 2)
        throw std::invalid_argument("group order needs n >= 2 and q >= 2");
    prime_power(q); // validates
    BigInt Q(q);
    BigInt order = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i)
        order *= Q;
    BigInt qpow = Q;
    for (int i = 2; i <= n; ++i) {
        qpow *= Q;
        order *= (qpow - 1);
    }
    return order;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2)
        throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned k = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, k};
}

namespace {

struct ClosureWalk {
    bool capped = false;
    bool early_full = false;
    std::uint64_t count = 0;
};

// Breadth-first closure under right multiplication by the generators,
// starting from the identity.  Stops when closed, when more than `cap`
// elements are stored, or (with full_order > 0) as soon as the count
// exceeds full_order / 2, which already certifies the full group.
ClosureWalk closure_walk(const std::vector<gf::Matrix>& gens, std::uint64_t cap,
                         std::uint64_t full_order) {
    if (gens.empty())
        throw std::invalid_argument("closure needs at least one generator");
    const gf::FieldPtr& F = gens.front().field();
    const int n = gens.front().rows();
    for (const auto& g : gens) {
        if (!g.square() || g.rows() != n || !g.field()->same(*F))
            throw std::invalid_argument("closure generators must be square, one size, one field");
        if (g.determinant() == 0)
            throw std::invalid_argument("closure generators must be invertible");
    }
    ClosureWalk out;
    const std::uint64_t half = full_order ? full_order / 2 : 0;

    gf::Matrix id = gf::Matrix::identity(F, n);
    if (id.packed_key()) {
        std::unordered_set<std::uint64_t> seen;
        std::deque<std::uint64_t> queue;
        seen.insert(*id.packed_key());
        queue.push_back(*id.packed_key());
        while (!queue.empty()) {
            gf::Matrix cur = gf::Matrix::from_packed_key(F, n, queue.front());
            queue.pop_front();
            for (const auto& g : gens) {
                std::uint64_t key = *(cur * g).packed_key();
                if (seen.insert(key).second) {
                    if (full_order && seen.size() > half) {
                        out.early_full = true;
                        out.count = seen.size();
                        return out;
                    }
                    if (seen.size() > cap) {
                        out.capped = true;
                        out.count = seen.size();
                        return out;
                    }
                    queue.push_back(key);
                }
            }
        }
        out.count = seen.size();
        return out;
    }

    // wide path: canonical byte keys, matrices kept in the frontier
    auto key_of = [](const gf::Matrix& m) {
        auto b = m.canonical_bytes();
        return std::string(b.begin(), b.end());
    };
    std::unordered_set<std::string> seen;
    std::deque<gf::Matrix> queue;
    seen.insert(key_of(id));
    queue.push_back(id);
    while (!queue.empty()) {
        gf::Matrix cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            gf::Matrix nxt = cur * g;
            if (seen.insert(key_of(nxt)).second) {
                if (full_order && seen.size() > half) {
                    out.early_full = true;
                    out.count = seen.size();
                    return out;
                }
                if (seen.size() > cap) {
                    out.capped = true;
                    out.count = seen.size();
                    return out;
                }
                queue.push_back(std::move(nxt));
            }
        }
    }
    out.count = seen.size();
    return out;
}

} // namespace

ClosureResult bfs_group_closure(const std::vector<gf::Matrix>& generators,
                                std::uint64_t cap) {
    ClosureWalk w = closure_walk(generators, cap, 0);
    return {w.capped, w.capped ? 0 : w.count};
}

bool generates_special_linear(const std::vector<gf::Matrix>& generators,
                              std::uint64_t group_order, std::uint64_t cap) {
    if (cap < group_order / 2 + 1)
        throw std::invalid_argument("closure cap too small to certify generation");
    ClosureWalk w = closure_walk(generators, cap, group_order);
    if (w.early_full)
        return true; // more than half the group: no proper subgroup is that big
    return w.count == group_order;
}

std::vector<gf::Matrix> elementary_generators(int n, const gf::FieldPtr& field) {
    std::vector<gf::Matrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            for (unsigned t = 0; t < field->degree(); ++t) {
                // basis element x^t of the extension
                std::uint64_t alpha = field->pow(field->generator(), t);
                if (field->degree() == 1)
                    alpha = 1;
                gf::Matrix m = gf::Matrix::identity(field, n);
                m.set(i, j, alpha);
                gens.push_back(std::move(m));
            }
        }
    return gens;
}

std::vector<gf::Matrix> conjugacy_class_orbit(const gf::Matrix& rep, std::uint64_t cap) {
    if (!rep.square())
        throw std::invalid_argument("class orbit needs a square matrix");
    const gf::FieldPtr& F = rep.field();
    const int n = rep.rows();
    std::vector<gf::Matrix> gens = elementary_generators(n, F);
    std::vector<gf::Matrix> gen_inv;
    gen_inv.reserve(gens.size());
    for (const auto& g : gens)
        gen_inv.push_back(*g.inverse());

    auto key_of = [](const gf::Matrix& m) {
        if (auto k = m.packed_key())
            return std::string(reinterpret_cast<const char*>(&*k), sizeof(*k));
        auto b = m.canonical_bytes();
        return std::string(b.begin(), b.end());
    };

    std::unordered_set<std::string> seen;
    std::vector<gf::Matrix> orbit;
    std::deque<gf::Matrix> queue;
    seen.insert(key_of(rep));
    orbit.push_back(rep);
    queue.push_back(rep);
    while (!queue.empty()) {
        gf::Matrix cur = std::move(queue.front());
        queue.pop_front();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            gf::Matrix conj = gens[gi] * cur * gen_inv[gi];
            if (seen.insert(key_of(conj)).second) {
                if (orbit.size() + 1 > cap)
                    throw std::runtime_error("conjugacy class orbit exceeded the cap");
                orbit.push_back(conj);
                queue.push_back(std::move(conj));
            }
        }
    }
    return orbit;
}

ExactProbability exact_generation_probability(const gf::Matrix& rep_c,
                                              const gf::Matrix& rep_d,
                                              std::uint64_t cap) {
    if (!rep_c.square() || !rep_d.square() || rep_c.rows() != rep_d.rows() ||
        !rep_c.field()->same(*rep_d.field()))
        throw std::invalid_argument("class representatives must share size and field");
    const int n = rep_c.rows();
    const std::uint64_t q = rep_c.field()->q();
    BigInt order_big = special_linear_order(n, q);
    if (order_big > BigInt(cap))
        throw std::runtime_error("group too large for exact enumeration (order " +
                                 order_big.str() + " exceeds cap)");
    const std::uint64_t order = order_big.convert_to<std::uint64_t>();
    if (rep_c.determinant() != 1 || rep_d.determinant() != 1)
        throw std::invalid_argument("representatives must lie in SL_n(q)");

    std::vector<gf::Matrix> class_c = conjugacy_class_orbit(rep_c, cap);
    std::vector<gf::Matrix> class_d = conjugacy_class_orbit(rep_d, cap);

    ExactProbability out;
    out.pairs = static_cast<std::uint64_t>(class_c.size()) * class_d.size();

    // Counting pairs (x, y) with <x, y> = G: the per-x count is constant on
    // the class (conjugating the pair permutes D), so one x suffices and
    // the full product is recovered exactly.
    std::uint64_t hits = 0;
    for (const auto& y : class_d)
        if (generates_special_linear({class_c.front(), y}, order, cap))
            ++hits;
    out.generating = hits * static_cast<std::uint64_t>(class_c.size());
    out.probability = Rational(static_cast<long long>(hits),
                               static_cast<long long>(class_d.size()));
    return out;
}

} // namespace topgen::genexp
