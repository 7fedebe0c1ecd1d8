#include "topgen/gf/meataxe.hpp"

#include <stdexcept>

#include "topgen/gf/factor.hpp"

namespace topgen::gf {

namespace {

using Vec = std::vector<std::uint64_t>;

// Incremental echelonized basis of column vectors.
struct SpanBasis {
    const Field& F;
    int n;
    std::vector<Vec> rows;    // reduced vectors, each with a unique pivot
    std::vector<int> pivots;  // pivot index per stored vector

    explicit SpanBasis(const Field& f, int dim) : F(f), n(dim) {}

    // Reduce v against the basis; if independent, add and return true.
    bool add(Vec v) {
        for (size_t b = 0; b < rows.size(); ++b) {
            std::uint64_t c = v[static_cast<size_t>(pivots[b])];
            if (!c)
                continue;
            for (int i = 0; i < n; ++i)
                v[static_cast<size_t>(i)] =
                    F.sub(v[static_cast<size_t>(i)], F.mul(c, rows[b][static_cast<size_t>(i)]));
        }
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<size_t>(i)]) {
                piv = i;
                break;
            }
        if (piv < 0)
            return false;
        std::uint64_t pinv = F.inv(v[static_cast<size_t>(piv)]);
        for (int i = 0; i < n; ++i)
            v[static_cast<size_t>(i)] = F.mul(v[static_cast<size_t>(i)], pinv);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }

    int dim() const { return static_cast<int>(rows.size()); }
};

Vec mat_vec(const Matrix& g, const Vec& v) {
    const Field& F = *g.field();
    Vec out(static_cast<size_t>(g.rows()), 0);
    for (int i = 0; i < g.rows(); ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < g.cols(); ++j) {
            std::uint64_t a = g.at(i, j);
            if (a)
                acc = F.add(acc, F.mul(a, v[static_cast<size_t>(j)]));
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

Matrix basis_to_matrix(const FieldPtr& field, const SpanBasis& b) {
    Matrix out(field, b.n, b.dim());
    for (int c = 0; c < b.dim(); ++c)
        for (int i = 0; i < b.n; ++i)
            out.set(i, c, b.rows[static_cast<size_t>(c)][static_cast<size_t>(i)]);
    return out;
}

SpanBasis spin_vec(const Vec& v, const std::vector<Matrix>& gens, const Field& F, int n) {
    SpanBasis basis(F, n);
    if (!basis.add(v))
        return basis; // zero vector
    size_t next = 0;
    while (next < basis.rows.size() && basis.dim() < n) {
        Vec cur = basis.rows[next++];
        for (const Matrix& g : gens) {
            basis.add(mat_vec(g, cur));
            if (basis.dim() == n)
                break;
        }
    }
    return basis;
}

// Enumerate the projective points of the column span of `kernel`
// (first nonzero coefficient normalized to 1), calling fn on each point.
template <typename Fn>
void for_each_projective_point(const Matrix& kernel, Fn&& fn) {
    const Field& F = *kernel.field();
    const int d = kernel.cols();
    const int n = kernel.rows();
    std::vector<std::uint64_t> coeff(static_cast<size_t>(d), 0);
    // first nonzero coordinate fixed to 1, later ones arbitrary
    for (int lead = 0; lead < d; ++lead) {
        std::vector<int> freeidx;
        for (int i = lead + 1; i < d; ++i)
            freeidx.push_back(i);
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[static_cast<size_t>(lead)] = 1;
        for (;;) {
            Vec v(static_cast<size_t>(n), 0);
            for (int c = 0; c < d; ++c) {
                std::uint64_t s = coeff[static_cast<size_t>(c)];
                if (!s)
                    continue;
                for (int i = 0; i < n; ++i)
                    v[static_cast<size_t>(i)] =
                        F.add(v[static_cast<size_t>(i)], F.mul(s, kernel.at(i, c)));
            }
            if (!fn(v))
                return;
            // odometer over the free coordinates
            size_t pos = 0;
            for (; pos < freeidx.size(); ++pos) {
                auto& slot = coeff[static_cast<size_t>(freeidx[pos])];
                if (++slot < F.q())
                    break;
                slot = 0;
            }
            if (pos == freeidx.size())
                break;
        }
    }
}

Matrix random_algebra_element(const std::vector<Matrix>& gens, Rng& rng) {
    const FieldPtr& F = gens.front().field();
    const int n = gens.front().rows();
    Matrix acc = Matrix::zero(F, n, n);
    const int terms = 2 + static_cast<int>(rng.below(3));
    for (int t = 0; t < terms; ++t) {
        Matrix w = Matrix::identity(F, n);
        const int len = 1 + static_cast<int>(rng.below(4));
        for (int l = 0; l < len; ++l)
            w = w * gens[rng.below(gens.size())];
        std::uint64_t c = 1 + rng.below(F->q() - 1);
        acc = acc + w.scaled(c);
    }
    if (rng.below(4) == 0) {
        std::uint64_t c = 1 + rng.below(F->q() - 1);
        Matrix id = Matrix::identity(F, n).scaled(c);
        acc = acc + id;
    }
    return acc;
}

} // namespace

Matrix spin(const Matrix& vec, const std::vector<Matrix>& generators) {
    if (generators.empty())
        throw std::invalid_argument("spin needs at least one generator");
    const FieldPtr& F = vec.field();
    const int n = vec.rows();
    Vec v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = vec.at(i, 0);
    SpanBasis b = spin_vec(v, generators, *F, n);
    return basis_to_matrix(F, b);
}

IrreducibilityResult irreducibility_test(const std::vector<Matrix>& generators,
                                         Rng& rng, int max_rounds) {
    if (generators.empty())
        throw std::invalid_argument("irreducibility test needs generators");
    const FieldPtr& F = generators.front().field();
    const int n = generators.front().rows();
    for (const Matrix& g : generators)
        if (!g.square() || g.rows() != n || !g.field()->same(*F))
            throw std::invalid_argument("generators must be square, equal-sized, one field");

    IrreducibilityResult res;
    if (n == 1) {
        res.verdict = ModuleVerdict::Irreducible;
        return res;
    }

    std::vector<Matrix> gens_t;
    gens_t.reserve(generators.size());
    for (const Matrix& g : generators)
        gens_t.push_back(g.transpose());

    // projective kernel points enumerated in full while q^d stays small
    const std::uint64_t point_cap = 4096;

    for (int round = 0; round < max_rounds; ++round) {
        res.rounds_used = round + 1;
        Matrix a = random_algebra_element(generators, rng);
        Factorization fac = factor_poly(char_poly(a), rng.next());

        for (const auto& fp : fac.factors) {
            Matrix b = eval_poly_at(fp.factor, a);
            Matrix ker = b.kernel_basis();
            const int d = ker.cols();
            if (d == 0)
                continue;

            std::uint64_t points = 1;
            bool small_enough = true;
            for (int i = 0; i < d && small_enough; ++i) {
                if (points > point_cap * F->q())
                    small_enough = false;
                else
                    points *= F->q();
            }
            std::uint64_t npoints = small_enough ? (points - 1) / (F->q() - 1) : ~0ull;
            const bool certify = small_enough && npoints <= point_cap;

            // primal side
            bool proper_found = false;
            Matrix witness;
            auto primal_check = [&](const Vec& v) {
                SpanBasis sp = spin_vec(v, generators, *F, n);
                if (sp.dim() > 0 && sp.dim() < n) {
                    proper_found = true;
                    witness = basis_to_matrix(F, sp);
                    return false;
                }
                return true;
            };
            if (certify) {
                for_each_projective_point(ker, primal_check);
            } else {
                for (int c = 0; c < d && !proper_found; ++c) {
                    Vec v(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i)
                        v[static_cast<size_t>(i)] = ker.at(i, c);
                    primal_check(v);
                }
            }
            if (proper_found) {
                res.verdict = ModuleVerdict::Reducible;
                res.invariant_subspace = std::move(witness);
                return res;
            }

            // dual side
            Matrix ker_t = b.transpose().kernel_basis();
            Matrix dual_witness;
            bool dual_proper = false;
            auto dual_check = [&](const Vec& w) {
                SpanBasis sp = spin_vec(w, gens_t, *F, n);
                if (sp.dim() > 0 && sp.dim() < n) {
                    dual_proper = true;
                    dual_witness = basis_to_matrix(F, sp);
                    return false;
                }
                return true;
            };
            if (certify) {
                for_each_projective_point(ker_t, dual_check);
            } else {
                for (int c = 0; c < ker_t.cols() && !dual_proper; ++c) {
                    Vec w(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i)
                        w[static_cast<size_t>(i)] = ker_t.at(i, c);
                    dual_check(w);
                }
            }
            if (dual_proper) {
                // annihilator of the dual submodule is invariant and proper
                res.verdict = ModuleVerdict::Reducible;
                res.invariant_subspace = dual_witness.transpose().kernel_basis();
                return res;
            }

            if (certify) {
                // every kernel point on both sides spins to the full
                // space: irreducible
                res.verdict = ModuleVerdict::Irreducible;
                return res;
            }
        }
    }
    res.verdict = ModuleVerdict::Inconclusive;
    return res;
}

} // namespace topgen::gf
