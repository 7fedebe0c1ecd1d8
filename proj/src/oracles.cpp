#include "topgen/oracles.hpp"

#include <ostream>
#include <set>

#include "topgen/classdata.hpp"
#include "topgen/genexp.hpp"
#include "topgen/gf/factor.hpp"
#include "topgen/gf/meataxe.hpp"
#include "topgen/gf/random.hpp"
#include "topgen/gf/realize.hpp"
#include "topgen/obstructions.hpp"
#include "topgen/rng.hpp"

namespace topgen::oracles {

namespace cd = topgen::classdata;
namespace ge = topgen::genexp;
using gf::Field;
using gf::Matrix;

namespace {

Matrix jordan_default(const cd::ClassSpec& spec, const gf::FieldPtr& F) {
    std::map<std::string, std::uint64_t> values;
    std::uint64_t v = 1;
    for (const auto& e : spec.profile.entries)
        values[e.label] = v++;
    return gf::jordan_matrix(spec, F, values);
}

int commutant_trace_zero_nullity(const Matrix& x) {
    const auto& F = x.field();
    const int n = x.rows();
    Matrix sys(F, n * n + 1, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    std::uint64_t v = 0;
                    if (l == j)
                        v = F->add(v, x.at(i, k));
                    if (k == i)
                        v = F->sub(v, x.at(l, j));
                    if (v)
                        sys.set(i * n + j, k * n + l, v);
                }
    for (int k = 0; k < n; ++k)
        sys.set(n * n, k * n + k, 1);
    return n * n - sys.rank();
}

bool exhaustive_reducible(const std::vector<Matrix>& gens) {
    const auto& F = gens.front().field();
    const int n = gens.front().rows();
    const std::uint64_t q = F->q();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= q;
    std::vector<std::vector<std::uint64_t>> vecs;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<std::uint64_t> v(static_cast<size_t>(n));
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            v[static_cast<size_t>(i)] = c % q;
            c /= q;
        }
        vecs.push_back(std::move(v));
    }
    auto invariant = [&](const std::vector<std::vector<std::uint64_t>>& basis) {
        Matrix b(F, n, static_cast<int>(basis.size()));
        for (size_t c2 = 0; c2 < basis.size(); ++c2)
            for (int i = 0; i < n; ++i)
                b.set(i, static_cast<int>(c2), basis[c2][static_cast<size_t>(i)]);
        int dim = b.rank();
        if (dim == 0 || dim == n)
            return false;
        for (const auto& g : gens) {
            Matrix gb = g * b;
            Matrix both(F, n, b.cols() + gb.cols());
            for (int i = 0; i < n; ++i) {
                for (int c2 = 0; c2 < b.cols(); ++c2)
                    both.set(i, c2, b.at(i, c2));
                for (int c2 = 0; c2 < gb.cols(); ++c2)
                    both.set(i, b.cols() + c2, gb.at(i, c2));
            }
            if (both.rank() != dim)
                return false;
        }
        return true;
    };
    for (const auto& v : vecs)
        if (invariant({v}))
            return true;
    if (n >= 3)
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = i + 1; j < vecs.size(); ++j)
                if (invariant({vecs[i], vecs[j]}))
                    return true;
    return false;
}

struct Tally {
    std::ostream& out;
    bool all_ok = true;

    void report(const char* name, bool ok, const std::string& detail = "") {
        out << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty())
            out << "  (" << detail << ")";
        out << "\n";
        all_ok &= ok;
    }
};

} // namespace

bool run_suite(std::ostream& out, bool quick) {
    Tally t{out};

    // centralizer formula against commutant elimination, n <= 4 over GF(5)
    {
        auto F5 = Field::gf(5, 1);
        int mismatches = 0, checked = 0;
        for (int n = 2; n <= 4; ++n)
            for (const auto& spec : cd::enumerate_shapes(n)) {
                ++checked;
                if (cd::centralizer_dimension(spec) !=
                    commutant_trace_zero_nullity(jordan_default(spec, F5)))
                    ++mismatches;
            }
        t.report("centralizer-dimension vs commutant elimination (n <= 4, GF(5))",
                 mismatches == 0, std::to_string(checked) + " shapes");
    }

    // gamma against eigenspace kernel dimension, n <= 4 over GF(7)
    {
        auto F7 = Field::gf(7, 1);
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (const auto& spec : cd::enumerate_shapes(n)) {
                Matrix x = jordan_default(spec, F7);
                int best = 0;
                std::uint64_t v = 1;
                for (size_t i = 0; i < spec.profile.entries.size(); ++i, ++v) {
                    Matrix shifted = x;
                    for (int d = 0; d < n; ++d)
                        shifted.set(d, d, F7->sub(x.at(d, d), v));
                    best = std::max(best, n - shifted.rank());
                }
                ok &= (best == cd::gamma(spec));
            }
        t.report("gamma vs eigenspace kernel dimension (n <= 4, GF(7))", ok);
    }

    // criterion <-> parabolic obstruction equivalence
    {
        bool ok = true;
        for (int n = 3; n <= 6; ++n) {
            auto shapes = cd::enumerate_shapes(n);
            for (size_t i = 0; i < shapes.size(); ++i)
                for (size_t j = i; j < shapes.size(); ++j) {
                    cd::ClassTuple tu = cd::make_tuple({shapes[i], shapes[j]});
                    ok &= obstructions::parabolic_obstruction(tu) ==
                          (cd::generation_criterion(tu).outcome ==
                           cd::Outcome::EigenspaceObstruction);
                }
        }
        t.report("line-stabilizer obstruction matches the eigenspace criterion "
                 "(pairs, n <= 6)",
                 ok);
    }

    // characteristic polynomial: Cayley-Hamilton and conjugation invariance
    {
        bool ok = true;
        Rng rng(0xca11);
        for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{
                 {2, 2}, {3, 3}, {4, 5}, {3, 4}}) {
            auto [p, k] = ge::prime_power(q);
            auto F = Field::gf(p, k);
            int trials = quick ? 10 : 50;
            for (int s = 0; s < trials; ++s) {
                Matrix m = gf::random_special_linear(n, F, rng);
                auto chi = gf::char_poly(m);
                Matrix z = gf::eval_poly_at(chi, m);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        ok &= (z.at(i, j) == 0);
                ok &= (gf::char_poly(gf::random_conjugate(m, rng)) == chi);
            }
        }
        t.report("char-poly: Cayley-Hamilton and conjugation invariance", ok);
    }

    // factorization round-trip
    {
        bool ok = true;
        Rng rng(0xfac);
        for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
            auto [p, k] = ge::prime_power(q);
            auto F = Field::gf(p, k);
            int trials = quick ? 30 : 150;
            for (int s = 0; s < trials; ++s) {
                int deg = 1 + static_cast<int>(rng.below(8));
                std::vector<std::uint64_t> c(static_cast<size_t>(deg) + 1);
                for (auto& v : c)
                    v = rng.below(F->q());
                if (c.back() == 0)
                    c.back() = 1;
                gf::Poly f(F, std::move(c));
                auto fac = gf::factor_poly(f, rng.next());
                gf::Poly prod = gf::Poly::constant(F, fac.unit);
                for (const auto& fp : fac.factors) {
                    ok &= gf::is_irreducible(fp.factor);
                    for (int m2 = 0; m2 < fp.multiplicity; ++m2)
                        prod = prod * fp.factor;
                }
                ok &= (prod == f);
            }
        }
        t.report("polynomial factorization round-trip", ok);
    }

    // irreducibility test against exhaustive subspace search
    {
        bool ok = true;
        Rng rng(0x3a7);
        for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{
                 {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
            auto [p, k] = ge::prime_power(q);
            auto F = Field::gf(p, k);
            int trials = quick ? 15 : 60;
            for (int s = 0; s < trials; ++s) {
                std::vector<Matrix> gens;
                int count = 1 + static_cast<int>(rng.below(3));
                for (int i = 0; i < count; ++i)
                    gens.push_back(gf::random_special_linear(n, F, rng));
                auto res = gf::irreducibility_test(gens, rng);
                ok &= (res.verdict != gf::ModuleVerdict::Inconclusive);
                ok &= ((res.verdict == gf::ModuleVerdict::Reducible) ==
                       exhaustive_reducible(gens));
            }
        }
        t.report("module irreducibility vs exhaustive subspace search", ok);
    }

    // restriction keeps the eigenspace sum within the smaller bound
    {
        bool ok = true;
        for (int n = 3; n <= 5; ++n) {
            auto shapes = cd::enumerate_shapes(n);
            for (size_t i = 0; i < shapes.size(); ++i)
                for (size_t j = i; j < shapes.size(); ++j)
                    for (size_t k = j; k < shapes.size(); ++k) {
                        cd::ClassTuple tu =
                            cd::make_tuple({shapes[i], shapes[j], shapes[k]});
                        if (!cd::generation_criterion(tu).generating())
                            continue;
                        cd::ClassTuple res = cd::restrict_tuple(tu);
                        int gsum = 0;
                        for (const auto& c : res.classes)
                            gsum += cd::gamma(c);
                        ok &= (gsum <= (n - 1) * (tu.e() - 1));
                    }
        }
        t.report("dimension restriction keeps the eigenspace-sum bound "
                 "(triples, n <= 5)",
                 ok);
    }

    // SL_2(3) exact generation table
    {
        auto F3 = Field::gf(3, 1);
        Matrix c4(F3, 2, 2);
        c4.set(0, 1, 2);
        c4.set(1, 0, 1);
        Matrix c3 = Matrix::identity(F3, 2);
        c3.set(0, 1, 1);
        auto p43 = ge::exact_generation_probability(c4, c3).probability;
        auto p44 = ge::exact_generation_probability(c4, c4).probability;
        auto p33 = ge::exact_generation_probability(c3, c3).probability;
        bool ok = (p43 == Rational(1)) && (p44 == Rational(0)) &&
                  (p33 > Rational(0)) && (p33 < Rational(1));
        t.report("SL_2(3) exact generation table", ok,
                 "P(4,3)=" + p43.str() + " P(4,4)=" + p44.str() + " P(3,3)=" + p33.str());
    }

    return t.all_ok;
}

} // namespace topgen::oracles
