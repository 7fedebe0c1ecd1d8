#include <doctest.h>

#include <map>
#include <set>

#include "test_util.hpp"
#include "topgen/genexp.hpp"
#include "topgen/gf/factor.hpp"
#include "topgen/gf/random.hpp"
#include "topgen/gf/realize.hpp"

using namespace topgen;
using namespace testutil;
namespace cd = topgen::classdata;
namespace ge = topgen::genexp;
using gf::Field;
using gf::Matrix;

namespace {

Matrix sl23_order4(const gf::FieldPtr& F3) {
    Matrix m(F3, 2, 2); // char poly x^2 + 1: order 4
    m.set(0, 1, 2);
    m.set(1, 0, 1);
    return m;
}

Matrix sl23_order3(const gf::FieldPtr& F3) {
    Matrix m = Matrix::identity(F3, 2);
    m.set(0, 1, 1);
    return m;
}

} // namespace

TEST_CASE("special linear group orders") {
    CHECK(ge::special_linear_order(3, 2) == 168);
    CHECK(ge::special_linear_order(2, 5) == 120);
    CHECK(ge::special_linear_order(3, 4) == 60480);
    CHECK(ge::special_linear_order(2, 3) == 24);
    // sanity at a size that needs big integers
    CHECK(ge::special_linear_order(5, 7).str() == "187035198320488089600");
    CHECK_THROWS_AS(ge::special_linear_order(3, 6), std::invalid_argument);
}

TEST_CASE("prime power parsing") {
    CHECK(ge::prime_power(49) == std::pair<std::uint64_t, unsigned>{7, 2});
    CHECK(ge::prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(ge::prime_power(5) == std::pair<std::uint64_t, unsigned>{5, 1});
    CHECK_THROWS_AS(ge::prime_power(12), std::invalid_argument);
}

TEST_CASE("group closure") {
    auto F3 = Field::gf(3, 1);
    Matrix up = Matrix::identity(F3, 2);
    up.set(0, 1, 1);
    Matrix lo = up.transpose();
    auto full = ge::bfs_group_closure({up, lo}, 100000);
    CHECK_FALSE(full.capped);
    CHECK(full.order == 24);

    auto F5 = Field::gf(5, 1);
    Matrix neg = Matrix::identity(F5, 2).scaled(4);
    auto tiny = ge::bfs_group_closure({neg}, 100000);
    CHECK(tiny.order == 2);

    // the cap reports instead of growing without bound
    auto capped = ge::bfs_group_closure({up, lo}, 10);
    CHECK(capped.capped);

    // certified full-group test agrees with exact closure
    CHECK(ge::generates_special_linear({up, lo}, 24, 100000));
    CHECK_FALSE(ge::generates_special_linear({neg}, 120, 100000));
}

TEST_CASE("order-4 pairs of SL_2(3) stay inside the quaternion subgroup") {
    auto F3 = Field::gf(3, 1);
    auto cls = ge::conjugacy_class_orbit(sl23_order4(F3), 1000);
    REQUIRE(cls.size() == 6);
    for (const auto& x : cls)
        for (const auto& y : cls) {
            auto closure = ge::bfs_group_closure({x, y}, 1000);
            CHECK(8 % closure.order == 0);
            CHECK(closure.order != 24);
        }
}

TEST_CASE("exact generation probabilities in SL_2(3)") {
    auto F3 = Field::gf(3, 1);
    Matrix c4 = sl23_order4(F3);
    Matrix c3 = sl23_order3(F3);

    auto p43 = ge::exact_generation_probability(c4, c3);
    CHECK(p43.probability == Rational(1));

    auto p44 = ge::exact_generation_probability(c4, c4);
    CHECK(p44.probability == Rational(0));

    auto p33 = ge::exact_generation_probability(c3, c3);
    CHECK(p33.probability > Rational(0));
    CHECK(p33.probability < Rational(1));

    // full-pair oracle: exhaustively enumerate I_4 x I_3 (6 x 8 elements,
    // both order-3 classes together) and count generating pairs
    auto cls4 = ge::conjugacy_class_orbit(c4, 100);
    std::vector<Matrix> order3_elements;
    {
        // scan the whole group
        Matrix lo = sl23_order3(F3).transpose();
        auto group = ge::conjugacy_class_orbit(Matrix::identity(F3, 2), 100); // {I}
        // enumerate SL_2(3) by closure over generators
        std::vector<Matrix> gens = ge::elementary_generators(2, F3);
        std::set<std::uint64_t> seen;
        std::vector<Matrix> all{Matrix::identity(F3, 2)};
        seen.insert(*all[0].packed_key());
        for (size_t i = 0; i < all.size(); ++i)
            for (const auto& g : gens) {
                Matrix nxt = all[i] * g;
                if (seen.insert(*nxt.packed_key()).second)
                    all.push_back(nxt);
            }
        REQUIRE(all.size() == 24);
        for (const auto& m : all)
            if (*gf::element_order(m) == 3)
                order3_elements.push_back(m);
    }
    REQUIRE(order3_elements.size() == 8);
    int generating = 0;
    for (const auto& x : cls4)
        for (const auto& y : order3_elements)
            if (ge::generates_special_linear({x, y}, 24, 1000))
                ++generating;
    CHECK(generating == static_cast<int>(cls4.size() * order3_elements.size()));

    // the (order-3, order-3) fraction against the same scan, one class
    auto cls3 = ge::conjugacy_class_orbit(c3, 100);
    REQUIRE(cls3.size() == 4);
    int gen33 = 0;
    for (const auto& x : cls3)
        for (const auto& y : cls3)
            if (ge::generates_special_linear({x, y}, 24, 1000))
                ++gen33;
    CHECK(Rational(gen33, static_cast<long long>(cls3.size() * cls3.size())) ==
          p33.probability);
}

TEST_CASE("prime order shapes") {
    // n=3, q=2, r=7: a single degree-3 orbit
    auto s327 = ge::enumerate_prime_order_shapes(3, 2, 7);
    REQUIRE(s327.size() == 1);
    CHECK(s327[0].orbit_degree == 3);
    CHECK(s327[0].fixed_multiplicity == 0);
    CHECK(s327[0].orbit_multiplicities == std::vector<int>{1});
    CHECK(s327[0].gamma_over_closure == 1);
    CHECK(s327[0].realizable);

    // n=3, q=4, r=3: orbit degree 1; the central (0,0,3)-type is excluded
    auto s343 = ge::enumerate_prime_order_shapes(3, 4, 3);
    REQUIRE(s343.size() == 4);
    bool saw_regular = false, saw_gamma2 = false;
    for (const auto& sh : s343) {
        CHECK(sh.orbit_degree == 1);
        if (sh.fixed_multiplicity == 1 && sh.orbit_multiplicities == std::vector<int>{1, 1}) {
            saw_regular = true;
            CHECK(sh.gamma_over_closure == 1);
            CHECK(sh.realizable); // det = omega * omega^2 = 1
        }
        if (sh.gamma_over_closure == 2)
            saw_gamma2 = true;
    }
    CHECK(saw_regular);
    CHECK(saw_gamma2);
    // (2,1,0)-type shapes have determinant omega or omega^2: unrealizable
    for (const auto& sh : s343)
        if (sh.fixed_multiplicity == 2)
            CHECK_FALSE(sh.realizable);

    // n=4, q=3, r=5: a single degree-4 orbit
    auto s435 = ge::enumerate_prime_order_shapes(4, 3, 5);
    REQUIRE(s435.size() == 1);
    CHECK(s435[0].orbit_degree == 4);
    CHECK(s435[0].gamma_over_closure == 1);

    CHECK_THROWS_AS(ge::enumerate_prime_order_shapes(3, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(ge::enumerate_prime_order_shapes(3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(ge::enumerate_prime_order_shapes(3, 2, 5), std::invalid_argument);
}

TEST_CASE("shape representatives have the right order and type") {
    for (auto [n, q, r] : std::vector<std::tuple<int, std::uint64_t, std::uint64_t>>{
             {3, 2, 7}, {3, 4, 3}, {4, 3, 5}, {3, 3, 13}, {4, 5, 3}, {5, 2, 31}}) {
        auto [p, k] = ge::prime_power(q);
        auto F = Field::gf(p, k);
        for (const auto& sh : ge::enumerate_prime_order_shapes(n, q, r)) {
            if (!sh.realizable)
                continue;
            Matrix rep = ge::shape_representative(sh, F);
            CHECK(rep.determinant() == 1);
            CHECK(*gf::element_order(rep) == r);
            // eigenvalue-one multiplicity = kernel of (rep - I)
            Matrix shifted = rep - Matrix::identity(F, n);
            CHECK(shifted.kernel_basis().cols() == sh.fixed_multiplicity);
        }
    }
}

namespace {

std::vector<Matrix> enumerate_group(int n, const gf::FieldPtr& F) {
    std::vector<Matrix> gens = ge::elementary_generators(n, F);
    std::set<std::uint64_t> seen;
    std::vector<Matrix> all{Matrix::identity(F, n)};
    seen.insert(*all[0].packed_key());
    for (size_t i = 0; i < all.size(); ++i)
        for (const auto& g : gens) {
            Matrix nxt = all[i] * g;
            if (seen.insert(*nxt.packed_key()).second)
                all.push_back(nxt);
        }
    return all;
}

// The multiplicity profile of a semisimple element from its
// characteristic polynomial: multiplicity of the eigenvalue one, plus the
// sorted multiplicities of the nontrivial irreducible factors.
std::pair<int, std::vector<int>> observed_shape(const Matrix& m) {
    auto fac = gf::factor_poly(gf::char_poly(m), 17);
    int a = 0;
    std::vector<int> orbit_mults;
    for (const auto& fp : fac.factors) {
        bool is_x_minus_one =
            fp.factor.degree() == 1 && fp.factor.coeff(0) == m.field()->neg(1);
        if (is_x_minus_one)
            a = fp.multiplicity;
        else
            orbit_mults.push_back(fp.multiplicity);
    }
    std::sort(orbit_mults.rbegin(), orbit_mults.rend());
    return {a, orbit_mults};
}

} // namespace

TEST_CASE("shape completeness against a group scan") {
    // the enumerated realizable shapes are exactly the profiles observed
    // among order-r elements of the actual finite group
    for (auto [n, q, r] : std::vector<std::tuple<int, std::uint64_t, std::uint64_t>>{
             {3, 2, 7}, {2, 5, 3}, {2, 3, 2}, {3, 4, 3}, {2, 7, 3}}) {
        CAPTURE(n);
        CAPTURE(q);
        CAPTURE(r);
        auto [p, k] = ge::prime_power(q);
        auto F = Field::gf(p, k);
        auto all = enumerate_group(n, F);
        REQUIRE(ge::BigInt(all.size()) == ge::special_linear_order(n, q));

        std::set<std::pair<int, std::vector<int>>> observed;
        for (const auto& m : all) {
            auto o = gf::element_order(m, 1 << 12);
            if (!o || *o != r)
                continue;
            // skip central (scalar) elements: shapes exclude them
            bool scalar = true;
            for (int i = 0; i < n && scalar; ++i)
                for (int j = 0; j < n && scalar; ++j)
                    if (i != j && m.at(i, j) != 0)
                        scalar = false;
            if (scalar)
                continue;
            observed.insert(observed_shape(m));
        }
        std::set<std::pair<int, std::vector<int>>> predicted;
        for (const auto& sh : ge::enumerate_prime_order_shapes(n, q, r))
            if (sh.realizable)
                predicted.insert({sh.fixed_multiplicity, sh.orbit_multiplicities});
        CHECK(observed == predicted);
    }
}

TEST_CASE("quadratic pairs can be irreducible over the base field") {
    // two conjugates of the [2,2] unipotent in SL_4(2) always lie in a
    // proper subgroup, but the invariant subspace sometimes exists only
    // over GF(4); the classifier then reports proper_irreducible and the
    // generating count stays zero
    auto F2 = Field::gf(2, 1);
    auto spec = cd::make_class(4, {{"a", {2, 2}}});
    auto values = gf::find_det_one_assignment(spec, F2);
    auto rep = gf::representative_matrix(spec, F2, values);
    ge::ExperimentConfig cfg;
    cfg.n = 4;
    cfg.p = 2;
    cfg.k = 1;
    cfg.class_c = spec;
    cfg.class_d = spec;
    cfg.sample_count = 300;
    cfg.master_seed = 31;
    ge::GenerationReport r = ge::estimate_generation_probability(cfg, rep, rep);
    CHECK(r.generating == 0);
    CHECK(r.inconclusive == 0);
    CHECK(r.reducible > 0);
    CHECK(r.proper_irreducible > 0); // the genuinely non-split samples
    CHECK(r.reducible + r.proper_irreducible == cfg.sample_count);
}

TEST_CASE("good/bad classification") {
    auto rep = ge::classify_good_bad(3, 2, 7, 7);
    CHECK(rep.good_exists);
    CHECK(rep.max_bad_dim == -1); // no bad pairs at all
    REQUIRE(rep.best_good);
    CHECK(rep.best_good->dim_omega == 12);

    auto rep73 = ge::classify_good_bad(3, 7, 3, 3);
    CHECK(rep73.good_exists);
    for (const auto& sh : rep73.shapes_r)
        CHECK(sh.gamma_over_closure * 2 < 3 * 1 + 3); // gamma < n/2 would be *2 < 3
    // the maximal-dimensional realizable shape is the regular one
    CHECK(rep73.shapes_r.front().gamma_over_closure == 1);
    CHECK(rep73.shapes_r.front().class_dimension == 6);

    CHECK_THROWS_AS(ge::classify_good_bad(4, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("Monte Carlo estimation is deterministic and conservative") {
    ge::ExperimentConfig simple;
    simple.n = 2;
    simple.p = 3;
    simple.k = 1;
    simple.class_c = cd::make_class(2, {{"a", {2}}}, std::nullopt, {{"a", "1"}});
    simple.class_d = simple.class_c;
    simple.sample_count = 300;
    simple.master_seed = 5;
    ge::GenerationReport r1 = ge::estimate_generation_probability(simple);
    ge::GenerationReport r2 = ge::estimate_generation_probability(simple);
    CHECK(r1.generating == r2.generating);
    CHECK(r1.reducible == r2.reducible);
    CHECK(r1.p_hat == r2.p_hat);
    CHECK(r1.generating + r1.reducible + r1.proper_irreducible + r1.inconclusive ==
          simple.sample_count);
    CHECK(r1.ci_lo <= r1.p_hat);
    CHECK(r1.p_hat <= r1.ci_hi);

    // unipotent pair in SL_2(3): exact probability 3/4 from the class table
    auto exact = ge::exact_generation_probability(sl23_order3(Field::gf(3, 1)),
                                                  sl23_order3(Field::gf(3, 1)));
    double ex = static_cast<double>(exact.probability.num()) /
                static_cast<double>(exact.probability.den());
    CHECK(r1.p_hat == doctest::Approx(ex).epsilon(0.15));
}

TEST_CASE("Monte Carlo with orbit-shape representatives") {
    // order-7 pair in SL_3(2): eigenvalues live in GF(8), so the
    // representative comes from the shape machinery
    auto shapes = ge::enumerate_prime_order_shapes(3, 2, 7);
    REQUIRE(shapes.size() == 1);
    auto F2 = Field::gf(2, 1);
    Matrix rep = ge::shape_representative(shapes[0], F2);

    ge::ExperimentConfig cfg;
    cfg.n = 3;
    cfg.p = 2;
    cfg.k = 1;
    cfg.r = 7;
    cfg.s = 7;
    cfg.class_c = ge::shape_to_class(shapes[0]);
    cfg.class_d = cfg.class_c;
    cfg.sample_count = 400;
    cfg.master_seed = 3;
    ge::GenerationReport r = ge::estimate_generation_probability(cfg, rep, rep);
    CHECK(r.generating + r.reducible + r.proper_irreducible + r.inconclusive == 400);
    // exact value is 7/8 (proper pairs lie in the normalizer of a torus)
    auto exact = ge::exact_generation_probability(rep, rep);
    CHECK(exact.probability == Rational(7, 8));
    double ex = 7.0 / 8.0;
    CHECK(r.ci_lo <= ex);
    CHECK(ex <= r.ci_hi);
}

TEST_CASE("exact value sits inside the Monte Carlo interval almost always") {
    auto F3 = Field::gf(3, 1);
    auto exact = ge::exact_generation_probability(sl23_order3(F3), sl23_order3(F3));
    double ex = static_cast<double>(exact.probability.num()) /
                static_cast<double>(exact.probability.den());
    ge::ExperimentConfig cfg;
    cfg.n = 2;
    cfg.p = 3;
    cfg.k = 1;
    cfg.class_c = cd::make_class(2, {{"a", {2}}}, std::nullopt, {{"a", "1"}});
    cfg.class_d = cfg.class_c;
    cfg.sample_count = 200;
    int inside = 0;
    const int reps = 40;
    for (int i = 0; i < reps; ++i) {
        cfg.master_seed = 1000 + static_cast<std::uint64_t>(i);
        ge::GenerationReport r = ge::estimate_generation_probability(cfg);
        if (r.ci_lo <= ex && ex <= r.ci_hi)
            ++inside;
    }
    CHECK(inside >= 37); // >= 93%
}

TEST_CASE("necessity: obstructed pairs never generate") {
    // transvection pair in SL_3(3): gamma sum 4 > 3
    ge::ExperimentConfig cfg;
    cfg.n = 3;
    cfg.p = 3;
    cfg.k = 1;
    cfg.class_c = cd::make_class(3, {{"a", {2, 1}}}, std::nullopt, {{"a", "1"}});
    cfg.class_d = cfg.class_c;
    cfg.sample_count = 200;
    cfg.master_seed = 77;
    ge::GenerationReport r = ge::estimate_generation_probability(cfg);
    CHECK(r.generating == 0);
    CHECK(r.p_hat == 0.0);
    CHECK(r.reducible == cfg.sample_count);

    // quadratic pair in SL_3(5): semisimple a:[1,1], b:[1]
    ge::ExperimentConfig q5;
    q5.n = 3;
    q5.p = 5;
    q5.k = 1;
    q5.class_c = shape(3, {{1, 1}, {1}});
    q5.class_d = q5.class_c;
    q5.sample_count = 150;
    q5.master_seed = 78;
    ge::GenerationReport rq = ge::estimate_generation_probability(q5);
    CHECK(rq.generating == 0);
    CHECK(rq.reducible == q5.sample_count);
}

TEST_CASE("intersection formula verification") {
    // two transvections in SL_3(7): t = 1
    ClassTuple t3 = tuple({shape(3, {{2, 1}}), shape(3, {{2, 1}})});
    ge::IntersectionReport r = ge::verify_intersection_formula(t3, 7, 200, 11);
    CHECK(r.expected_lower_bound == 1);
    CHECK(r.bound_held == 200);
    CHECK(r.equality >= 190); // >= 95%

    // gamma (3,3) at n = 4: t = 2
    ClassTuple t4 = tuple({shape(4, {{2, 1, 1}}), shape(4, {{2, 1, 1}})});
    ge::IntersectionReport r2 = ge::verify_intersection_formula(t4, 7, 200, 12);
    CHECK(r2.expected_lower_bound == 2);
    CHECK(r2.bound_held == 200);
    CHECK(r2.equality >= 190);

    // vacuous bound is rejected
    ClassSpec reg = shape(3, {{1}, {1}, {1}});
    CHECK_THROWS_AS(ge::verify_intersection_formula(tuple({reg, reg}), 7, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("Wilson interval") {
    auto [lo0, hi0] = ge::wilson_interval(0, 100);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);
    CHECK(hi0 < 0.05);
    auto [lo1, hi1] = ge::wilson_interval(100, 100);
    CHECK(hi1 == 1.0);
    CHECK(lo1 > 0.95);
    auto [lo, hi] = ge::wilson_interval(50, 100);
    CHECK(lo < 0.5);
    CHECK(hi > 0.5);
    CHECK(hi - lo < 0.22);
}
