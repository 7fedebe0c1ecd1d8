#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "topgen/classdata.hpp"
#include "topgen/gf/random.hpp"
#include "topgen/rng.hpp"

using namespace topgen;
using namespace testutil;
namespace cd = topgen::classdata;

TEST_CASE("class validation") {
    CHECK_THROWS_AS(shape(3, {{2, 1, 1}}), std::invalid_argument); // size 4 != 3
    CHECK_THROWS_AS(shape(3, {{1, 1, 1}}), std::invalid_argument); // central
    CHECK_THROWS_AS(shape(2, {{1, 1}}), std::invalid_argument);    // central
    CHECK_THROWS_AS(cd::make_class(2, {{"a", {1}}, {"a", {1}}}), std::invalid_argument);
    CHECK_THROWS_AS(cd::make_class(2, {{"a", {0, 2}}}), std::invalid_argument);
    // blocks given in any order are normalized to non-increasing
    ClassSpec s = cd::make_class(4, {{"a", {1, 2, 1}}});
    CHECK(s.profile.entries[0].blocks == Partition{2, 1, 1});
}

TEST_CASE("gamma") {
    // nullity oracle: gamma equals dim ker(x - lambda I) of the Jordan
    // realization, maximized over labels
    auto F5 = gf::Field::gf(5, 1);
    auto gamma_oracle = [&](const ClassSpec& spec) {
        gf::Matrix x = jordan_with_default_values(spec, F5);
        int best = 0;
        std::uint64_t v = 1;
        for (size_t i = 0; i < spec.profile.entries.size(); ++i, ++v) {
            gf::Matrix shifted = x;
            for (int d = 0; d < x.rows(); ++d)
                shifted.set(d, d, F5->sub(x.at(d, d), v));
            best = std::max(best, x.rows() - shifted.rank());
        }
        return best;
    };

    ClassSpec transvection4 = shape(4, {{2, 1, 1}});
    CHECK(cd::gamma(transvection4) == 3);
    CHECK(gamma_oracle(transvection4) == 3);

    ClassSpec regular3 = shape(3, {{1}, {1}, {1}});
    CHECK(cd::gamma(regular3) == 1);

    ClassSpec mixed5 = shape(5, {{2, 2}, {1}});
    CHECK(cd::gamma(mixed5) == 2);
    CHECK(gamma_oracle(mixed5) == 2);

    // kernel-dimension tie for every shape with n <= 4
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : cd::enumerate_shapes(n))
            CHECK(cd::gamma(spec) == gamma_oracle(spec));
}

TEST_CASE("minimal polynomial degree and quadraticity") {
    CHECK(cd::minimal_polynomial_degree(shape(2, {{2}})) == 2);
    CHECK(cd::is_quadratic(shape(2, {{2}})));
    CHECK(cd::minimal_polynomial_degree(shape(3, {{1, 1}, {1}})) == 2);
    CHECK(cd::is_quadratic(shape(3, {{1, 1}, {1}})));
    CHECK(cd::minimal_polynomial_degree(shape(3, {{1}, {1}, {1}})) == 3);
    CHECK_FALSE(cd::is_quadratic(shape(3, {{1}, {1}, {1}})));
}

TEST_CASE("centralizer and class dimension") {
    // quadratic SL_3 shapes have class dimension 4, the rest 6
    CHECK(cd::class_dimension(shape(3, {{1, 1}, {1}})) == 4);
    CHECK(cd::centralizer_dimension(shape(3, {{3}})) == 2);
    CHECK(cd::class_dimension(shape(3, {{3}})) == 6);
    CHECK(cd::centralizer_dimension(shape(2, {{2}})) == 1);
    CHECK(cd::class_dimension(shape(2, {{2}})) == 2);

    // commutant-nullity oracle over GF(5), every shape with n <= 4
    auto F5 = gf::Field::gf(5, 1);
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : cd::enumerate_shapes(n)) {
            gf::Matrix x = jordan_with_default_values(spec, F5);
            CHECK(cd::centralizer_dimension(spec) == commutant_trace_zero_nullity(x));
        }

    // semisimple class dimensions are even
    for (int n = 2; n <= 6; ++n)
        for (const auto& spec : cd::enumerate_shapes(n)) {
            bool semisimple = true;
            for (const auto& e : spec.profile.entries)
                semisimple &= (e.blocks.front() == 1);
            if (semisimple)
                CHECK(cd::class_dimension(spec) % 2 == 0);
        }
}

TEST_CASE("dim_omega") {
    ClassSpec reg = shape(3, {{1}, {1}, {1}});
    ClassSpec quad = shape(3, {{1, 1}, {1}});
    ClassSpec transvection = shape(3, {{2, 1}});
    CHECK(cd::dim_omega(tuple({reg, reg})) == 12);
    CHECK(cd::dim_omega(tuple({quad, reg})) == 10);
    CHECK(cd::dim_omega(tuple({transvection})) == 4);
}

TEST_CASE("generation criterion, n >= 3") {
    ClassSpec reg = shape(3, {{1}, {1}, {1}});
    ClassSpec transvection = shape(3, {{2, 1}});

    cd::Verdict v = cd::generation_criterion(tuple({reg, reg}));
    CHECK(v.outcome == cd::Outcome::Generating);
    CHECK_FALSE(v.witness);

    v = cd::generation_criterion(tuple({transvection, transvection}));
    CHECK(v.outcome == cd::Outcome::EigenspaceObstruction);
    REQUIRE(v.witness);
    CHECK(*v.witness == 1);

    // n=4: [2,2] x {b:[1,1], c:[1,1]}: gamma sum 4 <= 4 but both quadratic
    cd::Verdict q = cd::generation_criterion(
        tuple({shape(4, {{2, 2}}), shape(4, {{1, 1}, {1, 1}})}));
    CHECK(q.outcome == cd::Outcome::QuadraticPairObstruction);
    CHECK_FALSE(q.witness);
}

TEST_CASE("obstructed pairs share an eigenvector over GF(7)") {
    // the eigenspace obstruction is not just arithmetic: random
    // transvection pairs in SL_3(7) always fix a common line
    auto F7 = gf::Field::gf(7, 1);
    ClassSpec transvection = shape(3, {{2, 1}});
    gf::Matrix rep = jordan_with_default_values(transvection, F7);
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        gf::Matrix x = gf::random_conjugate(rep, rng);
        gf::Matrix y = gf::random_conjugate(rep, rng);
        gf::Matrix stack(F7, 6, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                stack.set(a, b, F7->sub(x.at(a, b), a == b ? 1 : 0));
                stack.set(3 + a, b, F7->sub(y.at(a, b), a == b ? 1 : 0));
            }
        CHECK(3 - stack.rank() >= 1);
    }
}

TEST_CASE("generation criterion, n = 2") {
    auto involution = cd::make_class(2, {{"a", {1}}, {"b", {1}}},
                                     cd::OrderModCenter::Involution);
    auto unipotent = cd::make_class(2, {{"a", {2}}}, cd::OrderModCenter::Other);

    CHECK(cd::generation_criterion(tuple({involution, involution})).outcome ==
          cd::Outcome::SL2InvolutionObstruction);
    CHECK(cd::generation_criterion(tuple({involution, unipotent})).outcome ==
          cd::Outcome::Generating);
    // missing annotation
    auto bare = cd::make_class(2, {{"a", {2}}});
    CHECK_THROWS_AS(cd::generation_criterion(tuple({bare, bare})), std::invalid_argument);
    // only pairs are supported at n = 2
    CHECK_THROWS_AS(cd::generation_criterion(tuple({unipotent, unipotent, unipotent})),
                    std::invalid_argument);
}

TEST_CASE("min_generators") {
    for (int n = 3; n <= 8; ++n) {
        ClassSpec reg = [&] {
            std::vector<Partition> parts(static_cast<size_t>(n), Partition{1});
            return shape(n, std::move(parts));
        }();
        CHECK(cd::min_generators(reg) == 2);
    }
    CHECK(cd::min_generators(shape(4, {{2, 1, 1}})) == 4); // gamma 3
    CHECK(cd::min_generators(shape(4, {{2, 2}})) == 3);    // quadratic bump
    CHECK_THROWS_AS(cd::min_generators(cd::make_class(2, {{"a", {2}}})),
                    std::invalid_argument);

    // consistency with the criterion on e copies, every shape with n <= 8
    for (int n = 3; n <= 8; ++n)
        for (const auto& spec : cd::enumerate_shapes(n)) {
            int d = cd::min_generators(spec);
            CHECK(d >= 2);
            CHECK(d <= n);
            for (int e = 2; e <= n; ++e) {
                std::vector<ClassSpec> copies(static_cast<size_t>(e), spec);
                bool gen = cd::generation_criterion(tuple(copies)).generating();
                CHECK(gen == (e >= d));
            }
        }
}

TEST_CASE("restrict_tuple") {
    // k = 1 block: gamma drops by one
    {
        ClassTuple input = tuple({shape(3, {{2, 1}}), shape(3, {{2, 1}}), shape(3, {{2, 1}})});
        ClassTuple out = cd::restrict_tuple(input);
        CHECK(out.n() == 2);
        CHECK(out.classes[0].profile.entries.size() == 1);
        CHECK(out.classes[0].profile.entries[0].blocks == Partition{2});
        CHECK(cd::gamma(out.classes[0]) == 1);
    }
    // k > 1 block: gamma unchanged
    {
        ClassTuple input = tuple({shape(4, {{2, 2}}), shape(4, {{1}, {1}, {1}, {1}}),
                                  shape(4, {{1}, {1}, {1}, {1}})});
        ClassTuple out = cd::restrict_tuple(input);
        CHECK(out.n() == 3);
        CHECK(out.classes[0].profile.entries[0].blocks == Partition{2, 1});
        CHECK(cd::gamma(out.classes[0]) == 2);
    }
    // regular semisimple pair in SL_5 -> SL_4, sum check 2 <= 4
    {
        ClassSpec reg5 = shape(5, {{1}, {1}, {1}, {1}, {1}});
        ClassTuple out = cd::restrict_tuple(tuple({reg5, reg5}));
        CHECK(out.n() == 4);
        int gsum = 0;
        for (const auto& c : out.classes)
            gsum += cd::gamma(c);
        CHECK(gsum <= 4);
    }
    // precondition: the input must satisfy the criterion
    ClassSpec transvection = shape(3, {{2, 1}});
    CHECK_THROWS_AS(cd::restrict_tuple(tuple({transvection, transvection})),
                    std::invalid_argument);
}

TEST_CASE("eigenspace intersection lower bound") {
    CHECK(cd::eigenspace_intersection_lower_bound(
              tuple({shape(4, {{2, 1, 1}}), shape(4, {{2, 1, 1}})})) == 2);
    ClassSpec reg3 = shape(3, {{1}, {1}, {1}});
    CHECK(cd::eigenspace_intersection_lower_bound(tuple({reg3, reg3})) == 0);

    // n=6, e=3, gamma=(5,5,5) -> 3; random 5-dim subspaces of GF(7)^6 meet
    // in dimension exactly 3 generically
    ClassSpec t6 = shape(6, {{2, 1, 1, 1, 1}});
    CHECK(cd::eigenspace_intersection_lower_bound(tuple({t6, t6, t6})) == 3);
    auto F7 = gf::Field::gf(7, 1);
    Rng rng(7);
    int equal = 0;
    for (int trial = 0; trial < 30; ++trial) {
        // three random rank-1 maps: kernels are random 5-dim subspaces
        gf::Matrix stack(F7, 3, 6);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 6; ++c)
                stack.set(r, c, rng.below(7));
        if (stack.rank() == 3)
            ++equal;
    }
    CHECK(equal >= 28); // generic: full rank almost always
}

TEST_CASE("enumerate_shapes") {
    auto s2 = cd::enumerate_shapes(2);
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].profile.entries[0].blocks == Partition{2});
    CHECK(s2[1].profile.entries.size() == 2);

    auto s3 = cd::enumerate_shapes(3);
    REQUIRE(s3.size() == 5);
    // listed canonical order
    CHECK(s3[0] == shape(3, {{3}}));
    CHECK(s3[1] == shape(3, {{2, 1}}));
    CHECK(s3[2] == shape(3, {{2}, {1}}));
    CHECK(s3[3] == shape(3, {{1, 1}, {1}}));
    CHECK(s3[4] == shape(3, {{1}, {1}, {1}}));

    CHECK(cd::enumerate_shapes(4, 2).size() == 10);
    CHECK(cd::enumerate_shapes(4).size() == 13);

    // independent count oracle: partitions-of-partitions via the Euler
    // transform of the partition numbers, minus the central shape
    // p(n): 1,2,3,5,7,11,15,22 -> multiset-of-partitions totals
    // 1,3,6,14,27,58,111,223 for n = 1..8
    const int expected_total[] = {0, 1, 3, 6, 14, 27, 58, 111, 223};
    for (int n = 2; n <= 8; ++n)
        CHECK(static_cast<int>(cd::enumerate_shapes(n).size()) == expected_total[n] - 1);

    // shapes are pairwise distinct and all valid
    auto s6 = cd::enumerate_shapes(6);
    std::set<std::string> seen;
    for (const auto& spec : s6) {
        CHECK(spec.n == 6);
        seen.insert(cd::to_string(spec));
    }
    CHECK(seen.size() == s6.size());

    CHECK_THROWS_AS(cd::enumerate_shapes(cd::kEnumerationCap + 1), std::runtime_error);
}

TEST_CASE("gamma bounds and transvection-type characterization") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& spec : cd::enumerate_shapes(n)) {
            int g = cd::gamma(spec);
            CHECK(g >= 1);
            CHECK(g <= n - 1);
            // gamma = n-1 iff [2,1^(n-2)] or two labels [1^(n-1)],[1]
            bool extremal = g == n - 1;
            bool is_transvection_type =
                spec == shape(n, [&] {
                    Partition p{2};
                    for (int i = 0; i < n - 2; ++i)
                        p.push_back(1);
                    return std::vector<Partition>{p};
                }());
            bool is_reflection_type =
                n >= 2 && spec.profile.entries.size() == 2 &&
                spec == shape(n, {Partition(static_cast<size_t>(n - 1), 1), {1}});
            CHECK(extremal == (is_transvection_type || is_reflection_type));
            // quadratic forces a large eigenspace
            if (cd::is_quadratic(spec))
                CHECK(g >= (n + 1) / 2);
        }
}
