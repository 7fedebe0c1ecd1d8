#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "topgen/genexp.hpp"
#include "topgen/gf/random.hpp"
#include "topgen/gf/realize.hpp"
#include "topgen/gf/strongreg.hpp"

using namespace topgen;
using namespace testutil;
namespace cd = topgen::classdata;
using gf::Field;
using gf::Matrix;

TEST_CASE("representative matrices") {
    auto F5 = Field::gf(5, 1);
    // a:[2,1] with a = 1: J_2(1) + J_1(1), det 1
    ClassSpec t = cd::make_class(3, {{"a", {2, 1}}}, std::nullopt, {{"a", "1"}});
    Matrix m = gf::representative_matrix(t, F5);
    CHECK(m.determinant() == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 0) == 1);
    CHECK(gf::char_poly(m).degree() == 3);

    // diag(2,4) over GF(7)
    auto F7 = Field::gf(7, 1);
    ClassSpec d = cd::make_class(2, {{"a", {1}}, {"b", {1}}}, std::nullopt,
                                 {{"a", "2"}, {"b", "4"}});
    Matrix dm = gf::representative_matrix(d, F7);
    CHECK(dm.determinant() == 1);
    CHECK(dm.at(0, 0) * dm.at(1, 1) == 8);

    // diag(2,5,4) over GF(13): det 40 = 1
    auto F13 = Field::gf(13, 1);
    ClassSpec d3 = cd::make_class(3, {{"a", {1}}, {"b", {1}}, {"c", {1}}}, std::nullopt,
                                  {{"a", "2"}, {"b", "5"}, {"c", "4"}});
    CHECK(gf::representative_matrix(d3, F13).determinant() == 1);

    // determinant failure carries the scalar and a rescaling hint
    ClassSpec bad = cd::make_class(2, {{"a", {1}}, {"b", {1}}}, std::nullopt,
                                   {{"a", "2"}, {"b", "4"}});
    try {
        gf::representative_matrix(bad, F5);
        FAIL("expected a determinant error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("determinant 3") != std::string::npos);
        CHECK(msg.find("rescaling") != std::string::npos);
    }
    // repeated values for distinct labels
    ClassSpec rep = cd::make_class(2, {{"a", {1}}, {"b", {1}}}, std::nullopt,
                                   {{"a", "2"}, {"b", "2"}});
    CHECK_THROWS_AS(gf::representative_matrix(rep, F5), std::invalid_argument);
}

TEST_CASE("gamma ties to kernel dimension of realizations") {
    for (std::uint64_t q : {5ull, 7ull}) {
        auto F = Field::gf(q, 1);
        for (int n = 2; n <= 4; ++n)
            for (const auto& spec : cd::enumerate_shapes(n)) {
                auto values = gf::find_det_one_assignment(spec, F);
                if (values.empty())
                    continue;
                Matrix x = gf::representative_matrix(spec, F, values);
                CHECK(x.determinant() == 1);
                CHECK(gf::char_poly(x).degree() == n);
                // kernel dim of (x - lambda I) = block count of the label
                for (const auto& e : spec.profile.entries) {
                    Matrix shifted = x;
                    for (int d = 0; d < n; ++d)
                        shifted.set(d, d, F->sub(x.at(d, d), values.at(e.label)));
                    CHECK(shifted.kernel_basis().cols() ==
                          static_cast<int>(e.blocks.size()));
                }
            }
    }
}

TEST_CASE("random special linear sampling") {
    Rng rng(2024);
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{
             {2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {4, 3}, {3, 4}}) {
        auto [p, k] = genexp::prime_power(q);
        auto F = Field::gf(p, k);
        for (int t = 0; t < 50; ++t) {
            Matrix g = gf::random_special_linear(n, F, rng);
            CHECK(g.determinant() == 1);
        }
    }

    // conjugation preserves the characteristic polynomial
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
            auto [p, k] = genexp::prime_power(q);
            auto F = Field::gf(p, k);
            Matrix x = gf::random_special_linear(n, F, rng);
            auto chi = gf::char_poly(x);
            for (int t = 0; t < 100; ++t)
                CHECK(gf::char_poly(gf::random_conjugate(x, rng)) == chi);
        }

    // rough uniformity: SL_2(2) has 6 elements; a large sample hits each
    // element a comparable number of times
    auto F2 = Field::gf(2, 1);
    std::map<std::uint64_t, int> counts;
    for (int t = 0; t < 1200; ++t)
        ++counts[*gf::random_special_linear(2, F2, rng).packed_key()];
    CHECK(counts.size() == 6);
    for (const auto& [key, c] : counts) {
        CHECK(c > 120);
        CHECK(c < 280);
    }
}

TEST_CASE("order-4 class of SL_2(3) has exactly six elements") {
    auto F3 = Field::gf(3, 1);
    Matrix i4(F3, 2, 2);
    i4.set(0, 1, 2);
    i4.set(1, 0, 1); // char poly x^2 + 1
    auto cls = genexp::conjugacy_class_orbit(i4, 1000);
    CHECK(cls.size() == 6);
    std::set<std::uint64_t> keys;
    for (const auto& m : cls) {
        keys.insert(*m.packed_key());
        CHECK(*gf::element_order(m) == 4);
    }
    CHECK(keys.size() == 6);
}

TEST_CASE("element order") {
    auto F7 = Field::gf(7, 1);
    Matrix d(F7, 2, 2);
    d.set(0, 0, 2);
    d.set(1, 1, 4);
    CHECK(*gf::element_order(d) == 3);

    auto F3 = Field::gf(3, 1);
    Matrix j(F3, 2, 2);
    j.set(0, 0, 1);
    j.set(0, 1, 1);
    j.set(1, 1, 1);
    CHECK(*gf::element_order(j) == 3);

    Matrix neg_i(Field::gf(5, 1), 2, 2);
    neg_i.set(0, 0, 4);
    neg_i.set(1, 1, 4);
    CHECK(*gf::element_order(neg_i) == 2);

    // order divides the group order; unipotent order is p for blocks <= p
    Rng rng(5);
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {3, 2}, {3, 4}, {2, 7}}) {
        auto [p, k] = genexp::prime_power(q);
        auto F = Field::gf(p, k);
        genexp::BigInt order = genexp::special_linear_order(n, q);
        for (int t = 0; t < 30; ++t) {
            Matrix g = gf::random_special_linear(n, F, rng);
            auto o = gf::element_order(g);
            REQUIRE(o);
            CHECK(order % genexp::BigInt(*o) == 0);
        }
        // J_2(1) + identity padding: order p when 2 <= p
        if (p >= 2 && n >= 2) {
            Matrix u = Matrix::identity(F, n);
            u.set(0, 1, 1);
            CHECK(*gf::element_order(u) == p);
        }
    }
}

TEST_CASE("strongly regular elements") {
    auto F13 = Field::gf(13, 1);
    Matrix good(F13, 3, 3);
    good.set(0, 0, 2);
    good.set(1, 1, 5);
    good.set(2, 2, 4);
    CHECK(gf::is_strongly_regular(good));

    auto F7 = Field::gf(7, 1);
    Matrix bad(F7, 3, 3);
    bad.set(0, 0, 1);
    bad.set(1, 1, 2);
    bad.set(2, 2, 4); // 1/2 = 4 = 2/4
    CHECK_FALSE(gf::is_strongly_regular(bad));

    // repeated eigenvalue: not even regular
    auto F5 = Field::gf(5, 1);
    Matrix rep(F5, 2, 2);
    rep.set(0, 0, 2);
    rep.set(1, 1, 2);
    CHECK_FALSE(gf::is_strongly_regular(rep));

    // extension-field eigenvalues: companion of x^3 + x + 1 over GF(2) has
    // order-7 eigenvalues x, x^2, x^4; all six ratios are distinct
    auto F2 = Field::gf(2, 1);
    Matrix comp(F2, 3, 3);
    comp.set(1, 0, 1);
    comp.set(2, 1, 1);
    comp.set(0, 2, 1);
    comp.set(1, 2, 1);
    CHECK(gf::is_strongly_regular(comp));

    // cube roots of unity + 1 over GF(2): ratio collision in GF(4)
    Matrix mixed(F2, 3, 3);
    mixed.set(0, 1, 1); // companion of x^2+x+1
    mixed.set(1, 0, 1);
    mixed.set(1, 1, 1);
    mixed.set(2, 2, 1);
    CHECK_FALSE(gf::is_strongly_regular(mixed));
}
