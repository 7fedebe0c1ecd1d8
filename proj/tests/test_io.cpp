#include <doctest.h>

#include "test_util.hpp"
#include "topgen/io.hpp"

using namespace topgen;
using namespace testutil;
namespace cd = topgen::classdata;
namespace io = topgen::io;

TEST_CASE("tuple documents round-trip canonically") {
    ClassTuple t = tuple({cd::make_class(3, {{"a", {2, 1}}}, std::nullopt, {{"a", "1"}}),
                          shape(3, {{1}, {1}, {1}})});
    std::string text = io::tuple_to_json(t);
    ClassTuple back = io::parse_tuple(text);
    CHECK(back == t);
    // canonical: serializing again is byte-identical
    CHECK(io::tuple_to_json(back) == text);

    // n = 2 annotations survive
    ClassTuple t2 = tuple({cd::make_class(2, {{"a", {1}}, {"b", {1}}},
                                          cd::OrderModCenter::Involution),
                           cd::make_class(2, {{"a", {2}}}, cd::OrderModCenter::Other)});
    CHECK(io::parse_tuple(io::tuple_to_json(t2)) == t2);

    // blocks arriving in ascending order are normalized
    ClassTuple up = io::parse_tuple(R"({
        "n": 4,
        "classes": [ { "profile": [ {"label": "a", "blocks": [1, 1, 2]} ] } ]
    })");
    CHECK(up.classes[0].profile.entries[0].blocks == Partition{2, 1, 1});
}

TEST_CASE("malformed documents are rejected with diagnostics") {
    CHECK_THROWS_AS(io::parse_tuple("{"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tuple(R"({"n": 3})"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tuple(R"({"n": 3, "classes": []})"), std::invalid_argument);
    // central class: the diagnostic names the class index
    try {
        io::parse_tuple(R"({
            "n": 2,
            "classes": [ { "profile": [ {"label": "a", "blocks": [1, 1]} ] } ]
        })");
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("class 1") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_tuple(R"({
        "n": 2,
        "classes": [ { "profile": [ {"label": "a", "blocks": [2]} ],
                       "order_mod_center": "sometimes" } ]
    })"),
                    std::invalid_argument);
}

TEST_CASE("alpha table CSV") {
    std::string csv = io::alpha_table_to_csv(stabbounds::alpha_exact(3));
    CHECK(csv.find("n,d,alpha_d_upper,alpha_d_exact,d_times_alpha_d,alpha_upper,"
                   "threshold") == 0);
    CHECK(csv.find("3,2,6,6,12,12,81/4") != std::string::npos);
    CHECK(csv.find("3,3,4,4,12,12,81/4") != std::string::npos);
}

TEST_CASE("generation report CSV is stable") {
    genexp::ExperimentConfig cfg;
    cfg.n = 2;
    cfg.p = 3;
    cfg.k = 1;
    cfg.class_c = cd::make_class(2, {{"a", {2}}}, std::nullopt, {{"a", "1"}});
    cfg.class_d = cfg.class_c;
    cfg.sample_count = 50;
    cfg.master_seed = 9;
    genexp::GenerationReport r = genexp::estimate_generation_probability(cfg);
    r.wall_ms = 123.0; // must not appear in the artifact
    std::string csv = io::report_to_csv(r);
    CHECK(csv.find("123") == std::string::npos);
    CHECK(csv.find(",9\n") != std::string::npos);
    std::string json = io::report_to_json(r);
    CHECK(json.find("wall") == std::string::npos);
    // identical reports serialize identically
    genexp::GenerationReport r2 = genexp::estimate_generation_probability(cfg);
    r2.wall_ms = 77.0;
    CHECK(io::report_to_csv(r2) == csv);
}

TEST_CASE("audit report serialization") {
    ClassTuple t = tuple({shape(3, {{1}, {1}, {1}}), shape(3, {{1}, {1}, {1}})});
    auto rep = obstructions::sl3_base_case_audit(t);
    std::string json = io::audit_to_json(rep);
    CHECK(json.find("\"subgroup\": \"SO3\"") != std::string::npos);
    CHECK(json.find("\"overall_pass\": true") != std::string::npos);
    std::string table = io::audit_to_table(rep);
    CHECK(table.find("overall: pass") != std::string::npos);
}
