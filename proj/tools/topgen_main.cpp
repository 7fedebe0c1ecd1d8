// topgen: decide topological generation of SL_n by conjugacy-class
// tuples, compute the associated dimension bounds, and run exact or
// Monte Carlo generation experiments over SL_n(q).
//
// Exit status: 0 = generating / pass, 2 = obstructed / fail, 1 = error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "topgen/classdata.hpp"
#include "topgen/genexp.hpp"
#include "topgen/gf/realize.hpp"
#include "topgen/io.hpp"
#include "topgen/obstructions.hpp"
#include "topgen/oracles.hpp"
#include "topgen/stabbounds.hpp"

namespace cd = topgen::classdata;
namespace ge = topgen::genexp;
namespace io = topgen::io;
namespace ob = topgen::obstructions;
namespace sb = topgen::stabbounds;
namespace gf = topgen::gf;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;
constexpr const char* kSeedEnvVar = "TOPGEN_SEED";

std::uint64_t effective_seed(bool seed_given, std::uint64_t seed_flag) {
    if (seed_given)
        return seed_flag;
    if (const char* env = std::getenv(kSeedEnvVar))
        return std::strtoull(env, nullptr, 10);
    return kDefaultSeed;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write to " + out_path);
    out << text;
}

std::string verdict_line(const cd::Verdict& v) {
    switch (v.outcome) {
    case cd::Outcome::Generating:
        return "Generating (eigenspace-sum and quadratic-pair conditions hold)";
    case cd::Outcome::EigenspaceObstruction:
        return "EigenspaceObstruction (eigenspace-sum criterion fails), witness " +
               std::to_string(v.witness.value_or(0)) +
               ": every tuple fixes a common subspace of that dimension";
    case cd::Outcome::QuadraticPairObstruction:
        return "QuadraticPairObstruction (a pair of quadratic classes acts reducibly)";
    case cd::Outcome::SL2InvolutionObstruction:
        return "SL2InvolutionObstruction (both classes are involutions modulo the center)";
    }
    return "?";
}

// The experiment class for an element order: the maximal-dimensional
// realizable shape (shapes come in canonical order, largest first).
ge::ClassShape pick_shape(int n, std::uint64_t q, std::uint64_t r) {
    for (const auto& sh : ge::enumerate_prime_order_shapes(n, q, r))
        if (sh.realizable)
            return sh;
    throw std::runtime_error("no realizable order-" + std::to_string(r) +
                             " class in SL_" + std::to_string(n) + "(" +
                             std::to_string(q) + ")");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "topological generation of SL_n by conjugacy-class tuples:\n"
        "decision procedure, dimension bounds, and finite-field experiments"};
    app.require_subcommand(1);

    std::string spec_path, out_path, format;
    int n = 0;
    std::uint64_t q = 0, r = 0, s = 0;
    std::uint64_t samples = 500;
    std::uint64_t seed_flag = kDefaultSeed;
    bool seed_given = false;
    std::uint64_t cap = 10000000;
    int max_labels = 0;
    bool no_exact = false;
    bool quick = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the artifact to a file instead of stdout");
        cmd->add_option("--format", format, "output format (subcommand-specific)");
    };

    CLI::App* check = app.add_subcommand("check", "decide generation for a class-tuple file");
    check->add_option("--spec", spec_path, "class-tuple JSON file")->required();
    add_common(check);

    CLI::App* mingens =
        app.add_subcommand("min-gens", "minimal generator counts over all shapes of SL_n");
    mingens->add_option("--n", n, "dimension")->required();
    mingens->add_option("--max-labels", max_labels, "cap on distinct eigenvalues");
    add_common(mingens);

    CLI::App* restrict_cmd =
        app.add_subcommand("restrict", "restrict a generating tuple to dimension n-1");
    restrict_cmd->add_option("--spec", spec_path, "class-tuple JSON file")->required();
    add_common(restrict_cmd);

    CLI::App* alpha = app.add_subcommand(
        "alpha", "stabilizer-bound table: beta, alpha_d, alpha, and the 9/4 n^2 threshold");
    alpha->add_option("--n", n, "dimension")->required();
    alpha->add_flag("--no-exact", no_exact, "skip the exact shape enumeration");
    add_common(alpha);

    CLI::App* audit = app.add_subcommand(
        "audit-sl3",
        "dimension audit of a generating SL_3 tuple against every maximal subgroup class");
    audit->add_option("--spec", spec_path, "class-tuple JSON file")->required();
    add_common(audit);

    CLI::App* shapes_cmd = app.add_subcommand(
        "shapes", "order-r semisimple class shapes of SL_n(q) with dimensions");
    shapes_cmd->add_option("--n", n, "dimension")->required();
    shapes_cmd->add_option("--q", q, "field size (prime power)")->required();
    shapes_cmd->add_option("--r", r, "element order (prime, not dividing q)")->required();
    add_common(shapes_cmd);

    CLI::App* classify = app.add_subcommand(
        "classify", "good/bad classification of order-(r,s) class pairs in SL_n(q)");
    classify->add_option("--n", n, "dimension")->required();
    classify->add_option("--q", q, "field size (prime power)")->required();
    classify->add_option("--r", r, "first element order")->required();
    classify->add_option("--s", s, "second element order")->required();
    add_common(classify);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo generation-probability estimate over SL_n(q)");
    simulate->add_option("--n", n, "dimension");
    simulate->add_option("--q", q, "field size (prime power)");
    simulate->add_option("--r", r, "first element order");
    simulate->add_option("--s", s, "second element order");
    simulate->add_option("--spec", spec_path,
                         "two-class tuple file (alternative to --r/--s)");
    simulate->add_option("--samples", samples, "sample count");
    simulate->add_option("--seed", seed_flag, "master seed")
        ->each([&](const std::string&) { seed_given = true; });
    simulate->add_option("--cap", cap, "closure cap (max stored elements)");
    add_common(simulate);

    CLI::App* verify = app.add_subcommand(
        "verify-oracles", "run the independent-oracle property suite");
    verify->add_flag("--quick", quick, "smaller sample sizes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            cd::ClassTuple tuple = io::load_tuple(spec_path);
            cd::Verdict v = cd::generation_criterion(tuple);
            std::string text = verdict_line(v) + "\n";
            if (format == "json") {
                std::ostringstream j;
                j << "{\n  \"outcome\": \"" << cd::to_string(v.outcome) << "\"";
                if (v.witness)
                    j << ",\n  \"witness\": " << *v.witness;
                j << "\n}\n";
                text = j.str();
            }
            emit(text, out_path);
            return v.generating() ? 0 : 2;
        }

        if (mingens->parsed()) {
            std::ostringstream outs;
            outs << "shape,gamma,min_poly_degree,quadratic,class_dim,min_generators\n";
            for (const auto& spec : cd::enumerate_shapes(n, max_labels)) {
                std::string name = cd::to_string(spec);
                for (auto& ch : name)
                    if (ch == ',')
                        ch = ';';
                outs << name << ',' << cd::gamma(spec) << ','
                     << cd::minimal_polynomial_degree(spec) << ','
                     << (cd::is_quadratic(spec) ? 1 : 0) << ','
                     << cd::class_dimension(spec) << ',' << cd::min_generators(spec)
                     << '\n';
            }
            emit(outs.str(), out_path);
            return 0;
        }

        if (restrict_cmd->parsed()) {
            cd::ClassTuple tuple = io::load_tuple(spec_path);
            cd::ClassTuple restricted = cd::restrict_tuple(tuple);
            emit(io::tuple_to_json(restricted), out_path);
            return 0;
        }

        if (alpha->parsed()) {
            bool exact = !no_exact && n >= 3 && n <= cd::kEnumerationCap;
            sb::AlphaTable table = exact ? sb::alpha_exact(n) : sb::alpha_table(n);
            if (!sb::threshold_check(n))
                throw std::logic_error("threshold check failed"); // unreachable
            emit(io::alpha_table_to_csv(table), out_path);
            return 0;
        }

        if (audit->parsed()) {
            cd::ClassTuple tuple = io::load_tuple(spec_path);
            ob::AuditReport rep = ob::sl3_base_case_audit(tuple);
            emit(format == "json" ? io::audit_to_json(rep) : io::audit_to_table(rep),
                 out_path);
            return rep.overall_pass ? 0 : 2;
        }

        if (shapes_cmd->parsed()) {
            auto shapes = ge::enumerate_prime_order_shapes(n, q, r);
            emit(io::shapes_to_table(shapes), out_path);
            return 0;
        }

        if (classify->parsed()) {
            ge::GoodBadReport rep = ge::classify_good_bad(n, q, r, s);
            emit(format == "json" ? io::good_bad_to_json(rep) : io::good_bad_to_table(rep),
                 out_path);
            return rep.good_exists ? 0 : 2;
        }

        if (simulate->parsed()) {
            ge::ExperimentConfig cfg;
            cfg.sample_count = samples;
            cfg.master_seed = effective_seed(seed_given, seed_flag);
            cfg.closure_cap = cap;

            gf::FieldPtr field;
            gf::Matrix rep_c, rep_d;
            if (!spec_path.empty()) {
                cd::ClassTuple tuple = io::load_tuple(spec_path);
                if (tuple.e() != 2)
                    throw std::invalid_argument("simulate needs exactly two classes");
                if (q == 0)
                    throw std::invalid_argument("simulate needs --q");
                auto [p, k] = ge::prime_power(q);
                cfg.n = tuple.n();
                cfg.p = p;
                cfg.k = k;
                field = gf::Field::gf(p, k);
                cfg.class_c = tuple.classes[0];
                cfg.class_d = tuple.classes[1];
                auto realize = [&](const cd::ClassSpec& spec) {
                    if (!spec.concrete_values.empty())
                        return gf::representative_matrix(spec, field);
                    auto values = gf::find_det_one_assignment(spec, field);
                    if (values.empty())
                        throw std::runtime_error(
                            "class " + cd::to_string(spec) +
                            " has no determinant-one realization over GF(" +
                            std::to_string(q) + ")");
                    return gf::representative_matrix(spec, field, values);
                };
                rep_c = realize(cfg.class_c);
                rep_d = realize(cfg.class_d);
            } else {
                if (n == 0 || q == 0 || r == 0 || s == 0)
                    throw std::invalid_argument(
                        "simulate needs --n, --q and either --spec or both --r/--s");
                auto [p, k] = ge::prime_power(q);
                cfg.n = n;
                cfg.p = p;
                cfg.k = k;
                cfg.r = r;
                cfg.s = s;
                field = gf::Field::gf(p, k);
                ge::ClassShape shape_c = pick_shape(n, q, r);
                ge::ClassShape shape_d = pick_shape(n, q, s);
                cfg.class_c = ge::shape_to_class(shape_c);
                cfg.class_d = ge::shape_to_class(shape_d);
                rep_c = ge::shape_representative(shape_c, field);
                rep_d = ge::shape_representative(shape_d, field);
            }

            ge::GenerationReport rep =
                ge::estimate_generation_probability(cfg, rep_c, rep_d);
            std::cerr << "simulate: " << rep.config.sample_count << " samples in "
                      << rep.wall_ms << " ms (seed " << cfg.master_seed << ")\n";
            emit(format == "json" ? io::report_to_json(rep) : io::report_to_csv(rep),
                 out_path);
            return 0;
        }

        if (verify->parsed())
            return topgen::oracles::run_suite(std::cout, quick) ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
