#include <chrono>
#include <cmath>
#include <stdexcept>

#include "topgen/genexp.hpp"
#include "topgen/gf/meataxe.hpp"
#include "topgen/gf/random.hpp"
#include "topgen/gf/realize.hpp"

namespace topgen::genexp {

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0)
        throw std::invalid_argument("Wilson interval needs at least one trial");
    const double z = 1.959963984540054; // 95%
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    double lo = center - half, hi = center + half;
    if (successes == 0 || lo < 0.0)
        lo = 0.0;
    if (successes == trials || hi > 1.0)
        hi = 1.0;
    return {lo, hi};
}

namespace {

gf::Matrix realize_for_experiment(const classdata::ClassSpec& spec,
                                  const gf::FieldPtr& field) {
    if (!spec.concrete_values.empty())
        return gf::representative_matrix(spec, field);
    auto values = gf::find_det_one_assignment(spec, field);
    if (values.empty())
        throw std::runtime_error("class " + classdata::to_string(spec) +
                                 " admits no determinant-one eigenvalue assignment "
                                 "over GF(" + std::to_string(field->q()) + ")");
    return gf::representative_matrix(spec, field, values);
}

} // namespace

GenerationReport estimate_generation_probability(const ExperimentConfig& config) {
    gf::FieldPtr field = gf::Field::gf(config.p, config.k);
    gf::Matrix rep_c = realize_for_experiment(config.class_c, field);
    gf::Matrix rep_d = realize_for_experiment(config.class_d, field);
    return estimate_generation_probability(config, rep_c, rep_d);
}

GenerationReport estimate_generation_probability(const ExperimentConfig& config,
                                                 const gf::Matrix& rep_c,
                                                 const gf::Matrix& rep_d) {
    if (config.mode != ExperimentMode::MonteCarlo)
        throw std::invalid_argument("estimate runs in Monte Carlo mode");
    if (config.sample_count < 1)
        throw std::invalid_argument("need at least one sample");
    if (rep_c.rows() != config.n || rep_d.rows() != config.n)
        throw std::invalid_argument("representative size does not match the config");
    if (rep_c.determinant() != 1 || rep_d.determinant() != 1)
        throw std::invalid_argument("representatives must lie in SL_n(q)");
    const auto t0 = std::chrono::steady_clock::now();

    BigInt order_big = special_linear_order(config.n, config.q());
    const bool closure_feasible = order_big <= BigInt(config.closure_cap);
    const std::uint64_t order =
        closure_feasible ? order_big.convert_to<std::uint64_t>() : 0;

    GenerationReport rep;
    rep.config = config;
    for (std::uint64_t i = 0; i < config.sample_count; ++i) {
        Rng rng(Rng::mix(config.master_seed, i));
        gf::Matrix x = gf::random_conjugate(rep_c, rng);
        gf::Matrix y = gf::random_conjugate(rep_d, rng);
        std::vector<gf::Matrix> pair{std::move(x), std::move(y)};

        gf::IrreducibilityResult ir = gf::irreducibility_test(pair, rng);
        switch (ir.verdict) {
        case gf::ModuleVerdict::Reducible:
            ++rep.reducible;
            break;
        case gf::ModuleVerdict::Inconclusive:
            ++rep.inconclusive;
            break;
        case gf::ModuleVerdict::Irreducible:
            if (closure_feasible &&
                generates_special_linear(pair, order, config.closure_cap))
                ++rep.generating;
            else
                ++rep.proper_irreducible;
            break;
        }
    }
    rep.p_hat = static_cast<double>(rep.generating) /
                static_cast<double>(config.sample_count);
    auto [lo, hi] = wilson_interval(rep.generating, config.sample_count);
    rep.ci_lo = lo;
    rep.ci_hi = hi;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

IntersectionReport verify_intersection_formula(const classdata::ClassTuple& tuple,
                                               std::uint64_t q, std::uint64_t samples,
                                               std::uint64_t seed) {
    classdata::validate(tuple);
    const int t = classdata::eigenspace_intersection_lower_bound(tuple);
    if (t < 1)
        throw std::invalid_argument(
            "the intersection bound is vacuous here (sum gamma <= n(e-1))");
    auto [p, k] = prime_power(q);
    gf::FieldPtr field = gf::Field::gf(p, k);
    const int n = tuple.n();

    // representatives plus the eigenvalue of the chosen largest eigenspace
    std::vector<gf::Matrix> reps;
    std::vector<std::uint64_t> lambdas;
    for (const auto& spec : tuple.classes) {
        std::map<std::string, std::uint64_t> values;
        if (!spec.concrete_values.empty()) {
            for (const auto& [label, str] : spec.concrete_values)
                values[label] = field->element_from_str(str);
        } else {
            values = gf::find_det_one_assignment(spec, field);
            if (values.empty())
                throw std::runtime_error("class " + classdata::to_string(spec) +
                                         " is not realizable over GF(" +
                                         std::to_string(q) + ")");
        }
        reps.push_back(gf::representative_matrix(spec, field, values));
        const int g = classdata::gamma(spec);
        for (const auto& entry : spec.profile.entries)
            if (static_cast<int>(entry.blocks.size()) == g) {
                lambdas.push_back(values.at(entry.label));
                break;
            }
    }

    IntersectionReport out;
    out.expected_lower_bound = t;
    out.samples = samples;
    out.min_dim = n;
    out.max_dim = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rng rng(Rng::mix(seed, i));
        // stacked (x_i - lambda_i I): common kernel = intersection of the
        // chosen eigenspaces
        gf::Matrix stack(field, n * tuple.e(), n);
        for (int ci = 0; ci < tuple.e(); ++ci) {
            gf::Matrix x = gf::random_conjugate(reps[static_cast<size_t>(ci)], rng);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    std::uint64_t v = x.at(a, b);
                    if (a == b)
                        v = field->sub(v, lambdas[static_cast<size_t>(ci)]);
                    stack.set(ci * n + a, b, v);
                }
        }
        const int dim = n - stack.rank();
        out.min_dim = std::min(out.min_dim, dim);
        out.max_dim = std::max(out.max_dim, dim);
        if (dim >= t)
            ++out.bound_held;
        if (dim == t)
            ++out.equality;
    }
    return out;
}

} // namespace topgen::genexp
