#include "topgen/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace topgen::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

classdata::ClassSpec parse_class(int n, const json& jc) {
    if (!jc.contains("profile") || !jc["profile"].is_array())
        throw std::invalid_argument("class entry needs a 'profile' array");
    std::vector<classdata::LabeledBlocks> entries;
    for (const auto& je : jc["profile"]) {
        classdata::LabeledBlocks lb;
        lb.label = je.at("label").get<std::string>();
        for (const auto& b : je.at("blocks"))
            lb.blocks.push_back(b.get<int>());
        entries.push_back(std::move(lb));
    }
    std::optional<classdata::OrderModCenter> omc;
    if (jc.contains("order_mod_center")) {
        std::string s = jc["order_mod_center"].get<std::string>();
        if (s == "involution")
            omc = classdata::OrderModCenter::Involution;
        else if (s == "other")
            omc = classdata::OrderModCenter::Other;
        else
            throw std::invalid_argument("order_mod_center must be 'involution' or 'other'");
    }
    std::map<std::string, std::string> values;
    if (jc.contains("values"))
        for (const auto& [label, v] : jc["values"].items())
            values[label] = v.get<std::string>();
    return classdata::make_class(n, std::move(entries), omc, std::move(values));
}

} // namespace

classdata::ClassTuple parse_tuple(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed spec document: ") + e.what());
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("spec document needs an integer field 'n'");
    if (!doc.contains("classes") || !doc["classes"].is_array() || doc["classes"].empty())
        throw std::invalid_argument("spec document needs a non-empty 'classes' list");
    const int n = doc["n"].get<int>();
    std::vector<classdata::ClassSpec> classes;
    for (size_t i = 0; i < doc["classes"].size(); ++i) {
        try {
            classes.push_back(parse_class(n, doc["classes"][i]));
        } catch (const std::exception& e) {
            throw std::invalid_argument("class " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return classdata::make_tuple(std::move(classes));
}

classdata::ClassTuple load_tuple(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tuple(ss.str());
}

std::string tuple_to_json(const classdata::ClassTuple& tuple) {
    ordered_json doc;
    doc["n"] = tuple.n();
    doc["classes"] = ordered_json::array();
    for (const auto& c : tuple.classes) {
        ordered_json jc;
        jc["profile"] = ordered_json::array();
        for (const auto& e : c.profile.entries) {
            ordered_json je;
            je["label"] = e.label;
            je["blocks"] = e.blocks;
            jc["profile"].push_back(std::move(je));
        }
        if (c.order_mod_center)
            jc["order_mod_center"] =
                *c.order_mod_center == classdata::OrderModCenter::Involution ? "involution"
                                                                             : "other";
        if (!c.concrete_values.empty()) {
            ordered_json jv;
            for (const auto& [label, v] : c.concrete_values)
                jv[label] = v;
            jc["values"] = std::move(jv);
        }
        doc["classes"].push_back(std::move(jc));
    }
    return doc.dump(2) + "\n";
}

std::string audit_to_json(const obstructions::AuditReport& report) {
    ordered_json doc;
    doc["cases"] = ordered_json::array();
    for (const auto& c : report.cases) {
        ordered_json jc;
        jc["subgroup"] = c.subgroup;
        jc["dim_coset"] = c.dim_coset;
        jc["cap_sum"] = c.cap_sum;
        jc["dim_omega"] = c.dim_omega;
        jc["strict_pass"] = c.strict_pass;
        doc["cases"].push_back(std::move(jc));
    }
    doc["overall_pass"] = report.overall_pass;
    return doc.dump(2) + "\n";
}

std::string audit_to_table(const obstructions::AuditReport& report) {
    std::ostringstream out;
    out << "subgroup            dim_coset  cap_sum  dim_omega  strict\n";
    for (const auto& c : report.cases) {
        char line[128];
        std::snprintf(line, sizeof line, "%-18s  %9d  %7d  %9d  %s\n", c.subgroup.c_str(),
                      c.dim_coset, c.cap_sum, c.dim_omega, c.strict_pass ? "pass" : "FAIL");
        out << line;
    }
    out << "overall: " << (report.overall_pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

std::string alpha_table_to_csv(const stabbounds::AlphaTable& table) {
    std::ostringstream out;
    out << "n,d,alpha_d_upper,alpha_d_exact,d_times_alpha_d,alpha_upper,threshold\n";
    for (const auto& row : table.rows) {
        out << table.n << ',' << row.d << ',' << row.alpha_d_upper << ',';
        if (row.alpha_d_exact)
            out << *row.alpha_d_exact;
        out << ',' << row.d * row.alpha_d_upper << ',' << table.alpha_upper << ','
            << table.threshold.str() << '\n';
    }
    return out.str();
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

namespace {

std::string shapes_field(const genexp::GenerationReport& r) {
    // CSV-safe: no commas
    return classdata::to_string(r.config.class_c) + " x " +
           classdata::to_string(r.config.class_d);
}

} // namespace

std::string report_to_csv(const genexp::GenerationReport& r) {
    std::ostringstream out;
    out << "n,p,k,r,s,shapes,samples,generating,reducible,proper_irreducible,"
           "inconclusive,p_hat,ci_lo,ci_hi,seed\n";
    std::string shapes = shapes_field(r);
    for (auto& ch : shapes)
        if (ch == ',')
            ch = ';';
    out << r.config.n << ',' << r.config.p << ',' << r.config.k << ','
        << (r.config.r ? std::to_string(*r.config.r) : "") << ','
        << (r.config.s ? std::to_string(*r.config.s) : "") << ',' << shapes << ','
        << r.config.sample_count << ',' << r.generating << ',' << r.reducible << ','
        << r.proper_irreducible << ',' << r.inconclusive << ','
        << format_probability(r.p_hat) << ',' << format_probability(r.ci_lo) << ','
        << format_probability(r.ci_hi) << ',' << r.config.master_seed << '\n';
    return out.str();
}

std::string report_to_json(const genexp::GenerationReport& r) {
    ordered_json doc;
    doc["n"] = r.config.n;
    doc["p"] = r.config.p;
    doc["k"] = r.config.k;
    if (r.config.r)
        doc["r"] = *r.config.r;
    if (r.config.s)
        doc["s"] = *r.config.s;
    doc["class_c"] = classdata::to_string(r.config.class_c);
    doc["class_d"] = classdata::to_string(r.config.class_d);
    doc["samples"] = r.config.sample_count;
    doc["generating"] = r.generating;
    doc["reducible"] = r.reducible;
    doc["proper_irreducible"] = r.proper_irreducible;
    doc["inconclusive"] = r.inconclusive;
    doc["p_hat"] = format_probability(r.p_hat);
    doc["ci_lo"] = format_probability(r.ci_lo);
    doc["ci_hi"] = format_probability(r.ci_hi);
    doc["seed"] = r.config.master_seed;
    doc["closure_cap"] = r.config.closure_cap;
    return doc.dump(2) + "\n";
}

std::string good_bad_to_json(const genexp::GoodBadReport& rep) {
    ordered_json doc;
    auto shapes_json = [](const std::vector<genexp::ClassShape>& shapes) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : shapes) {
            ordered_json js;
            js["shape"] = s.str();
            js["gamma"] = s.gamma_over_closure;
            js["dim"] = s.class_dimension;
            js["quadratic"] = s.quadratic;
            arr.push_back(std::move(js));
        }
        return arr;
    };
    doc["shapes_r"] = shapes_json(rep.shapes_r);
    doc["shapes_s"] = shapes_json(rep.shapes_s);
    doc["pairs"] = ordered_json::array();
    for (const auto& v : rep.pairs) {
        ordered_json jp;
        jp["r_index"] = v.index_r;
        jp["s_index"] = v.index_s;
        jp["generating"] = v.generating;
        jp["dim_omega"] = v.dim_omega;
        doc["pairs"].push_back(std::move(jp));
    }
    doc["max_bad_dim"] = rep.max_bad_dim;
    doc["good_exists"] = rep.good_exists;
    if (rep.best_good) {
        doc["best_good"] = ordered_json();
        doc["best_good"]["r_index"] = rep.best_good->index_r;
        doc["best_good"]["s_index"] = rep.best_good->index_s;
        doc["best_good"]["dim_omega"] = rep.best_good->dim_omega;
    }
    return doc.dump(2) + "\n";
}

std::string good_bad_to_table(const genexp::GoodBadReport& rep) {
    std::ostringstream out;
    out << "order-r shapes:\n";
    for (size_t i = 0; i < rep.shapes_r.size(); ++i)
        out << "  [" << i << "] " << rep.shapes_r[i].str()
            << "  gamma=" << rep.shapes_r[i].gamma_over_closure
            << " dim=" << rep.shapes_r[i].class_dimension
            << (rep.shapes_r[i].quadratic ? " quadratic" : "") << "\n";
    out << "order-s shapes:\n";
    for (size_t i = 0; i < rep.shapes_s.size(); ++i)
        out << "  [" << i << "] " << rep.shapes_s[i].str()
            << "  gamma=" << rep.shapes_s[i].gamma_over_closure
            << " dim=" << rep.shapes_s[i].class_dimension
            << (rep.shapes_s[i].quadratic ? " quadratic" : "") << "\n";
    int bad = 0;
    for (const auto& v : rep.pairs)
        if (!v.generating)
            ++bad;
    out << "pairs: " << rep.pairs.size() << " (" << bad << " bad), max bad dim "
        << rep.max_bad_dim << "\n";
    out << "good pair exists: " << (rep.good_exists ? "yes" : "NO") << "\n";
    if (rep.best_good)
        out << "best good pair: r[" << rep.best_good->index_r << "] x s["
            << rep.best_good->index_s << "], dim " << rep.best_good->dim_omega << "\n";
    return out.str();
}

std::string shapes_to_table(const std::vector<genexp::ClassShape>& shapes) {
    std::ostringstream out;
    out << "shape                 gamma  dim  quadratic  realizable\n";
    for (const auto& s : shapes) {
        char line[160];
        std::snprintf(line, sizeof line, "%-20s  %5d  %3d  %-9s  %s\n", s.str().c_str(),
                      s.gamma_over_closure, s.class_dimension, s.quadratic ? "yes" : "no",
                      s.realizable ? "yes" : "no");
        out << line;
    }
    return out.str();
}

} // namespace topgen::io
