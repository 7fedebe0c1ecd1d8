// Serialization: class-spec documents (JSON with fixed key order so the
// canonical form is byte-stable), audit reports, alpha tables (CSV) and
// generation reports (CSV / JSON).
#pragma once

#include <string>

#include "topgen/classdata.hpp"
#include "topgen/genexp.hpp"
#include "topgen/obstructions.hpp"
#include "topgen/stabbounds.hpp"

namespace topgen::io {

// Class-spec document:
// {
//   "n": 3,
//   "classes": [
//     { "profile": [ {"label": "a", "blocks": [2, 1]} ],
//       "order_mod_center": "involution",      (optional)
//       "values": {"a": "1"} }                 (optional)
//   ]
// }
// Keys are emitted in that fixed order and blocks non-increasing, so
// serialization is canonical.
classdata::ClassTuple parse_tuple(const std::string& json_text);
classdata::ClassTuple load_tuple(const std::string& path);
std::string tuple_to_json(const classdata::ClassTuple& tuple);

std::string audit_to_json(const obstructions::AuditReport& report);
std::string audit_to_table(const obstructions::AuditReport& report);

// CSV: n,d,alpha_d_upper,alpha_d_exact,d_times_alpha_d,alpha_upper,threshold
std::string alpha_table_to_csv(const stabbounds::AlphaTable& table);

// CSV row (with header):
// n,p,k,r,s,shapes,samples,generating,reducible,proper_irreducible,
// inconclusive,p_hat,ci_lo,ci_hi,seed
// Wall time is deliberately not serialized: artifacts are byte-stable
// functions of the config.
std::string report_to_csv(const genexp::GenerationReport& report);
std::string report_to_json(const genexp::GenerationReport& report);

std::string good_bad_to_json(const genexp::GoodBadReport& report);
std::string good_bad_to_table(const genexp::GoodBadReport& report);

std::string shapes_to_table(const std::vector<genexp::ClassShape>& shapes);

// Fixed-precision decimal used for probabilities in artifacts.
std::string format_probability(double p);

} // namespace topgen::io
