// Matrix realizations of symbolic class specs: Jordan-form representatives
// over an explicit finite field, with the determinant-one check required
// for special linear representatives.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "topgen/classdata.hpp"
#include "topgen/gf/matrix.hpp"

namespace topgen::gf {

// Block-diagonal Jordan matrix for the profile with the given eigenvalue
// assignment (label -> packed element).  No determinant condition; this is
// the raw building block (and the independent oracle path in tests).
Matrix jordan_matrix(const classdata::ClassSpec& spec, const FieldPtr& field,
                     const std::map<std::string, std::uint64_t>& values);

// Representative in SL_n: requires every label mapped to a distinct
// nonzero element (from spec.concrete_values, parsed in the given field)
// and determinant exactly one.  On determinant failure the error reports
// the offending scalar and the rescaling that would repair it.
Matrix representative_matrix(const classdata::ClassSpec& spec, const FieldPtr& field);

// Same, with an explicit assignment instead of spec.concrete_values.
Matrix representative_matrix(const classdata::ClassSpec& spec, const FieldPtr& field,
                             const std::map<std::string, std::uint64_t>& values);

// Deterministic search for a distinct-nonzero, determinant-one eigenvalue
// assignment over the field; empty map when none exists.
std::map<std::string, std::uint64_t> find_det_one_assignment(
    const classdata::ClassSpec& spec, const FieldPtr& field);

} // namespace topgen::gf
