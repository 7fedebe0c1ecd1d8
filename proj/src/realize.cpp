#include "topgen/gf/realize.hpp"

#include <numeric>
#include <stdexcept>

namespace topgen::gf {

using classdata::ClassSpec;

Matrix jordan_matrix(const ClassSpec& spec, const FieldPtr& field,
                     const std::map<std::string, std::uint64_t>& values) {
    classdata::validate(spec);
    Matrix m(field, spec.n, spec.n);
    int pos = 0;
    for (const auto& entry : spec.profile.entries) {
        auto it = values.find(entry.label);
        if (it == values.end())
            throw std::invalid_argument("no eigenvalue assigned to label '" +
                                        entry.label + "'");
        const std::uint64_t lam = it->second;
        for (int b : entry.blocks) {
            for (int i = 0; i < b; ++i) {
                m.set(pos + i, pos + i, lam);
                if (i + 1 < b)
                    m.set(pos + i, pos + i + 1, 1);
            }
            pos += b;
        }
    }
    return m;
}

Matrix representative_matrix(const ClassSpec& spec, const FieldPtr& field,
                             const std::map<std::string, std::uint64_t>& values) {
    classdata::validate(spec);
    // distinct nonzero eigenvalues
    for (const auto& e : spec.profile.entries) {
        auto it = values.find(e.label);
        if (it == values.end())
            throw std::invalid_argument("label '" + e.label + "' has no value");
        if (it->second == 0)
            throw std::invalid_argument("eigenvalue 0 is not invertible");
        if (it->second >= field->q())
            throw std::invalid_argument("eigenvalue out of field range");
    }
    for (auto a = spec.profile.entries.begin(); a != spec.profile.entries.end(); ++a)
        for (auto b = std::next(a); b != spec.profile.entries.end(); ++b)
            if (values.at(a->label) == values.at(b->label))
                throw std::invalid_argument("labels '" + a->label + "' and '" + b->label +
                                            "' share the value " +
                                            field->element_str(values.at(a->label)));
    // det = prod over labels of lambda^(total block size)
    std::uint64_t det = 1;
    for (const auto& e : spec.profile.entries) {
        int sz = std::accumulate(e.blocks.begin(), e.blocks.end(), 0);
        det = field->mul(det, field->pow(values.at(e.label), static_cast<std::uint64_t>(sz)));
    }
    if (det != 1)
        throw std::invalid_argument(
            "representative has determinant " + field->element_str(det) +
            ", not 1; rescaling all eigenvalues by a scalar c with c^" +
            std::to_string(spec.n) + " = (" + field->element_str(det) +
            ")^-1 would repair it, if such c exists in the field");
    return jordan_matrix(spec, field, values);
}

Matrix representative_matrix(const ClassSpec& spec, const FieldPtr& field) {
    std::map<std::string, std::uint64_t> values;
    for (const auto& [label, str] : spec.concrete_values)
        values[label] = field->element_from_str(str);
    return representative_matrix(spec, field, values);
}

std::map<std::string, std::uint64_t> find_det_one_assignment(const ClassSpec& spec,
                                                             const FieldPtr& field) {
    classdata::validate(spec);
    const size_t L = spec.profile.entries.size();
    if (L > field->q() - 1)
        return {};
    std::vector<int> sizes;
    sizes.reserve(L);
    for (const auto& e : spec.profile.entries)
        sizes.push_back(std::accumulate(e.blocks.begin(), e.blocks.end(), 0));

    // lexicographically first injective assignment of nonzero values with
    // determinant one
    std::vector<std::uint64_t> pick(L, 0);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == L) {
            std::uint64_t det = 1;
            for (size_t j = 0; j < L; ++j)
                det = field->mul(det,
                                 field->pow(pick[j], static_cast<std::uint64_t>(sizes[j])));
            return det == 1;
        }
        for (std::uint64_t v = 1; v < field->q(); ++v) {
            bool dup = false;
            for (size_t j = 0; j < i; ++j)
                dup |= (pick[j] == v);
            if (dup)
                continue;
            pick[i] = v;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    if (!rec(rec, 0))
        return {};
    std::map<std::string, std::uint64_t> out;
    for (size_t i = 0; i < L; ++i)
        out[spec.profile.entries[i].label] = pick[i];
    return out;
}

} // namespace topgen::gf
