// Dense univariate polynomials over a finite field, low degree first.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topgen/gf/field.hpp"

namespace topgen::gf {

class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<std::uint64_t> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
    static Poly constant(FieldPtr field, std::uint64_t v);
    static Poly x(FieldPtr field);
    // x - r
    static Poly linear_root(FieldPtr field, std::uint64_t r);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // zero -> -1
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(std::uint64_t s) const;
    Poly monic() const; // throws on zero

    // Quotient and remainder by a nonzero divisor.
    struct DivMod;
    DivMod divmod(const Poly& divisor) const;
    Poly operator%(const Poly& o) const;
    Poly operator/(const Poly& o) const;

    Poly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str() const; // human-readable, e.g. "x^2+x+1"

    friend Poly gcd(Poly a, Poly b); // monic gcd
    friend Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    FieldPtr field_;
    std::vector<std::uint64_t> c_;
};

struct Poly::DivMod {
    Poly quot, rem;
};

inline Poly Poly::operator%(const Poly& o) const { return divmod(o).rem; }
inline Poly Poly::operator/(const Poly& o) const { return divmod(o).quot; }

} // namespace topgen::gf
