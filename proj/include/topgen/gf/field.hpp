// Explicitly constructed finite fields GF(p^k) with exact arithmetic.
//
// Elements are packed into a single 64-bit word as base-p digits
// (little-endian in the modulus basis), so a field must satisfy
// p^k <= 2^64.  The modulus is the lexicographically least monic
// irreducible of degree k, coefficients compared low degree first; this
// keeps every field reproducible without external constant tables.
// Fields with at most 256 elements precompute full multiplication and
// inverse tables.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace topgen::gf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
public:
    // Construct GF(p^k).  p must be a prime below 2^16; k in [1, 16] for
    // the public constructor.  Splitting-field work may need larger k;
    // gf_internal allows any k with p^k <= 2^64.
    static FieldPtr gf(std::uint64_t p, unsigned k);
    static FieldPtr gf_internal(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t q() const { return q_; }
    // Monic modulus, k+1 coefficients, low degree first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

    // Raw element arithmetic on packed representatives in [0, q).
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const; // throws on zero
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // The prime-subfield element c (0 <= c < p) as a field element, and
    // integer reduction mod p for convenience.
    std::uint64_t from_int(std::uint64_t c) const { return c % p_; }
    // The canonical generator x of the polynomial basis (equals p when
    // k > 1; for k = 1 this is 0, the root of the degree-1 modulus x).
    std::uint64_t generator() const { return k_ > 1 ? p_ : 0; }

    // Packed <-> coefficient vector (little-endian, length k).
    std::vector<std::uint32_t> unpack(std::uint64_t a) const;
    std::uint64_t pack(const std::vector<std::uint32_t>& coeffs) const;

    std::string element_str(std::uint64_t a) const;          // "c0,c1,..."
    std::uint64_t element_from_str(const std::string& s) const;

    // Bytes per element in the canonical fixed-width encoding.
    unsigned encoded_width() const { return width_; }

private:
    Field() = default;
    static FieldPtr make(std::uint64_t p, unsigned k, bool internal);

    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t q_ = 0;
    unsigned width_ = 1;
    std::vector<std::uint32_t> modulus_;
    // q <= 256: full tables (packed reps are dense in [0, q))
    bool tabled_ = false;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> inv_table_;
};

// Convenience value type carrying its field; useful for call sites where
// operator syntax is clearer than raw packed words.
struct FieldElement {
    FieldPtr field;
    std::uint64_t rep = 0;

    FieldElement operator+(const FieldElement& o) const { return {field, field->add(rep, o.rep)}; }
    FieldElement operator-(const FieldElement& o) const { return {field, field->sub(rep, o.rep)}; }
    FieldElement operator*(const FieldElement& o) const { return {field, field->mul(rep, o.rep)}; }
    FieldElement inverse() const { return {field, field->inv(rep)}; }
    FieldElement pow(std::uint64_t e) const { return {field, field->pow(rep, e)}; }
    bool operator==(const FieldElement& o) const { return rep == o.rep && field->same(*o.field); }
    bool is_zero() const { return rep == 0; }
};

} // namespace topgen::gf
