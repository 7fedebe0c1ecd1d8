// Dense matrices over a finite field with exact elimination-based rank,
// kernel, determinant and inverse, plus the division-free characteristic
// polynomial (valid in every characteristic) and the canonical byte
// encoding used as a membership key by the group-closure search.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topgen/gf/field.hpp"
#include "topgen/gf/poly.hpp"

namespace topgen::gf {

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static Matrix identity(FieldPtr field, int n);
    static Matrix zero(FieldPtr field, int rows, int cols) { return Matrix(std::move(field), rows, cols); }

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    std::uint64_t at(int r, int c) const { return a_[idx(r, c)]; }
    void set(int r, int c, std::uint64_t v) { a_[idx(r, c)] = v; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(std::uint64_t s) const;
    Matrix transpose() const;
    Matrix pow(std::uint64_t e) const; // square only

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_identity() const;

    int rank() const;
    std::uint64_t determinant() const;              // square only
    std::optional<Matrix> inverse() const;           // nullopt when singular
    // Columns form a basis of the right kernel {v : Av = 0}.
    Matrix kernel_basis() const;

    // Canonical encoding: one byte n (= rows), then entries row-major,
    // each little-endian with the field's fixed per-element width.
    std::vector<std::uint8_t> canonical_bytes() const;
    // Packed single-word key when rows*cols elements fit 64 bits
    // (bit-packed, ceil(log2 q) bits per entry).
    static int key_bits_per_entry(const Field& f);
    std::optional<std::uint64_t> packed_key() const;
    static Matrix from_packed_key(const FieldPtr& field, int n, std::uint64_t key);

    std::string str() const;

private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }

    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> a_;
};

// Characteristic polynomial det(xI - A), monic of degree n, computed with
// a division-free recurrence so it is valid over every finite field.
Poly char_poly(const Matrix& a);

// Evaluate a polynomial at a square matrix (Horner).
Matrix eval_poly_at(const Poly& f, const Matrix& a);

} // namespace topgen::gf
