#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lkss/field.hpp"

namespace lkss {

/// Dense row-major matrix over GF(q). Entries are stored as reduced residues.
class Matrix {
public:
    Matrix(const PrimeField& field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    FieldElement get(size_t r, size_t c) const { return field_.element(data_[r * cols_ + c]); }
    void set(size_t r, size_t c, const FieldElement& v) {
        if (v.modulus() != field_.modulus())
            throw FieldMismatchError("matrix entry from a different field");
        data_[r * cols_ + c] = v.value();
    }

    uint64_t raw(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set_raw(size_t r, size_t c, uint64_t v) { data_[r * cols_ + c] = v % field_.modulus(); }

    /// [a | b]; row counts and fields must agree.
    static Matrix hconcat(const Matrix& a, const Matrix& b);

    /// New matrix made of the given rows, in the given order.
    Matrix select_rows(std::span<const size_t> row_ids) const;

    size_t rank() const;

    /// Inverse of a square nonsingular matrix; throws on singular input.
    Matrix inverse() const;

    std::vector<FieldElement> mul_vec(std::span<const FieldElement> x) const;

private:
    PrimeField field_;
    size_t rows_, cols_;
    std::vector<uint64_t> data_;
};

}  // namespace lkss
