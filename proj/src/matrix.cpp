#include "lkss/matrix.hpp"

namespace lkss {

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldMismatchError("hconcat of matrices over different fields");
    if (a.rows_ != b.rows_) throw InvalidParamsError("hconcat with mismatched row counts");
    Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
    for (size_t r = 0; r < a.rows_; ++r) {
        for (size_t c = 0; c < a.cols_; ++c) out.data_[r * out.cols_ + c] = a.data_[r * a.cols_ + c];
        for (size_t c = 0; c < b.cols_; ++c) out.data_[r * out.cols_ + a.cols_ + c] = b.data_[r * b.cols_ + c];
    }
    return out;
}

Matrix Matrix::select_rows(std::span<const size_t> row_ids) const {
    Matrix out(field_, row_ids.size(), cols_);
    for (size_t i = 0; i < row_ids.size(); ++i) {
        if (row_ids[i] >= rows_) throw InvalidParamsError("row selection out of range");
        for (size_t c = 0; c < cols_; ++c) out.data_[i * cols_ + c] = data_[row_ids[i] * cols_ + c];
    }
    return out;
}

size_t Matrix::rank() const {
    const uint64_t q = field_.modulus();
    std::vector<uint64_t> m = data_;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && m[pivot * cols_ + col] == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (size_t c = col; c < cols_; ++c) std::swap(m[pivot * cols_ + c], m[rank * cols_ + c]);
        }
        uint64_t pinv = inv_mod(m[rank * cols_ + col], q);
        for (size_t r = pivot + 1; r < rows_; ++r) {
            uint64_t f = m[r * cols_ + col];
            if (f == 0) continue;
            uint64_t scale = mul_mod(f, pinv, q);
            for (size_t c = col; c < cols_; ++c) {
                m[r * cols_ + c] = sub_mod(m[r * cols_ + c], mul_mod(scale, m[rank * cols_ + c], q), q);
            }
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw InvalidParamsError("inverse of a non-square matrix");
    const uint64_t q = field_.modulus();
    const size_t n = rows_;
    // Gauss-Jordan on [M | I].
    std::vector<uint64_t> m = data_;
    Matrix inv(field_, n, n);
    for (size_t i = 0; i < n; ++i) inv.data_[i * n + i] = 1 % q;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot * n + col] == 0) ++pivot;
        if (pivot == n) throw InvalidParamsError("singular matrix has no inverse");
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) {
                std::swap(m[pivot * n + c], m[col * n + c]);
                std::swap(inv.data_[pivot * n + c], inv.data_[col * n + c]);
            }
        }
        uint64_t pinv = inv_mod(m[col * n + col], q);
        for (size_t c = 0; c < n; ++c) {
            m[col * n + c] = mul_mod(m[col * n + c], pinv, q);
            inv.data_[col * n + c] = mul_mod(inv.data_[col * n + c], pinv, q);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            uint64_t f = m[r * n + col];
            if (f == 0) continue;
            for (size_t c = 0; c < n; ++c) {
                m[r * n + c] = sub_mod(m[r * n + c], mul_mod(f, m[col * n + c], q), q);
                inv.data_[r * n + c] = sub_mod(inv.data_[r * n + c], mul_mod(f, inv.data_[col * n + c], q), q);
            }
        }
    }
    return inv;
}

std::vector<FieldElement> Matrix::mul_vec(std::span<const FieldElement> x) const {
    if (x.size() != cols_) throw InvalidParamsError("matrix-vector size mismatch");
    const uint64_t q = field_.modulus();
    for (const auto& e : x) {
        if (e.modulus() != q) throw FieldMismatchError("vector entry from a different field");
    }
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (size_t c = 0; c < cols_; ++c) {
            acc = add_mod(acc, mul_mod(data_[r * cols_ + c], x[c].value(), q), q);
        }
        out.push_back(field_.element(acc));
    }
    return out;
}

}  // namespace lkss
