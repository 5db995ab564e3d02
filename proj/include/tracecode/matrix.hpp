#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tracecode/field.hpp"

namespace tracecode {

/// Dense matrix over one ground field, row-major. Zero rows are permitted
/// (a 0 x n matrix represents an empty generator set).
class Matrix {
public:
    Matrix(FieldPtr f, size_t rows, size_t cols);
    static Matrix from_rows(const FieldPtr& f, const std::vector<std::vector<FieldElement>>& rows,
                            size_t cols);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const FieldElement& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set(size_t r, size_t c, FieldElement v);
    std::vector<FieldElement> row(size_t r) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

/// Reduced row-echelon form with the deterministic pivot rule: leftmost
/// nonzero column, topmost available row.
Matrix rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Whether v lies in the row space described by an RREF matrix.
bool in_row_space(const Matrix& rref_m, const std::vector<FieldElement>& v);

/// Unique solution of A x = b for square invertible A; nullopt when the
/// system is singular or inconsistent.
std::optional<std::vector<FieldElement>> solve(const Matrix& a, const std::vector<FieldElement>& b);

/// Inverse of a square matrix; SingularBasisError if not invertible.
Matrix inverse(const Matrix& a);

}  // namespace tracecode
