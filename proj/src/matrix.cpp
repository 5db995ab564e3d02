#include "tracecode/matrix.hpp"

namespace tracecode {

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), entries_(rows * cols, field_->zero()) {}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<std::vector<FieldElement>>& rows,
                         size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw LengthMismatchError("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void Matrix::set(size_t r, size_t c, FieldElement v) {
    if (!v.field()->same_spec(*field_))
        throw SpecMismatchError("matrix entry belongs to a different field spec");
    entries_[r * cols_ + c] = std::move(v);
}

std::vector<FieldElement> Matrix::row(size_t r) const {
    return {entries_.begin() + static_cast<long>(r * cols_),
            entries_.begin() + static_cast<long>((r + 1) * cols_)};
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!a.field_->same_spec(*b.field_)) return false;
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.entries_ == b.entries_;
}

Matrix rref(const Matrix& m) {
    Matrix a = m;
    size_t pivot_row = 0;
    for (size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        size_t r = pivot_row;
        while (r < a.rows() && a.at(r, col).is_zero()) ++r;
        if (r == a.rows()) continue;
        if (r != pivot_row) {
            for (size_t c = 0; c < a.cols(); ++c) {
                FieldElement tmp = a.at(pivot_row, c);
                a.set(pivot_row, c, a.at(r, c));
                a.set(r, c, tmp);
            }
        }
        FieldElement inv = a.at(pivot_row, col).inverse();
        for (size_t c = 0; c < a.cols(); ++c) a.set(pivot_row, c, a.at(pivot_row, c) * inv);
        for (size_t rr = 0; rr < a.rows(); ++rr) {
            if (rr == pivot_row || a.at(rr, col).is_zero()) continue;
            FieldElement factor = a.at(rr, col);
            for (size_t c = 0; c < a.cols(); ++c)
                a.set(rr, c, a.at(rr, c) - factor * a.at(pivot_row, c));
        }
        ++pivot_row;
    }
    return a;
}

size_t rank(const Matrix& m) {
    Matrix r = rref(m);
    size_t count = 0;
    for (size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (size_t c = 0; c < r.cols() && !nonzero; ++c) nonzero = !r.at(i, c).is_zero();
        if (nonzero) ++count;
    }
    return count;
}

bool in_row_space(const Matrix& rref_m, const std::vector<FieldElement>& v) {
    if (v.size() != rref_m.cols()) throw LengthMismatchError("vector length does not match matrix");
    std::vector<FieldElement> residual = v;
    for (size_t r = 0; r < rref_m.rows(); ++r) {
        size_t lead = rref_m.cols();
        for (size_t c = 0; c < rref_m.cols(); ++c) {
            if (!rref_m.at(r, c).is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == rref_m.cols()) continue;
        if (residual[lead].is_zero()) continue;
        FieldElement factor = residual[lead];
        for (size_t c = 0; c < rref_m.cols(); ++c)
            residual[c] = residual[c] - factor * rref_m.at(r, c);
    }
    for (const auto& e : residual)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<std::vector<FieldElement>> solve(const Matrix& a, const std::vector<FieldElement>& b) {
    if (b.size() != a.rows()) throw LengthMismatchError("rhs length does not match matrix");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    Matrix red = rref(aug);
    std::vector<FieldElement> x(a.cols(), a.field()->zero());
    for (size_t r = 0; r < red.rows(); ++r) {
        size_t lead = red.cols();
        for (size_t c = 0; c < red.cols(); ++c) {
            if (!red.at(r, c).is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == red.cols()) continue;
        if (lead == a.cols()) return std::nullopt;  // inconsistent: 0 = 1 row
        x[lead] = red.at(r, a.cols());
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw SingularBasisError("only square matrices can be inverted");
    const size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, n + r, a.field()->one());
    }
    Matrix red = rref(aug);
    for (size_t i = 0; i < n; ++i) {
        if (!red.at(i, i).is_one()) throw SingularBasisError("matrix is singular");
    }
    Matrix inv(a.field(), n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv.set(r, c, red.at(r, n + c));
    return inv;
}

}  // namespace tracecode
