#include "tamerep/matrix.hpp"

#include <algorithm>

namespace tamerep {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    data_.assign(static_cast<size_t>(rows_) * cols_, field_->zero());
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::Parameter, "matrix dimension mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const FFElem& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                if (o.at(k, c).is_zero()) continue;
                out.at(r, c) = out.at(r, c) + a * o.at(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c) + o.at(r, c);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c) - o.at(r, c);
    return out;
}

std::vector<FFElem> Matrix::apply(const std::vector<FFElem>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        fail(ErrorKind::Parameter, "matrix/vector dimension mismatch");
    std::vector<FFElem> out(rows_, field_->zero());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] = out[r] + at(r, c) * v[c];
    return out;
}

Matrix Matrix::pow(std::int64_t k) const {
    if (rows_ != cols_) fail(ErrorKind::Parameter, "pow of non-square matrix");
    if (k < 0) return inverse().pow(-k);
    Matrix r = identity(field_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) fail(ErrorKind::Parameter, "inverse of non-square matrix");
    const int n = rows_;
    // Gauss-Jordan on [A | I]
    std::vector<std::vector<FFElem>> aug(n);
    for (int r = 0; r < n; ++r) {
        aug[r].reserve(2 * n);
        for (int c = 0; c < n; ++c) aug[r].push_back(at(r, c));
        for (int c = 0; c < n; ++c)
            aug[r].push_back(c == r ? field_->one() : field_->zero());
    }
    auto pivots = rref(aug, field_);
    for (int r = 0; r < n; ++r)
        if (r >= static_cast<int>(pivots.size()) || pivots[r] != r)
            fail(ErrorKind::Parameter, "matrix not invertible");
    Matrix out(field_, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug[r][n + c];
    return out;
}

FFElem Matrix::det() const {
    if (rows_ != cols_) fail(ErrorKind::Parameter, "det of non-square matrix");
    const int n = rows_;
    std::vector<std::vector<FFElem>> rows(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) rows[r].push_back(at(r, c));
    FFElem d = field_->one();
    int sign = 1;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return field_->zero();
        if (piv != row) { std::swap(rows[piv], rows[row]); sign = -sign; }
        d = d * rows[row][col];
        FFElem inv = rows[row][col].inverse();
        for (int r = row + 1; r < n; ++r) {
            if (rows[r][col].is_zero()) continue;
            FFElem factor = rows[r][col] * inv;
            for (int c = col; c < n; ++c)
                rows[r][c] = rows[r][c] - factor * rows[row][c];
        }
        ++row;
    }
    if (sign < 0) d = -d;
    return d;
}

int Matrix::rank() const {
    std::vector<std::vector<FFElem>> rows(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) rows[r].push_back(at(r, c));
    return static_cast<int>(rref(rows, field_).size());
}

bool Matrix::is_scalar() const {
    if (rows_ != cols_) return false;
    const FFElem& d = at(0, 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (r == c) {
                if (at(r, c) != d) return false;
            } else if (!at(r, c).is_zero()) {
                return false;
            }
        }
    return true;
}

bool Matrix::is_identity() const {
    return is_scalar() && rows_ > 0 && at(0, 0) == field_->one();
}

std::vector<int> rref(std::vector<std::vector<FFElem>>& rows, const FieldPtr& field) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = row; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[row]);
        FFElem inv = rows[row][col].inverse();
        for (int c = col; c < ncols; ++c) rows[row][c] = rows[row][c] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == row || rows[r][col].is_zero()) continue;
            FFElem factor = rows[r][col];
            for (int c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    rows.resize(pivots.size(), std::vector<FFElem>());
    return pivots;
}

std::vector<std::vector<FFElem>> nullspace(std::vector<std::vector<FFElem>> rows,
                                           const FieldPtr& field, int cols) {
    auto pivots = rref(rows, field);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FFElem>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FFElem> v(cols, field->zero());
        v[free] = field->one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace tamerep
