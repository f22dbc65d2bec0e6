#pragma once

#include <cstdint>
#include <vector>

#include "tamerep/ffield.hpp"

namespace tamerep {

/// Dense square-or-rectangular matrix over a finite field.  Small and exact;
/// rows/cols stay in the low tens everywhere in this project.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, int rows, int cols);

    static Matrix identity(const FieldPtr& field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FFElem& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const FFElem& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    std::vector<FFElem> apply(const std::vector<FFElem>& v) const;

    Matrix pow(std::int64_t k) const;
    Matrix inverse() const;
    FFElem det() const;
    int rank() const;

    bool is_scalar() const;
    bool is_identity() const;

    /// Entry-wise image under a field map.
    template <typename F>
    Matrix map_entries(const FieldPtr& target, F&& fn) const {
        Matrix out(target, rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out.at(r, c) = fn(at(r, c));
        return out;
    }

private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FFElem> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<FFElem>>& rows, const FieldPtr& field);

/// Nullspace basis of an r x c matrix given as rows (solutions x with
/// rows * x = 0), each solution a length-c vector.
std::vector<std::vector<FFElem>> nullspace(std::vector<std::vector<FFElem>> rows,
                                           const FieldPtr& field, int cols);

}  // namespace tamerep
