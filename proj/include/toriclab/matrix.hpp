#pragma once

// Dense matrices over a finite field, with optional row/column labels.

#include <cstddef>
#include <utility>
#include <vector>

#include "toriclab/ffield.hpp"
#include "toriclab/polytope.hpp"

namespace toriclab {

using TorusPoint = std::pair<FieldElement, FieldElement>;

class MatrixOverField {
public:
    /// Zero matrix.
    MatrixOverField(FieldSpec field, std::size_t rows, std::size_t cols);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FieldElement v) { entries_[r * cols_ + c] = v; }
    /// Row-major.
    const std::vector<FieldElement>& entries() const { return entries_; }

    /// Lattice points indexing rows (exponents), empty if unlabeled.
    std::vector<Point> row_labels;
    /// Torus points indexing columns, empty if unlabeled.
    std::vector<TorusPoint> col_labels;

    friend bool operator==(const MatrixOverField& a, const MatrixOverField& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

MatrixOverField identity_matrix(const FieldSpec& field, std::size_t n);

/// Throws dimension_mismatch if a.cols() != b.rows() or the fields differ.
MatrixOverField multiply(const MatrixOverField& a, const MatrixOverField& b);

std::size_t rank(const MatrixOverField& m);

/// Gaussian elimination; throws non_square.
FieldElement determinant(const MatrixOverField& m);

}  // namespace toriclab
