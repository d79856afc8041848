#include "toriclab/matrix.hpp"

#include "toriclab/error.hpp"

namespace toriclab {

MatrixOverField::MatrixOverField(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement{0}) {}

MatrixOverField identity_matrix(const FieldSpec& field, std::size_t n) {
    MatrixOverField m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

MatrixOverField multiply(const MatrixOverField& a, const MatrixOverField& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field())) {
        throw Error(ErrorCode::dimension_mismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                       " times " + std::to_string(b.rows()) + "x" +
                                                       std::to_string(b.cols()));
    }
    const FieldSpec& f = a.field();
    MatrixOverField out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            FieldElement acc = f.zero();
            for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a.at(i, t), b.at(t, j)));
            out.set(i, j, acc);
        }
    }
    out.row_labels = a.row_labels;
    out.col_labels = b.col_labels;
    return out;
}

namespace {

// Row-reduces in place; returns the rank and the determinant factor
// (product of pivots with the sign of the row swaps).
std::pair<std::size_t, FieldElement> eliminate(MatrixOverField& m) {
    const FieldSpec& f = m.field();
    FieldElement det = f.one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) {
            det = f.zero();
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const FieldElement t = m.at(r, j);
                m.set(r, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
            det = f.neg(det);
        }
        const FieldElement p = m.at(r, c);
        det = f.mul(det, p);
        const FieldElement pinv = f.inv(p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const FieldElement factor = f.mul(m.at(i, c), pinv);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
            }
        }
        ++r;
    }
    return {r, det};
}

}  // namespace

std::size_t rank(const MatrixOverField& m) {
    MatrixOverField work = m;
    return eliminate(work).first;
}

FieldElement determinant(const MatrixOverField& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::non_square, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    MatrixOverField work = m;
    const auto [r, det] = eliminate(work);
    return r == m.rows() ? det : m.field().zero();
}

}  // namespace toriclab
