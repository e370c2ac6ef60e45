#include "pointmod/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "pointmod/error.hpp"

namespace pointmod {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement(field, 0)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(field, 1);
    return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = FieldElement(field, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<std::vector<FieldElement>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<FieldElement> Matrix::column(std::size_t j) const {
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "matrix-vector size mismatch");
    std::vector<FieldElement> out(rows_, FieldElement(field_, 0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator*(const FieldElement& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(unsigned exponent) const {
    if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) s += ", ";
            s += (*this)(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "block_diagonal over different fields");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    }
    return out;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        }
        FieldElement inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            FieldElement factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
            }
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
    RowEchelon e = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(m.cols(), FieldElement(f, 0));
        v[free] = FieldElement(f, 1);
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<FieldElement>> column_space_basis(const Matrix& m) {
    RowEchelon e = rref(m.transpose());
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
        std::vector<FieldElement> v;
        v.reserve(e.reduced.cols());
        for (std::size_t j = 0; j < e.reduced.cols(); ++j) v.push_back(e.reduced(r, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RowEchelon e = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1) {
        throw Error(ErrorCode::DivisionByZero, "matrix is singular");
    }
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    }
    return inv;
}

FieldElement determinant(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    FieldElement det(a.field(), 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return FieldElement(a.field(), 0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        FieldElement inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            FieldElement factor = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

}  // namespace pointmod
