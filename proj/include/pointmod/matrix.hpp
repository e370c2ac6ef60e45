#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pointmod/field.hpp"

namespace pointmod {

/// Dense row-major matrix over an exact field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<std::vector<FieldElement>>& cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<FieldElement> column(std::size_t j) const;
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    bool is_zero() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& s, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix pow(unsigned exponent) const;

    std::string to_string() const;

private:
    Field field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form; pivots are taken as the first nonzero entry
/// scanning columns left to right, rows top to bottom.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column of rref(m).
std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);

/// Canonical basis of the column space: the nonzero rows of rref(m^T).
std::vector<std::vector<FieldElement>> column_space_basis(const Matrix& m);

/// Throws Error{DivisionByZero} if m is singular.
Matrix inverse(const Matrix& m);
FieldElement determinant(const Matrix& m);

}  // namespace pointmod
