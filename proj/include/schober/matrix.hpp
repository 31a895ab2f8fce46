#pragma once

// Dense exact matrices with deterministic Gaussian elimination.  Vectors act
// as single-column matrices.  Elimination always takes the first nonzero
// entry in column order as pivot, so bases are reproducible across runs.

#include "schober/field.hpp"

#include <optional>
#include <vector>

namespace schober {

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix col(std::size_t c) const;
    Matrix cols_slice(std::size_t from, std::size_t count) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const;

    // Kronecker product acting factorwise on pure tensors.
    Matrix tensor(const Matrix& o) const;

    std::size_t rank() const;
    // Columns form a basis of { v : M v = 0 }.
    Matrix kernel_basis() const;
    // A solution of M x = b, or nullopt when inconsistent. b may have
    // several columns; all are solved simultaneously.
    std::optional<Matrix> solve(const Matrix& b) const;
    // Column-space basis selector: indices of pivot columns under the fixed
    // elimination order.
    std::vector<std::size_t> pivot_columns() const;

    std::string str() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;

    // Row echelon form of [this | aug]; returns pivot (row, col) pairs.
    static std::vector<std::pair<std::size_t, std::size_t>> echelon(Matrix& m);
};

}  // namespace schober
