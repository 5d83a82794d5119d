#pragma once

// Dense matrices over Q with exact elimination: rank, nullspace, solving,
// inverses. Zero-dimensional matrices are valid throughout; they show up
// constantly as stalk spaces of sheaves with small support.

#include "shv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace shv {

class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  // alpha * I_r + N_r, the Jordan block monodromy matrix.
  static Matrix jordan_block(const Rational& alpha, std::size_t r);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Matrix transpose() const;
  Matrix pow(std::size_t k) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rational trace() const;

  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  Matrix column(std::size_t j) const { return submatrix(0, rows_, j, 1); }
  // Kronecker product.
  Matrix kron(const Matrix& o) const;

  std::size_t rank() const;
  // Reduced row echelon form; pivot column indices appended to *pivots.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  // Columns form a basis of the nullspace; cols() - rank() of them.
  Matrix kernel_basis() const;
  // Column space basis (subset of columns, reduced).
  Matrix image_basis() const;
  // Exact determinant (square only).
  Rational determinant() const;
  bool is_invertible() const { return is_square() && rank() == rows_; }
  Matrix inverse() const;

  // One solution X of (*this) * X = b, or nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Monic characteristic polynomial of m, low degree first (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const Matrix& m);

}  // namespace shv
