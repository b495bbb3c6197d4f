#pragma once

#include "symlie/polynomial.hpp"
#include "symlie/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symlie {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  // E_ab: a single 1 at (a, b).
  static Matrix elementary(std::size_t n, std::size_t a, std::size_t b);
  static Matrix from_rows(const std::vector<Vector>& rows);
  // Row-major flattening, as produced by flatten().
  static Matrix from_flat(std::size_t n, std::span<const Scalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector flatten() const { return data_; }
  Vector row(std::size_t r) const;

  bool is_zero() const;
  bool is_diagonal() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// Row space kept in echelon form: every stored row has a distinct pivot
// column holding 1 and zeros left of it. Rows are inserted incrementally.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the stored rows (a linear projection); the
  // result vanishes on every pivot column.
  Vector reduce(Vector v) const;
  bool in_span(const Vector& v) const;
  // Returns the new pivot column when v is independent.
  std::optional<std::size_t> insert(Vector v);

  // Reduced row echelon form, rows ordered by pivot.
  std::vector<Vector> reduced_rows() const;
  std::vector<std::size_t> pivots() const;

  // Basis of {x | row . x = 0 for every stored row}: one vector per free
  // column in ascending order, with that entry 1 and other free entries 0.
  std::vector<Vector> nullspace() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, Vector> rows_;
};

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

// Substitutes x_i -> sum_j B(i, j) * y_j in p, with y named like x.
// Throws std::invalid_argument for a singular or mis-sized B.
Polynomial change_variables(const Polynomial& p, const Matrix& b);

}  // namespace symlie
