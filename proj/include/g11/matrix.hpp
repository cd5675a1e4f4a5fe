#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g11/field.hpp"

namespace g11 {

/// Dense row-major matrix over GF(p).
class Matrix {
public:
  Matrix() = default;
  Matrix(const Field& F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(const Field& F, std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(const Field& F, std::size_t n);
  /// Builds a matrix from nested integer rows; entries are reduced mod p.
  static Matrix from_rows(const Field& F, const std::vector<std::vector<long long>>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const Field& F, std::size_t rows,
                             const std::vector<std::vector<Scalar>>& cols);

  const Field& field() const { return F_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t j) const;
  const std::vector<Scalar>& data() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(Scalar c) const;
  bool is_zero() const;
  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix columns(std::size_t begin, std::size_t end) const;

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  std::string to_string() const;

private:
  Field F_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Incrementally maintained row echelon form.
///
/// Rows are reduced with delayed modular reduction (64-bit accumulators),
/// pivots are first nonzero entries. Optionally every stored row carries a
/// tracking vector recording it as a combination of the inserted rows, which
/// turns reduction into a solver.
class Echelon {
public:
  Echelon(const Field& F, std::size_t width, std::size_t track_width = 0);

  /// Inserts a row; returns true if it was independent of the current span.
  /// When tracking, `track` is the row's label (defaults to a unit vector is
  /// the caller's job).
  bool insert(std::span<const Scalar> v, std::span<const Scalar> track = {});

  struct Reduced {
    std::vector<Scalar> residual;  // v minus its projection on the span
    std::vector<Scalar> combo;     // tracked combination with v - residual = sum combo_i * label_i
    bool in_span() const;
  };
  Reduced reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return reduce(v).in_span(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Fully reduced basis, rows ordered by pivot column.
  Matrix reduced_basis() const;

private:
  void reduce_in_place(std::vector<std::uint64_t>& acc, std::vector<std::uint64_t>* tacc) const;

  Field F_;
  std::size_t width_, track_width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::vector<Scalar>> tracks_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::size_t> order_;  // indices into rows_, sorted by pivot column
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the right null space.
Matrix kernel_basis(const Matrix& m);

struct SolveResult {
  std::optional<Matrix> solution;
  std::vector<std::size_t> inconsistent_columns;
  bool ok() const { return solution.has_value(); }
};
/// Solves a * X = b column by column.
SolveResult solve(const Matrix& a, const Matrix& b);

/// Reusable solver for a * x = b with a fixed coefficient matrix.
class ColumnSpaceSolver {
public:
  explicit ColumnSpaceSolver(const Matrix& a);
  std::optional<std::vector<Scalar>> solve(std::span<const Scalar> b) const;
  std::size_t rank() const { return ech_.rank(); }

private:
  Field F_;
  std::size_t unknowns_;
  Echelon ech_;
};

/// Basis (as independent columns) of the intersection of the column spaces.
Matrix intersect_spans(const Matrix& a, const Matrix& b);
/// Independent columns spanning the same space as the columns of m.
Matrix column_basis(const Matrix& m);

}  // namespace g11
