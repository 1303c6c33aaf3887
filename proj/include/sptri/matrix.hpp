#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sptri/rational.hpp"

namespace sptri
{

/// Dense row-major rational matrix.
class MatQ
{
public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  MatQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static MatQ identity(std::size_t n);
  /// Row-major construction from small integers, mostly for tests.
  static MatQ from_rows(std::vector<std::vector<long>> const &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Rational const &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational const> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  std::vector<Rational> const &entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(MatQ const &, MatQ const &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

MatQ operator+(MatQ const &x, MatQ const &y);
MatQ operator-(MatQ const &x, MatQ const &y);
MatQ operator-(MatQ const &x);
MatQ operator*(MatQ const &x, MatQ const &y);
MatQ operator*(Rational const &s, MatQ const &x);
std::vector<Rational> operator*(MatQ const &m, std::span<Rational const> v);

MatQ transpose(MatQ const &m);

/// Gauss-Jordan inverse over the rationals; throws SingularMatrix.
MatQ inverse(MatQ const &m);

/// Sparse rational matrix as a row-major sorted triplet list.
///
/// Invariants: entries sorted by (row, col), no duplicates, no stored zeros.
class SparseMatQ
{
public:
  struct Entry
  {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  SparseMatQ() = default;
  SparseMatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Sorts the triplets; sums duplicates and drops zeros.
  SparseMatQ(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static SparseMatQ from_dense(MatQ const &m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  double density() const;

  std::vector<Entry> const &entries() const { return entries_; }

  MatQ to_dense() const;
  SparseMatQ transposed() const;

  friend bool operator==(SparseMatQ const &x, SparseMatQ const &y);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

} // namespace sptri
