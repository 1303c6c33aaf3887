#include "sptri/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sptri/errors.hpp"

namespace sptri
{

MatQ::MatQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
  if (entries_.size() != rows_ * cols_)
    throw ShapeError("entry count " + std::to_string(entries_.size()) + " does not match " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
}

MatQ MatQ::identity(std::size_t n)
{
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(std::vector<std::vector<long>> const &rows)
{
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  MatQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw ShapeError("ragged row list");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

bool MatQ::is_zero() const
{
  return std::all_of(entries_.begin(), entries_.end(), [](Rational const &q) { return sgn(q) == 0; });
}

namespace
{

void require_same_shape(MatQ const &x, MatQ const &y)
{
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw ShapeError("matrix shapes differ");
}

} // namespace

MatQ operator+(MatQ const &x, MatQ const &y)
{
  require_same_shape(x, y);
  MatQ out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r, c) = x(r, c) + y(r, c);
  return out;
}

MatQ operator-(MatQ const &x, MatQ const &y)
{
  require_same_shape(x, y);
  MatQ out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r, c) = x(r, c) - y(r, c);
  return out;
}

MatQ operator-(MatQ const &x)
{
  MatQ out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r, c) = -x(r, c);
  return out;
}

MatQ operator*(MatQ const &x, MatQ const &y)
{
  if (x.cols() != y.rows())
    throw ShapeError("inner dimensions differ in matrix product");
  MatQ out(x.rows(), y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (sgn(x(r, k)) == 0)
        continue;
      for (std::size_t c = 0; c < y.cols(); ++c)
        if (sgn(y(k, c)) != 0)
          out(r, c) += x(r, k) * y(k, c);
    }
  return out;
}

MatQ operator*(Rational const &s, MatQ const &x)
{
  MatQ out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r, c) = s * x(r, c);
  return out;
}

std::vector<Rational> operator*(MatQ const &m, std::span<Rational const> v)
{
  if (m.cols() != v.size())
    throw ShapeError("matrix-vector dimension mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0 && sgn(v[c]) != 0)
        out[r] += m(r, c) * v[c];
  return out;
}

MatQ transpose(MatQ const &m)
{
  MatQ out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(c, r) = m(r, c);
  return out;
}

MatQ inverse(MatQ const &m)
{
  if (m.rows() != m.cols())
    throw ShapeError("inverse of a non-square matrix");
  std::size_t const n = m.rows();
  MatQ work = m;
  MatQ inv = MatQ::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0)
      ++pivot;
    if (pivot == n)
      throw SingularMatrix("matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    Rational const scale = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0)
        continue;
      Rational const f = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

SparseMatQ::SparseMatQ(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols)
{
  for (auto const &e : entries)
    if (e.row >= rows_ || e.col >= cols_)
      throw IndexError("sparse entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                       ") out of range");
  std::sort(entries.begin(), entries.end(), [](Entry const &x, Entry const &y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  for (auto &e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
      if (sgn(entries_.back().value) == 0)
        entries_.pop_back();
    } else if (sgn(e.value) != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

SparseMatQ SparseMatQ::from_dense(MatQ const &m)
{
  SparseMatQ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0)
        out.entries_.push_back({r, c, m(r, c)});
  return out;
}

double SparseMatQ::density() const
{
  if (rows_ == 0 || cols_ == 0)
    return 0.0;
  return static_cast<double>(entries_.size()) / (static_cast<double>(rows_) * cols_);
}

MatQ SparseMatQ::to_dense() const
{
  MatQ out(rows_, cols_);
  for (auto const &e : entries_)
    out(e.row, e.col) = e.value;
  return out;
}

SparseMatQ SparseMatQ::transposed() const
{
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (auto const &e : entries_)
    t.push_back({e.col, e.row, e.value});
  return SparseMatQ(cols_, rows_, std::move(t));
}

bool operator==(SparseMatQ const &x, SparseMatQ const &y)
{
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_ || x.entries_.size() != y.entries_.size())
    return false;
  for (std::size_t k = 0; k < x.entries_.size(); ++k) {
    auto const &p = x.entries_[k];
    auto const &q = y.entries_[k];
    if (p.row != q.row || p.col != q.col || p.value != q.value)
      return false;
  }
  return true;
}

} // namespace sptri
