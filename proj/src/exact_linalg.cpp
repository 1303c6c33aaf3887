#include "sptri/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "sptri/errors.hpp"

namespace sptri
{

namespace
{

// Integer matrix in row-major order, each row the input row times the
// lcm of its denominators. Row scaling preserves rank and nullspace.
struct IntMatrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  mpz_class &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntMatrix to_integer_rows(MatQ const &m)
{
  IntMatrix out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (auto const &q : m.row(r))
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto const &q = m(r, c);
      if (sgn(q) != 0)
        out.at(r, c) = q.get_num() * (scale / q.get_den());
    }
  }
  return out;
}

struct Echelon
{
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free elimination to row echelon form, in place. Rows
// [0, rank) hold the echelon form afterwards.
Echelon bareiss_dense(IntMatrix &m, Execution exec)
{
  Echelon e;
  mpz_class prev = 1;
  std::size_t r = 0;
  bool const par = exec == Execution::parallel;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t pivot = m.rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < m.rows; ++i) {
      auto const &v = m.at(i, col);
      if (sgn(v) == 0)
        continue;
      std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
      if (pivot == m.rows || bits < best_bits) {
        pivot = i;
        best_bits = bits;
      }
    }
    if (pivot == m.rows)
      continue;
    if (pivot != r)
      for (std::size_t c = col; c < m.cols; ++c)
        std::swap(m.at(pivot, c), m.at(r, c));

    mpz_srcptr p = m.at(r, col).get_mpz_t();
    mpz_srcptr d = prev.get_mpz_t();
    std::ptrdiff_t const first = static_cast<std::ptrdiff_t>(r + 1);
    std::ptrdiff_t const last = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for schedule(dynamic, 4) if (par)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      mpz_class t;
      mpz_ptr lead = m.at(i, col).get_mpz_t();
      bool const zero_lead = mpz_sgn(lead) == 0;
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        mpz_ptr x = m.at(i, c).get_mpz_t();
        mpz_mul(t.get_mpz_t(), x, p);
        if (!zero_lead)
          mpz_submul(t.get_mpz_t(), lead, m.at(r, c).get_mpz_t());
        mpz_divexact(x, t.get_mpz_t(), d);
      }
      mpz_set_ui(lead, 0);
    }
    prev = m.at(r, col);
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.rank = r;
  return e;
}

using SparseIntRow = std::vector<std::pair<std::size_t, mpz_class>>;

std::vector<SparseIntRow> to_sparse_integer_rows(SparseMatQ const &m)
{
  std::vector<SparseIntRow> rows(m.rows());
  auto const &entries = m.entries();
  std::size_t k = 0;
  while (k < entries.size()) {
    std::size_t const r = entries[k].row;
    std::size_t end = k;
    mpz_class scale = 1;
    while (end < entries.size() && entries[end].row == r) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), entries[end].value.get_den_mpz_t());
      ++end;
    }
    for (; k < end; ++k)
      rows[r].emplace_back(entries[k].col,
                           entries[k].value.get_num() * (scale / entries[k].value.get_den()));
  }
  return rows;
}

} // namespace

std::size_t bareiss_rank(MatQ const &m, Execution exec)
{
  if (m.empty())
    return 0;
  IntMatrix im = to_integer_rows(m);
  return bareiss_dense(im, exec).rank;
}

std::size_t bareiss_rank(SparseMatQ const &m, Execution exec)
{
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  if (m.density() > kDenseDensityThreshold || m.cols() < kDenseColumnThreshold)
    return bareiss_rank(m.to_dense(), exec);
  return bareiss_rank_sparse(m, exec);
}

std::size_t bareiss_rank_sparse(SparseMatQ const &m, Execution exec)
{
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  auto rows = to_sparse_integer_rows(m);
  bool const par = exec == Execution::parallel;
  mpz_class prev = 1;
  std::size_t rank = 0;
  // rows [0, rank) are finished pivot rows; the rest are live and every
  // live row has its leading column at or after the current column
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    std::size_t best_bits = 0;
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i].empty() || rows[i].front().first != col)
        continue;
      std::size_t bits = mpz_sizeinbase(rows[i].front().second.get_mpz_t(), 2);
      if (pivot == rows.size() || bits < best_bits) {
        pivot = i;
        best_bits = bits;
      }
    }
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[rank]);
    SparseIntRow const &prow = rows[rank];
    mpz_srcptr p = prow.front().second.get_mpz_t();
    mpz_srcptr d = prev.get_mpz_t();
    std::ptrdiff_t const first = static_cast<std::ptrdiff_t>(rank + 1);
    std::ptrdiff_t const last = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 8) if (par)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      SparseIntRow &row = rows[i];
      if (row.empty())
        continue;
      mpz_class t;
      if (row.front().first != col) {
        for (auto &[c, x] : row) {
          mpz_mul(t.get_mpz_t(), x.get_mpz_t(), p);
          mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), d);
        }
        continue;
      }
      mpz_class lead = std::move(row.front().second);
      SparseIntRow merged;
      merged.reserve(row.size() + prow.size());
      std::size_t x = 1, y = 1;
      while (x < row.size() || y < prow.size()) {
        std::size_t const cx = x < row.size() ? row[x].first : m.cols();
        std::size_t const cy = y < prow.size() ? prow[y].first : m.cols();
        if (cx < cy) {
          mpz_mul(t.get_mpz_t(), row[x].second.get_mpz_t(), p);
          ++x;
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d);
          merged.emplace_back(cx, std::move(t));
        } else if (cy < cx) {
          mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), prow[y].second.get_mpz_t());
          ++y;
          mpz_neg(t.get_mpz_t(), t.get_mpz_t());
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d);
          merged.emplace_back(cy, std::move(t));
        } else {
          mpz_mul(t.get_mpz_t(), row[x].second.get_mpz_t(), p);
          mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), prow[y].second.get_mpz_t());
          ++x;
          ++y;
          if (mpz_sgn(t.get_mpz_t()) == 0)
            continue;
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d);
          merged.emplace_back(cx, std::move(t));
        }
      }
      row = std::move(merged);
    }
    prev = prow.front().second;
    ++rank;
  }
  return rank;
}

std::vector<RationalVector> kernel_basis(MatQ const &m, Execution exec)
{
  std::size_t const cols = m.cols();
  std::vector<RationalVector> basis;
  Echelon e;
  IntMatrix im;
  if (!m.empty()) {
    im = to_integer_rows(m);
    e = bareiss_dense(im, exec);
  }
  if (e.rank == cols)
    return basis;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols)
    is_pivot[c] = true;

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t k = e.rank; k-- > 0;) {
      std::size_t const pc = e.pivot_cols[k];
      Rational acc = 0;
      for (std::size_t c = pc + 1; c < cols; ++c)
        if (sgn(v[c]) != 0 && sgn(im.at(k, c)) != 0)
          acc += Rational(im.at(k, c)) * v[c];
      v[pc] = -acc / Rational(im.at(k, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> kernel_basis(SparseMatQ const &m, Execution exec)
{
  return kernel_basis(m.to_dense(), exec);
}

} // namespace sptri
