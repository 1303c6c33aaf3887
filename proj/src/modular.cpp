#include "sptri/modular.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sptri/errors.hpp"

namespace sptri
{

namespace
{

using Residue = std::uint64_t;
using Row = std::vector<Residue>;

struct Field
{
  std::uint64_t p;

  Residue mul(Residue a, Residue b) const
  {
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p);
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p - b; }
  Residue pow(Residue a, std::uint64_t e) const
  {
    Residue r = 1;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Residue inv(Residue a) const { return pow(a, p - 2); }

  // row -= f * basis, over columns [from, end)
  void axpy(Row &row, Residue f, Row const &basis, std::size_t from) const
  {
    for (std::size_t c = from; c < row.size(); ++c)
      if (basis[c])
        row[c] = sub(row[c], mul(f, basis[c]));
  }
};

void check_prime(std::uint64_t p)
{
  if (!is_valid_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not a prime in (2, 2^63)");
}

struct EchelonBasis
{
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
};

// Reduces row against basis rows [begin, end) in insertion order; each
// basis row is zero at the pivots of the rows inserted before it.
void reduce(Field const &f, Row &row, EchelonBasis const &b, std::size_t begin, std::size_t end)
{
  for (std::size_t k = begin; k < end; ++k) {
    Residue const x = row[b.pivots[k]];
    if (x)
      f.axpy(row, x, b.rows[k], 0);
  }
}

bool insert(Field const &f, Row &&row, EchelonBasis &b)
{
  auto it = std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
  if (it == row.end())
    return false;
  std::size_t const pc = static_cast<std::size_t>(it - row.begin());
  Residue const s = f.inv(row[pc]);
  for (auto &x : row)
    x = f.mul(x, s);
  b.pivots.push_back(pc);
  b.rows.push_back(std::move(row));
  return true;
}

template <typename RowSource>
std::size_t streamed_rank(Field const &f, std::size_t rows, std::size_t cols, RowSource source)
{
  EchelonBasis basis;
  std::size_t const batch = 64;
  std::size_t const limit = std::min(rows, cols);
  for (std::size_t start = 0; start < rows && basis.rows.size() < limit; start += batch) {
    std::size_t const count = std::min(batch, rows - start);
    std::vector<Row> pending(count);
    std::size_t const known = basis.rows.size();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      pending[i] = source(start + i);
      reduce(f, pending[i], basis, 0, known);
    }
    for (auto &row : pending) {
      reduce(f, row, basis, known, basis.rows.size());
      insert(f, std::move(row), basis);
      if (basis.rows.size() == limit)
        break;
    }
  }
  return basis.rows.size();
}

std::size_t gaussian_rank(Field const &f, std::vector<Row> a, std::size_t cols)
{
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][col] == 0)
      ++pivot;
    if (pivot == a.size())
      continue;
    std::swap(a[pivot], a[r]);
    Residue const s = f.inv(a[r][col]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      Residue const x = a[i][col];
      if (x)
        f.axpy(a[i], f.mul(x, s), a[r], col);
    }
    ++r;
  }
  return r;
}

Row dense_row(MatQ const &m, std::size_t r, std::uint64_t p)
{
  Row out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    out[c] = reduce_mod(m(r, c), p);
  return out;
}

} // namespace

bool is_valid_prime(std::uint64_t p)
{
  if (p <= 2 || p >= (std::uint64_t{1} << 63))
    return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::uint64_t next_prime(std::uint64_t p)
{
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

std::uint64_t reduce_mod(Rational const &q, std::uint64_t p)
{
  Field const f{p};
  std::uint64_t const den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0)
    throw PrimeCollision("prime " + std::to_string(p) + " divides denominator " +
                         q.get_den().get_str());
  std::uint64_t const num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return den == 1 ? num : f.mul(num, f.inv(den));
}

std::size_t modular_rank(MatQ const &m, std::uint64_t p, Execution exec)
{
  check_prime(p);
  if (m.empty())
    return 0;
  Field const f{p};
  if (exec == Execution::serial) {
    std::vector<Row> a;
    for (std::size_t r = 0; r < m.rows(); ++r)
      a.push_back(dense_row(m, r, p));
    return gaussian_rank(f, std::move(a), m.cols());
  }
  // reduce everything up front so collisions surface before any work
  std::vector<Row> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    a[r] = dense_row(m, r, p);
  return streamed_rank(f, m.rows(), m.cols(), [&](std::size_t r) { return std::move(a[r]); });
}

std::size_t modular_rank(SparseMatQ const &m, std::uint64_t p, Execution exec)
{
  check_prime(p);
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  Field const f{p};
  // residues in row-major order plus row offsets into the entry list
  auto const &entries = m.entries();
  std::vector<Residue> residues(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    residues[k] = reduce_mod(entries[k].value, p);
  std::vector<std::size_t> offset(m.rows() + 1, 0);
  for (auto const &e : entries)
    ++offset[e.row + 1];
  for (std::size_t r = 0; r < m.rows(); ++r)
    offset[r + 1] += offset[r];
  auto row = [&](std::size_t r) {
    Row out(m.cols(), 0);
    for (std::size_t k = offset[r]; k < offset[r + 1]; ++k)
      out[entries[k].col] = residues[k];
    return out;
  };
  if (exec == Execution::serial) {
    std::vector<Row> a;
    for (std::size_t r = 0; r < m.rows(); ++r)
      a.push_back(row(r));
    return gaussian_rank(f, std::move(a), m.cols());
  }
  return streamed_rank(f, m.rows(), m.cols(), row);
}

} // namespace sptri
