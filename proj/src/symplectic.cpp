#include "sptri/symplectic.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sptri/combinatorics.hpp"
#include "sptri/errors.hpp"
#include "sptri/random.hpp"

namespace sptri
{

MatQ standard_form(int n)
{
  check_half_n(n);
  MatQ j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

int half_dimension(MatQ const &m)
{
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
    throw ShapeError("expected a square 2n x 2n matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  return static_cast<int>(m.rows() / 2);
}

bool is_in_sp(MatQ const &u)
{
  MatQ const j = standard_form(half_dimension(u));
  return (transpose(u) * j + j * u).is_zero();
}

bool is_symplectic(MatQ const &a)
{
  MatQ const j = standard_form(half_dimension(a));
  return transpose(a) * j * a == j;
}

SpElement::SpElement(MatQ u) : u_(std::move(u)), n_(half_dimension(u_))
{
  if (!is_in_sp(u_))
    throw DomainError("matrix is not in the symplectic algebra");
}

SymplecticMatrix::SymplecticMatrix(MatQ a) : a_(std::move(a)), n_(half_dimension(a_))
{
  if (!is_symplectic(a_))
    throw DomainError("matrix is not symplectic");
}

namespace
{

// Row-major position of (i, j), i <= j, in the upper triangle of an n x n matrix.
std::size_t upper_index(int n, int i, int j)
{
  std::size_t k = 0;
  for (int r = 1; r < i; ++r)
    k += n - r + 1;
  return k + (j - i);
}

} // namespace

SpSlot sp_slot(int n, int row, int col)
{
  if (row < 1 || col < 1 || row > 2 * n || col > 2 * n)
    throw IndexError("sp entry (" + std::to_string(row) + "," + std::to_string(col) +
                     ") out of range");
  std::size_t const a_size = static_cast<std::size_t>(n) * n;
  std::size_t const sym_size = static_cast<std::size_t>(n) * (n + 1) / 2;
  if (row <= n && col <= n)
    return {(row - 1) * static_cast<std::size_t>(n) + (col - 1), 1};
  if (row > n && col > n) // -A^T block
    return {(col - n - 1) * static_cast<std::size_t>(n) + (row - n - 1), -1};
  if (row <= n) {
    int const i = std::min(row, col - n), j = std::max(row, col - n);
    return {a_size + upper_index(n, i, j), 1};
  }
  int const i = std::min(row - n, col), j = std::max(row - n, col);
  return {a_size + sym_size + upper_index(n, i, j), 1};
}

MatQ sp_assemble(int n, std::span<Rational const> coefficients)
{
  check_half_n(n);
  if (coefficients.size() != sp_dim(n))
    throw ShapeError("expected " + std::to_string(sp_dim(n)) + " sp coefficients");
  MatQ u(2 * n, 2 * n);
  for (int r = 1; r <= 2 * n; ++r)
    for (int c = 1; c <= 2 * n; ++c) {
      SpSlot const s = sp_slot(n, r, c);
      u(r - 1, c - 1) = s.sign > 0 ? coefficients[s.index] : Rational(-coefficients[s.index]);
    }
  return u;
}

std::vector<Rational> sp_coordinates(MatQ const &u)
{
  int const n = half_dimension(u);
  if (!is_in_sp(u))
    throw DomainError("matrix is not in the symplectic algebra");
  std::vector<Rational> coeffs(sp_dim(n));
  for (int r = 1; r <= 2 * n; ++r)
    for (int c = 1; c <= 2 * n; ++c) {
      SpSlot const s = sp_slot(n, r, c);
      if (s.sign > 0)
        coeffs[s.index] = u(r - 1, c - 1);
    }
  return coeffs;
}

std::vector<SpElement> sp_basis(int n)
{
  check_half_n(n);
  std::size_t const dim = sp_dim(n);
  std::vector<SpElement> basis;
  basis.reserve(dim);
  std::vector<Rational> unit(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    unit[k] = 1;
    basis.emplace_back(sp_assemble(n, unit));
    unit[k] = 0;
  }
  return basis;
}

SpElement commutator(SpElement const &u, SpElement const &v)
{
  if (u.n() != v.n())
    throw ShapeError("commutator of elements of different dimension");
  return SpElement(u.matrix() * v.matrix() - v.matrix() * u.matrix());
}

MatQ nilpotent_exp(MatQ const &u)
{
  if (u.rows() != u.cols())
    throw ShapeError("exp of a non-square matrix");
  std::size_t const size = u.rows();
  MatQ sum = MatQ::identity(size);
  MatQ term = MatQ::identity(size);
  for (std::size_t k = 1; k <= size; ++k) {
    term = Rational(1, k) * (term * u);
    if (term.is_zero())
      return sum;
    sum = sum + term;
  }
  throw DomainError("matrix is not nilpotent");
}

std::vector<MatQ> nilpotent_generators(int n, std::uint64_t seed, int word_length)
{
  check_half_n(n);
  if (word_length < 1)
    throw DomainError("word length must be >= 1");
  Rng rng(seed);
  std::vector<MatQ> out;
  out.reserve(word_length);
  for (int w = 0; w < word_length; ++w) {
    bool const upper = rng.coin();
    MatQ u(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (!rng.coin())
          continue;
        Rational const v(rng.uniform(-3, 3));
        std::size_t const r = upper ? i : n + i, c = upper ? n + j : j;
        std::size_t const rt = upper ? j : n + j, ct = upper ? n + i : i;
        u(r, c) = v;
        u(rt, ct) = v;
      }
    out.push_back(std::move(u));
  }
  return out;
}

SymplecticMatrix symplectic_word(int n, std::vector<MatQ> const &generators)
{
  MatQ a = MatQ::identity(2 * static_cast<std::size_t>(n));
  for (auto const &g : generators)
    a = a * nilpotent_exp(g);
  return SymplecticMatrix(std::move(a));
}

SymplecticMatrix random_symplectic(int n, std::uint64_t seed, int word_length)
{
  return symplectic_word(n, nilpotent_generators(n, seed, word_length));
}

} // namespace sptri
