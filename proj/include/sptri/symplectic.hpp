#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sptri/matrix.hpp"

namespace sptri
{

/// Matrix of the standard form sum_i v^i ^ v^{n+i}: [[0, I], [-I, 0]].
MatQ standard_form(int n);

/// Half-dimension of a square 2n x 2n matrix; throws ShapeError otherwise.
int half_dimension(MatQ const &m);

/// U^T J + J U == 0, exactly.
bool is_in_sp(MatQ const &u);
/// A^T J A == J, exactly.
bool is_symplectic(MatQ const &a);

/// Element of sp(2n) as a 2n x 2n matrix [[A, B], [C, -A^T]], B and C symmetric.
class SpElement
{
public:
  /// Throws DomainError unless u lies in sp(2n).
  explicit SpElement(MatQ u);

  int n() const { return n_; }
  MatQ const &matrix() const { return u_; }

  friend bool operator==(SpElement const &, SpElement const &) = default;

private:
  MatQ u_;
  int n_;
};

/// Element of the symplectic group.
class SymplecticMatrix
{
public:
  /// Throws DomainError unless a preserves the standard form.
  explicit SymplecticMatrix(MatQ a);

  int n() const { return n_; }
  MatQ const &matrix() const { return a_; }

private:
  MatQ a_;
  int n_;
};

/**
 * Canonical basis of sp(2n), n(2n+1) elements:
 *   - E_ij - E_{n+j,n+i} for 1 <= i, j <= n, row-major;
 *   - upper block symmetric generators for i <= j;
 *   - lower block symmetric generators for i <= j.
 * Coefficient vectors with respect to this basis are the unknowns
 * u_ij (i,j <= n), u_{i,n+j} and u_{n+i,j} (i <= j), in that order.
 */
std::vector<SpElement> sp_basis(int n);

/// Position of the entry (row, col) of an sp element among the basis
/// coefficients, together with the sign relating them. 1-based indices.
struct SpSlot
{
  std::size_t index;
  int sign;
};
SpSlot sp_slot(int n, int row, int col);

/// Coefficients of u in the canonical basis; throws DomainError if u is not in sp.
std::vector<Rational> sp_coordinates(MatQ const &u);
/// Inverse of sp_coordinates.
MatQ sp_assemble(int n, std::span<Rational const> coefficients);

SpElement commutator(SpElement const &u, SpElement const &v);

/// exp(U) as the finite sum of U^k / k!; throws DomainError unless U is nilpotent.
MatQ nilpotent_exp(MatQ const &u);

/**
 * Nilpotent generators of a random word: each is [[0, S], [0, 0]] or
 * [[0, 0], [S, 0]] with S symmetric, sparse, integer entries in [-3, 3].
 */
std::vector<MatQ> nilpotent_generators(int n, std::uint64_t seed, int word_length);

/// Product exp(U_1) ... exp(U_k) of nilpotent generators.
SymplecticMatrix symplectic_word(int n, std::vector<MatQ> const &generators);

/// symplectic_word(nilpotent_generators(n, seed, word_length)).
SymplecticMatrix random_symplectic(int n, std::uint64_t seed, int word_length);

} // namespace sptri
