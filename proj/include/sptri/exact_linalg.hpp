#pragma once

#include <cstddef>
#include <vector>

#include "sptri/matrix.hpp"

namespace sptri
{

/// Sparse inputs are densified before elimination above this density.
inline constexpr double kDenseDensityThreshold = 0.20;
/// Sparse inputs with fewer columns than this are always densified.
inline constexpr std::size_t kDenseColumnThreshold = 64;

using RationalVector = std::vector<Rational>;

/// Which elimination kernel runs. Both produce identical results;
/// `serial` is the reference the parallel kernel is tested against.
enum class Execution
{
  parallel,
  serial,
};

/**
 * Exact rank over the rationals by fraction-free (Bareiss) elimination.
 *
 * Rows are first scaled to integers. The pivot in each column is the
 * nonzero candidate of least bit length. Empty matrices have rank 0.
 */
std::size_t bareiss_rank(MatQ const &m, Execution exec = Execution::parallel);
std::size_t bareiss_rank(SparseMatQ const &m, Execution exec = Execution::parallel);

/// Rank by elimination over sparse integer rows, without the densify
/// dispatch. Exposed for tests and benchmarks.
std::size_t bareiss_rank_sparse(SparseMatQ const &m, Execution exec = Execution::parallel);

/**
 * Basis of the right nullspace in reduced echelon parametrization.
 *
 * One vector per free column, in increasing column order; that vector
 * has a 1 at its free column and 0 at every other free column.
 */
std::vector<RationalVector> kernel_basis(MatQ const &m, Execution exec = Execution::parallel);
std::vector<RationalVector> kernel_basis(SparseMatQ const &m, Execution exec = Execution::parallel);

} // namespace sptri
