#pragma once

#include <cstddef>
#include <cstdint>

#include "sptri/exact_linalg.hpp"
#include "sptri/matrix.hpp"

namespace sptri
{

/// Largest prime below 2^62. Overridable per call and through the CLI.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// Primes are restricted to (2, 2^63) so that residue sums fit a word.
bool is_valid_prime(std::uint64_t p);

/// Smallest prime strictly greater than p (used to re-draw after a
/// collision with a denominator).
std::uint64_t next_prime(std::uint64_t p);

/// Residue of q modulo p; throws PrimeCollision when p divides the denominator.
std::uint64_t reduce_mod(Rational const &q, std::uint64_t p);

/**
 * Rank of the reduction of m over the field with p elements.
 *
 * Never exceeds the rational rank. Throws PrimeCollision when p divides
 * a stored denominator and DomainError when p is not a usable prime.
 *
 * The parallel kernel streams rows into an echelon basis in batches and
 * stops once the basis spans every column; the serial kernel is plain
 * Gaussian elimination on the full matrix.
 */
std::size_t modular_rank(MatQ const &m, std::uint64_t p, Execution exec = Execution::parallel);
std::size_t modular_rank(SparseMatQ const &m, std::uint64_t p, Execution exec = Execution::parallel);

} // namespace sptri
