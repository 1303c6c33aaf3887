#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sptri
{

/// Strictly increasing 1-based index triple a < b < c.
struct IndexTriple
{
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(IndexTriple const &, IndexTriple const &) = default;
  friend auto operator<=>(IndexTriple const &, IndexTriple const &) = default;
};

/// Strictly increasing 1-based index pair h < i.
struct IndexPair
{
  int h = 0;
  int i = 0;

  friend bool operator==(IndexPair const &, IndexPair const &) = default;
  friend auto operator<=>(IndexPair const &, IndexPair const &) = default;
};

void check_two_n(int two_n);
void check_half_n(int n);

std::vector<IndexTriple> enumerate_triples(int two_n);

std::size_t rank_triple(IndexTriple t, int two_n);
IndexTriple unrank_triple(std::size_t k, int two_n);

/// C(2n, 3), the dimension of the space of 3-covectors.
std::size_t lambda3_dim(int two_n);
/// n(2n+1), the dimension of the symplectic algebra.
std::size_t sp_dim(int n);
/// C(2n, 2), the number of coefficients of a 2-form.
std::size_t lambda2_dim(int two_n);

std::size_t rank_pair(IndexPair p, int two_n);
IndexPair unrank_pair(std::size_t k, int two_n);
std::vector<IndexPair> enumerate_pairs(int two_n);

/**
 * Precomputed lexicographic indexing of the triples of {1..2n}.
 *
 * Besides rank/unrank it answers signed lookups for arbitrary (possibly
 * unsorted or repeated) index triples, which is what the alternating
 * coordinate formulas need in their inner loops.
 */
class TripleIndexer
{
public:
  explicit TripleIndexer(int two_n);

  int two_n() const { return two_n_; }
  std::size_t size() const { return triples_.size(); }
  std::vector<IndexTriple> const &triples() const { return triples_; }

  IndexTriple const &unrank(std::size_t k) const;
  std::size_t rank(IndexTriple t) const;

  /// Linear index of the sorted triple (a,b,c), or -1 unless a < b < c.
  std::int32_t index_sorted(int a, int b, int c) const
  {
    return table_[(static_cast<std::size_t>(a) * stride_ + b) * stride_ + c];
  }

  /// Sorts (a,b,c) into increasing order. Returns the permutation sign
  /// and writes the linear index, or returns 0 when an index repeats.
  int signed_index(int a, int b, int c, std::size_t &index) const;

private:
  int two_n_;
  std::size_t stride_;
  std::vector<IndexTriple> triples_;
  std::vector<std::int32_t> table_;
};

} // namespace sptri
