#include <doctest.h>

#include <algorithm>

#include "sptri/combinatorics.hpp"
#include "sptri/errors.hpp"

using namespace sptri;

TEST_CASE("enumerate_triples small dimensions")
{
  CHECK(enumerate_triples(2).empty());
  std::vector<IndexTriple> const four{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  CHECK(enumerate_triples(4) == four);
  CHECK(enumerate_triples(6).size() == 20);
}

TEST_CASE("enumerate_triples is sorted, exhaustive and duplicate-free")
{
  for (int two_n = 2; two_n <= 20; two_n += 2) {
    auto const t = enumerate_triples(two_n);
    CHECK(t.size() == lambda3_dim(two_n));
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(std::adjacent_find(t.begin(), t.end()) == t.end());
    for (auto const &[a, b, c] : t)
      CHECK((1 <= a && a < b && b < c && c <= two_n));
  }
}

TEST_CASE("invalid dimensions are rejected")
{
  CHECK_THROWS_AS(enumerate_triples(0), InvalidDimension);
  CHECK_THROWS_AS(enumerate_triples(5), InvalidDimension);
  CHECK_THROWS_AS(enumerate_triples(-4), InvalidDimension);
  CHECK_THROWS_AS(lambda3_dim(3), InvalidDimension);
  CHECK_THROWS_AS(sp_dim(0), InvalidDimension);
}

TEST_CASE("rank and unrank examples")
{
  CHECK(rank_triple({1, 2, 3}, 8) == 0);
  CHECK(unrank_triple(3, 4) == IndexTriple{2, 3, 4});
  // (2,3,4) sits after the ten triples starting with 1
  auto const six = enumerate_triples(6);
  auto const pos = std::find(six.begin(), six.end(), IndexTriple{2, 3, 4}) - six.begin();
  CHECK(pos == 10);
  CHECK(rank_triple({2, 3, 4}, 6) == static_cast<std::size_t>(pos));
}

TEST_CASE("rank/unrank round trip, exhaustive up to 2n = 20")
{
  for (int two_n = 2; two_n <= 20; two_n += 2) {
    auto const all = enumerate_triples(two_n);
    TripleIndexer const idx(two_n);
    for (std::size_t k = 0; k < all.size(); ++k) {
      REQUIRE(unrank_triple(k, two_n) == all[k]);
      REQUIRE(rank_triple(all[k], two_n) == k);
      REQUIRE(idx.rank(all[k]) == k);
      REQUIRE(idx.unrank(k) == all[k]);
    }
  }
}

TEST_CASE("rank errors")
{
  CHECK_THROWS_AS(rank_triple({2, 1, 3}, 6), IndexError);
  CHECK_THROWS_AS(rank_triple({1, 2, 7}, 6), IndexError);
  CHECK_THROWS_AS(rank_triple({0, 1, 2}, 6), IndexError);
  CHECK_THROWS_AS(unrank_triple(20, 6), IndexError);
  CHECK_THROWS_AS(unrank_triple(0, 2), IndexError);
}

TEST_CASE("dimension formulas")
{
  CHECK(lambda3_dim(6) == 20);
  CHECK(sp_dim(3) == 21);
  CHECK(lambda3_dim(8) == 56);
  CHECK(sp_dim(4) == 36);
  CHECK(lambda3_dim(2) == 0);
  CHECK(lambda3_dim(40) == 9880);
  CHECK(sp_dim(20) == 820);
  for (int n = 4; n <= 40; ++n)
    CHECK(lambda3_dim(2 * n) > sp_dim(n));
  CHECK(lambda3_dim(6) < sp_dim(3));
}

TEST_CASE("signed lookup of unsorted triples")
{
  TripleIndexer const idx(6);
  std::size_t k = 0;
  CHECK(idx.signed_index(1, 2, 3, k) == 1);
  CHECK(k == 0);
  CHECK(idx.signed_index(2, 1, 3, k) == -1);
  CHECK(k == 0);
  CHECK(idx.signed_index(3, 1, 2, k) == 1);
  CHECK(idx.signed_index(3, 2, 1, k) == -1);
  CHECK(idx.signed_index(2, 2, 5, k) == 0);
  CHECK(idx.index_sorted(2, 1, 3) == -1);
}

TEST_CASE("pair indexing")
{
  auto const pairs = enumerate_pairs(6);
  CHECK(pairs.size() == lambda2_dim(6));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    CHECK(rank_pair(pairs[k], 6) == k);
    CHECK(unrank_pair(k, 6) == pairs[k]);
  }
  CHECK_THROWS_AS(rank_pair({3, 3}, 6), IndexError);
}
