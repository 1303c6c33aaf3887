#include "sptri/combinatorics.hpp"

#include <string>
#include <utility>

#include "sptri/errors.hpp"

namespace sptri
{

namespace
{

std::size_t choose2(std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

std::size_t choose3(std::size_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

void check_triple(IndexTriple t, int two_n)
{
  if (!(1 <= t.a && t.a < t.b && t.b < t.c && t.c <= two_n))
    throw IndexError("triple (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                     std::to_string(t.c) + ") is not strictly increasing in 1.." +
                     std::to_string(two_n));
}

} // namespace

void check_two_n(int two_n)
{
  if (two_n < 2 || two_n % 2 != 0)
    throw InvalidDimension("ambient dimension must be even and >= 2, got " + std::to_string(two_n));
}

void check_half_n(int n)
{
  if (n < 1)
    throw InvalidDimension("half-dimension n must be >= 1, got " + std::to_string(n));
}

std::vector<IndexTriple> enumerate_triples(int two_n)
{
  check_two_n(two_n);
  std::vector<IndexTriple> out;
  out.reserve(choose3(two_n));
  for (int a = 1; a <= two_n; ++a)
    for (int b = a + 1; b <= two_n; ++b)
      for (int c = b + 1; c <= two_n; ++c)
        out.push_back({a, b, c});
  return out;
}

std::size_t rank_triple(IndexTriple t, int two_n)
{
  check_two_n(two_n);
  check_triple(t, two_n);
  std::size_t const N = two_n;
  std::size_t k = 0;
  for (int x = 1; x < t.a; ++x)
    k += choose2(N - x);
  for (int y = t.a + 1; y < t.b; ++y)
    k += N - y;
  return k + (t.c - t.b - 1);
}

IndexTriple unrank_triple(std::size_t k, int two_n)
{
  check_two_n(two_n);
  std::size_t const N = two_n;
  if (k >= choose3(N))
    throw IndexError("triple rank " + std::to_string(k) + " out of range for 2n=" +
                     std::to_string(two_n));
  int a = 1;
  while (k >= choose2(N - a)) {
    k -= choose2(N - a);
    ++a;
  }
  int b = a + 1;
  while (k >= N - b) {
    k -= N - b;
    ++b;
  }
  return {a, b, b + 1 + static_cast<int>(k)};
}

std::size_t lambda3_dim(int two_n)
{
  check_two_n(two_n);
  return choose3(two_n);
}

std::size_t sp_dim(int n)
{
  check_half_n(n);
  return static_cast<std::size_t>(n) * (2 * n + 1);
}

std::size_t lambda2_dim(int two_n)
{
  check_two_n(two_n);
  return choose2(two_n);
}

std::size_t rank_pair(IndexPair p, int two_n)
{
  check_two_n(two_n);
  if (!(1 <= p.h && p.h < p.i && p.i <= two_n))
    throw IndexError("pair (" + std::to_string(p.h) + "," + std::to_string(p.i) +
                     ") is not strictly increasing in 1.." + std::to_string(two_n));
  std::size_t k = 0;
  for (int x = 1; x < p.h; ++x)
    k += two_n - x;
  return k + (p.i - p.h - 1);
}

IndexPair unrank_pair(std::size_t k, int two_n)
{
  check_two_n(two_n);
  if (k >= choose2(two_n))
    throw IndexError("pair rank " + std::to_string(k) + " out of range");
  int h = 1;
  while (k >= static_cast<std::size_t>(two_n - h)) {
    k -= two_n - h;
    ++h;
  }
  return {h, h + 1 + static_cast<int>(k)};
}

std::vector<IndexPair> enumerate_pairs(int two_n)
{
  check_two_n(two_n);
  std::vector<IndexPair> out;
  for (int h = 1; h <= two_n; ++h)
    for (int i = h + 1; i <= two_n; ++i)
      out.push_back({h, i});
  return out;
}

TripleIndexer::TripleIndexer(int two_n)
    : two_n_(two_n), stride_(static_cast<std::size_t>(two_n) + 1),
      triples_(enumerate_triples(two_n)), table_(stride_ * stride_ * stride_, -1)
{
  for (std::size_t k = 0; k < triples_.size(); ++k) {
    auto const &t = triples_[k];
    table_[(t.a * stride_ + t.b) * stride_ + t.c] = static_cast<std::int32_t>(k);
  }
}

IndexTriple const &TripleIndexer::unrank(std::size_t k) const
{
  if (k >= triples_.size())
    throw IndexError("triple rank " + std::to_string(k) + " out of range");
  return triples_[k];
}

std::size_t TripleIndexer::rank(IndexTriple t) const
{
  check_triple(t, two_n_);
  return static_cast<std::size_t>(index_sorted(t.a, t.b, t.c));
}

int TripleIndexer::signed_index(int a, int b, int c, std::size_t &index) const
{
  if (a == b || b == c || a == c)
    return 0;
  int sign = 1;
  // three-element sorting network, tracking transpositions
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (a < 1 || c > two_n_)
    throw IndexError("index outside 1.." + std::to_string(two_n_));
  index = static_cast<std::size_t>(index_sorted(a, b, c));
  return sign;
}

} // namespace sptri
