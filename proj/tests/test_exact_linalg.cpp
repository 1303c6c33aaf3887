#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sptri/errors.hpp"
#include "sptri/exact_linalg.hpp"
#include "sptri/modular.hpp"
#include "support/oracles.hpp"

using namespace sptri;

namespace
{

bool in_kernel(MatQ const &m, RationalVector const &v)
{
  auto const image = m * std::span<Rational const>(v);
  return std::all_of(image.begin(), image.end(), [](Rational const &q) { return q == 0; });
}

} // namespace

TEST_CASE("rational canonical form and text round trip")
{
  Rational const q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("10/-4") == make_rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x/2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("bareiss_rank examples")
{
  CHECK(bareiss_rank(MatQ::identity(3)) == 3);
  CHECK(bareiss_rank(MatQ::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(bareiss_rank(MatQ(0, 7)) == 0);
  CHECK(bareiss_rank(MatQ(4, 0)) == 0);
  CHECK(bareiss_rank(SparseMatQ(0, 7)) == 0);
  CHECK(bareiss_rank(MatQ(3, 3)) == 0);
}

TEST_CASE("kernel_basis examples")
{
  CHECK(kernel_basis(MatQ::identity(3)).empty());
  auto const k1 = kernel_basis(MatQ::from_rows({{1, -1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == RationalVector{1, 1});
  auto const k2 = kernel_basis(MatQ::from_rows({{1, 2}, {2, 4}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == oracle::rref_kernel(MatQ::from_rows({{1, 2}, {2, 4}}))[0]);
  CHECK(k2[0] == RationalVector{-2, 1});
  // empty conventions
  CHECK(kernel_basis(MatQ(0, 3)).size() == 3);
  CHECK(kernel_basis(MatQ(0, 0)).empty());
}

TEST_CASE("rank-nullity and kernel against the RREF oracle on random matrices")
{
  Rng rng(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t const rows = rng.uniform(1, 40), cols = rng.uniform(1, 40);
    double const zeros = rng.uniform(0, 90) / 100.0;
    MatQ m = oracle::random_matrix(rows, cols, rng, 4, zeros, trial % 2 == 0);
    // force some dependent rows
    if (rows >= 3)
      for (std::size_t c = 0; c < cols; ++c)
        m(rows - 1, c) = m(0, c) * 3 - m(1, c) / 2;
    std::size_t const r = bareiss_rank(m);
    auto const kernel = kernel_basis(m);
    REQUIRE(r == oracle::gauss_rank(m));
    REQUIRE(r + kernel.size() == cols);
    REQUIRE(kernel == oracle::rref_kernel(m));
    for (auto const &v : kernel)
      REQUIRE(in_kernel(m, v));
  }
}

TEST_CASE("serial and parallel elimination agree; sparse matches dense")
{
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t const rows = rng.uniform(20, 90), cols = rng.uniform(64, 100);
    MatQ const m = oracle::random_matrix(rows, cols, rng, 9, 0.9);
    SparseMatQ const s = SparseMatQ::from_dense(m);
    std::size_t const r = bareiss_rank(m, Execution::serial);
    CHECK(bareiss_rank(m, Execution::parallel) == r);
    CHECK(bareiss_rank_sparse(s, Execution::serial) == r);
    CHECK(bareiss_rank_sparse(s, Execution::parallel) == r);
    CHECK(bareiss_rank(s) == r);
    CHECK(kernel_basis(m, Execution::serial) == kernel_basis(m, Execution::parallel));
  }
}

TEST_CASE("rank is invariant under permutations and row scaling")
{
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t const rows = rng.uniform(2, 15), cols = rng.uniform(2, 15);
    MatQ const m = oracle::random_matrix(rows, cols, rng, 3, 0.5, true);
    std::size_t const r = bareiss_rank(m);
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    for (std::size_t i = rows; i > 1; --i)
      std::swap(rp[i - 1], rp[rng.uniform(0, i - 1)]);
    for (std::size_t i = cols; i > 1; --i)
      std::swap(cp[i - 1], cp[rng.uniform(0, i - 1)]);
    MatQ permuted(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        permuted(i, j) = m(rp[i], cp[j]);
    CHECK(bareiss_rank(permuted) == r);
    MatQ scaled = m;
    std::size_t const row = rng.uniform(0, rows - 1);
    Rational const s = make_rational(rng.uniform(1, 9) * (rng.coin() ? 1 : -1), rng.uniform(1, 7));
    for (std::size_t j = 0; j < cols; ++j)
      scaled(row, j) *= s;
    CHECK(bareiss_rank(scaled) == r);
  }
}

TEST_CASE("modular_rank examples")
{
  CHECK(modular_rank(MatQ::identity(5), 7) == 5);
  CHECK(modular_rank(MatQ::from_rows({{1, 2}, {2, 4}}), 101) == 1);
  MatQ const m = MatQ::from_rows({{7, 0}, {0, 1}});
  CHECK(modular_rank(m, 7) == 1);
  CHECK(bareiss_rank(m) == 2);
  CHECK(modular_rank(m, 7, Execution::serial) == 1);
}

TEST_CASE("modular_rank errors")
{
  MatQ m(1, 1);
  m(0, 0) = make_rational(1, 7);
  CHECK_THROWS_AS(modular_rank(m, 7), PrimeCollision);
  CHECK_THROWS_AS(modular_rank(SparseMatQ::from_dense(m), 7), PrimeCollision);
  CHECK_THROWS_AS(modular_rank(m, 8), DomainError);
  CHECK_THROWS_AS(modular_rank(m, 2), DomainError);
  CHECK(modular_rank(m, 11) == 1);
  CHECK(reduce_mod(make_rational(1, 2), 7) == 4);
  CHECK(reduce_mod(Rational(-1), 7) == 6);
  CHECK(next_prime(7) == 11);
  CHECK(is_valid_prime(kDefaultPrime));
}

TEST_CASE("modular rank bounds the exact rank and almost always equals it")
{
  Rng rng(4242);
  int agree = 0;
  int const trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    std::size_t const rows = rng.uniform(1, 25), cols = rng.uniform(1, 25);
    MatQ const m = oracle::random_matrix(rows, cols, rng, 1000, 0.4, true);
    std::size_t const exact = bareiss_rank(m);
    std::size_t const mod = modular_rank(m, kDefaultPrime);
    REQUIRE(mod <= exact);
    CHECK(modular_rank(m, kDefaultPrime, Execution::serial) == mod);
    CHECK(modular_rank(SparseMatQ::from_dense(m), kDefaultPrime) == mod);
    agree += mod == exact;
  }
  CHECK(agree >= trials * 99 / 100);
}

TEST_CASE("streamed modular rank on tall matrices matches plain elimination")
{
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    MatQ m = oracle::random_matrix(300, 70, rng, 50, 0.8);
    // rank deficiency: last 10 columns copy earlier ones
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 60; c < 70; ++c)
        m(r, c) = m(r, c - 60) + m(r, c - 59);
    std::size_t const serial = modular_rank(m, kDefaultPrime, Execution::serial);
    CHECK(serial == 60);
    CHECK(modular_rank(m, kDefaultPrime) == serial);
    CHECK(bareiss_rank(m) == serial);
  }
}

TEST_CASE("matrix basics")
{
  MatQ const a = MatQ::from_rows({{1, 2}, {3, 4}});
  MatQ const inv = inverse(a);
  CHECK(a * inv == MatQ::identity(2));
  CHECK_THROWS_AS(inverse(MatQ::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
  CHECK_THROWS_AS(MatQ::from_rows({{1, 2}}) * MatQ::from_rows({{1, 2}}), ShapeError);
  SparseMatQ const s(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, 3}});
  CHECK(s.nnz() == 1);
  CHECK_THROWS_AS(SparseMatQ(2, 2, {{2, 0, 1}}), IndexError);
  CHECK(s.transposed().transposed() == s);
}
