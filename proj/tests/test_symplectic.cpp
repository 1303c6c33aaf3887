#include <doctest.h>

#include "sptri/combinatorics.hpp"
#include "sptri/errors.hpp"
#include "sptri/exact_linalg.hpp"
#include "sptri/symplectic.hpp"
#include "support/oracles.hpp"

using namespace sptri;

namespace
{

MatQ flatten(std::vector<SpElement> const &basis)
{
  std::size_t const width = basis.front().matrix().rows() * basis.front().matrix().cols();
  MatQ m(basis.size(), width);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t e = 0; e < width; ++e)
      m(k, e) = basis[k].matrix().entries()[e];
  return m;
}

} // namespace

TEST_CASE("standard form")
{
  for (int n = 1; n <= 4; ++n) {
    MatQ const j = standard_form(n);
    CHECK(transpose(j) == -j);
    CHECK(j * j == -MatQ::identity(2 * n));
  }
  CHECK(standard_form(2) == MatQ::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
}

TEST_CASE("sp_basis size, membership and order")
{
  auto const b1 = sp_basis(1);
  REQUIRE(b1.size() == 3);
  CHECK(b1[0].matrix() == MatQ::from_rows({{1, 0}, {0, -1}}));
  CHECK(b1[1].matrix() == MatQ::from_rows({{0, 1}, {0, 0}}));
  CHECK(b1[2].matrix() == MatQ::from_rows({{0, 0}, {1, 0}}));

  auto const b2 = sp_basis(2);
  REQUIRE(b2.size() == 10);
  for (auto const &u : b2)
    CHECK(is_in_sp(u.matrix()));
  CHECK(b2[0].matrix() == MatQ::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}}));
  // second upper generator couples (1, 4) and (2, 3)
  CHECK(b2[5].matrix() == MatQ::from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  CHECK(bareiss_rank(flatten(b2)) == 10);
  CHECK_THROWS_AS(sp_basis(0), InvalidDimension);
}

TEST_CASE("flattened basis has full rank n(2n+1) for n <= 5")
{
  for (int n = 1; n <= 5; ++n) {
    auto const basis = sp_basis(n);
    CHECK(basis.size() == sp_dim(n));
    CHECK(oracle::gauss_rank(flatten(basis)) == sp_dim(n));
  }
}

TEST_CASE("membership predicates")
{
  CHECK(is_in_sp(MatQ(4, 4)));
  CHECK(is_symplectic(MatQ::identity(4)));
  CHECK_FALSE(is_in_sp(MatQ::identity(4)));
  MatQ d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = make_rational(1, 2);
  CHECK(is_symplectic(d));
  CHECK_FALSE(is_symplectic(MatQ::from_rows({{2, 0}, {0, 1}})));
  CHECK_THROWS_AS(is_in_sp(MatQ(3, 3)), ShapeError);
  CHECK_THROWS_AS(is_symplectic(MatQ(2, 4)), ShapeError);
  CHECK_THROWS_AS(SpElement(MatQ::identity(2)), DomainError);
}

TEST_CASE("commutators")
{
  auto const b1 = sp_basis(1);
  CHECK(commutator(b1[0], b1[0]).matrix().is_zero());
  CHECK(commutator(b1[1], b1[2]).matrix() == MatQ::from_rows({{1, 0}, {0, -1}}));
  for (int n = 1; n <= 3; ++n) {
    auto const basis = sp_basis(n);
    for (auto const &u : basis)
      for (auto const &v : basis)
        CHECK(is_in_sp(commutator(u, v).matrix()));
  }
  CHECK_THROWS_AS(commutator(sp_basis(1)[0], sp_basis(2)[0]), ShapeError);
}

TEST_CASE("symmetry relations of sp entries on random combinations")
{
  Rng rng(3);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      MatQ const u = oracle::random_sp(n, rng);
      REQUIRE(is_in_sp(u));
      auto e = [&](int r, int c) { return u(r - 1, c - 1); };
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          CHECK(e(j, n + i) == e(i, n + j));
          CHECK(e(n + j, i) == e(n + i, j));
          CHECK(e(n + j, n + i) == -e(i, j));
        }
      CHECK(sp_assemble(n, sp_coordinates(u)) == u);
    }
}

TEST_CASE("sp_slot covers each unknown with the right multiplicity")
{
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> hits(sp_dim(n), 0);
    for (int r = 1; r <= 2 * n; ++r)
      for (int c = 1; c <= 2 * n; ++c)
        ++hits[sp_slot(n, r, c).index];
    for (std::size_t k = 0; k < hits.size(); ++k) {
      std::size_t const a = static_cast<std::size_t>(n) * n;
      std::size_t const sym = static_cast<std::size_t>(n) * (n + 1) / 2;
      if (k < a)
        CHECK(hits[k] == 2); // A entry and its -A^T mirror
      else {
        // diagonal symmetric entries appear once, off-diagonal twice
        std::size_t const local = (k - a) % sym;
        int row = 0, start = 0;
        while (static_cast<int>(local) >= start + (n - row)) {
          start += n - row;
          ++row;
        }
        CHECK(hits[k] == (static_cast<int>(local) == start ? 1 : 2));
      }
    }
  }
  CHECK_THROWS_AS(sp_slot(2, 0, 1), IndexError);
}

TEST_CASE("nilpotent exponentials and random symplectic matrices")
{
  CHECK(symplectic_word(2, {MatQ(4, 4), MatQ(4, 4)}).matrix() == MatQ::identity(4));
  CHECK_THROWS_AS(nilpotent_exp(MatQ::identity(2)), DomainError);
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      auto const gens = nilpotent_generators(n, seed, 4);
      for (auto const &g : gens) {
        REQUIRE(is_in_sp(g));
        REQUIRE(is_symplectic(nilpotent_exp(g)));
        for (auto const &q : g.entries())
          REQUIRE((q >= -3 && q <= 3));
      }
      MatQ const a = random_symplectic(n, seed, 4).matrix();
      REQUIRE(is_symplectic(a));
      if (n == 1)
        REQUIRE(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) == 1);
    }
  CHECK(random_symplectic(3, 11, 5).matrix() == random_symplectic(3, 11, 5).matrix());
  CHECK_THROWS_AS(random_symplectic(2, 1, 0), DomainError);
}
