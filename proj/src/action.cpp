#include "sptri/action.hpp"

#include <array>

#include "sptri/combinatorics.hpp"
#include "sptri/errors.hpp"
#include "sptri/exact_linalg.hpp"
#include "sptri/symplectic.hpp"

namespace sptri
{

namespace
{

int check_action_shapes(MatQ const &u, Trivector const &theta)
{
  if (u.rows() != u.cols() || static_cast<int>(u.rows()) != theta.two_n())
    throw ShapeError("matrix is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                     " but the trivector lives in dimension " + std::to_string(theta.two_n()));
  return theta.two_n();
}

Rational det3(std::array<std::array<Rational, 3>, 3> const &m)
{
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Nonzero entries of each column of u: cols[h] lists (a, U_ah), 1-based.
CoefficientRows column_entries(MatQ const &u)
{
  CoefficientRows cols(u.cols() + 1);
  for (std::size_t a = 0; a < u.rows(); ++a)
    for (std::size_t h = 0; h < u.cols(); ++h)
      if (sgn(u(a, h)) != 0)
        cols[h + 1].emplace_back(static_cast<int>(a + 1), u(a, h));
  return cols;
}

Trivector act_multilinear(MatQ const &u, Trivector const &theta)
{
  TripleIndexer const index(theta.two_n());
  CoefficientRows const cols = column_entries(u);
  Trivector out(theta.two_n());
  // theta(U e_h, e_i, e_j) = sum_a U_ah theta(e_a, e_i, e_j), and
  // theta(e_a, e_b, e_c) is the signed coordinate of the sorted triple.
  auto accumulate = [&](Rational &sum, Rational const &v, int a, int b, int c) {
    std::size_t idx = 0;
    int const s = index.signed_index(a, b, c, idx);
    if (s > 0)
      sum += v * theta[idx];
    else if (s < 0)
      sum -= v * theta[idx];
  };
  for (std::size_t k = 0; k < index.size(); ++k) {
    auto const [h, i, j] = index.unrank(k);
    Rational sum = 0;
    for (auto const &[a, v] : cols[h])
      accumulate(sum, v, a, i, j);
    for (auto const &[a, v] : cols[i])
      accumulate(sum, v, h, a, j);
    for (auto const &[a, v] : cols[j])
      accumulate(sum, v, h, i, a);
    out[k] = -sum;
  }
  return out;
}

Trivector act_lemma_determinant(MatQ const &u, Trivector const &theta)
{
  TripleIndexer const index(theta.two_n());
  auto const &triples = index.triples();
  Trivector out(theta.two_n());
  // The determinant entries u_xa stand for the coefficient of v^x in the
  // image of v^a, i.e. entry (a, x) of U.
  auto coef = [&](int x, int a) -> Rational const & { return u(a - 1, x - 1); };
  auto delta = [](int x, int y) { return Rational(x == y ? 1 : 0); };

  for (std::size_t out_k = 0; out_k < triples.size(); ++out_k) {
    auto const [h, i, j] = triples[out_k];
    std::array<int, 3> const rows{h, i, j};
    auto contains = [&](int x) { return x == h || x == i || x == j; };
    Rational total = 0;
    for (std::size_t in_k = 0; in_k < triples.size(); ++in_k) {
      Rational const &y = theta[in_k];
      if (sgn(y) == 0)
        continue;
      auto const [a, b, c] = triples[in_k];
      std::array<int, 3> const cols{a, b, c};
      Rational value = 0;
      for (int replaced = 0; replaced < 3; ++replaced) {
        // the two Kronecker columns force their indices into {h, i, j}
        bool nonzero = true;
        for (int col = 0; col < 3; ++col)
          if (col != replaced && !contains(cols[col]))
            nonzero = false;
        if (!nonzero)
          continue;
        std::array<std::array<Rational, 3>, 3> m;
        for (int r = 0; r < 3; ++r)
          for (int col = 0; col < 3; ++col)
            m[r][col] = col == replaced ? coef(rows[r], cols[col]) : delta(rows[r], cols[col]);
        value -= det3(m);
      }
      if (sgn(value) != 0)
        total += value * y;
    }
    out[out_k] = total;
  }
  return out;
}

} // namespace

std::string to_string(ActionMethod m)
{
  switch (m) {
    case ActionMethod::multilinear:
      return "multilinear";
    case ActionMethod::lemma_determinant:
      return "lemma-determinant";
    case ActionMethod::expanded_coefficient:
      return "expanded-coefficient";
  }
  return "unknown";
}

ActionMethod parse_action_method(std::string const &name)
{
  if (name == "multilinear")
    return ActionMethod::multilinear;
  if (name == "lemma-determinant")
    return ActionMethod::lemma_determinant;
  if (name == "expanded-coefficient")
    return ActionMethod::expanded_coefficient;
  throw ParseError("unknown action method '" + name + "'");
}

Trivector group_act(MatQ const &a, Trivector const &theta)
{
  check_action_shapes(a, theta);
  MatQ const inv = inverse(a);
  TripleIndexer const index(theta.two_n());
  auto const &triples = index.triples();
  Trivector out(theta.two_n());
  for (std::size_t in_k = 0; in_k < triples.size(); ++in_k) {
    Rational const &y = theta[in_k];
    if (sgn(y) == 0)
      continue;
    std::array<int, 3> const src{triples[in_k].a - 1, triples[in_k].b - 1, triples[in_k].c - 1};
    for (std::size_t out_k = 0; out_k < triples.size(); ++out_k) {
      std::array<int, 3> const dst{triples[out_k].a - 1, triples[out_k].b - 1,
                                   triples[out_k].c - 1};
      std::array<std::array<Rational, 3>, 3> m;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          m[r][c] = inv(src[r], dst[c]);
      Rational const d = det3(m);
      if (sgn(d) != 0)
        out[out_k] += y * d;
    }
  }
  return out;
}

CoefficientRows coefficient_rows(MatQ const &u)
{
  int const n = half_dimension(u);
  std::vector<Rational> const unknowns = sp_coordinates(transpose(u));
  CoefficientRows rows(2 * n + 1);
  for (int x = 1; x <= 2 * n; ++x)
    for (int a = 1; a <= 2 * n; ++a) {
      SpSlot const s = sp_slot(n, x, a);
      Rational const &v = unknowns[s.index];
      if (sgn(v) != 0)
        rows[x].emplace_back(a, s.sign > 0 ? v : Rational(-v));
    }
  return rows;
}

void expanded_coefficient_act(CoefficientRows const &rows, Trivector const &theta,
                              TripleIndexer const &index, std::span<Rational> out)
{
  int const two_n = theta.two_n();
  // y_abc is a coordinate only for a < b < c; any other index pattern
  // reached by a summation range contributes nothing.
  auto y = [&](int a, int b, int c) -> Rational const * {
    if (c > two_n)
      return nullptr;
    std::int32_t const k = index.index_sorted(a, b, c);
    return k < 0 ? nullptr : &theta[k];
  };
  Rational term;
  auto add = [&](Rational &acc, Rational const &u, Rational const *v, int sign) {
    if (v == nullptr || sgn(*v) == 0)
      return;
    term = u * *v;
    if (sign > 0)
      acc += term;
    else
      acc -= term;
  };

  auto const &triples = index.triples();
  for (std::size_t k = 0; k < triples.size(); ++k) {
    int const al = triples[k].a, be = triples[k].b, ga = triples[k].c;
    Rational c = 0;
    for (auto const &[a, u] : rows[al]) {
      if (a <= be - 1)
        add(c, u, y(a, be, ga), +1);
      if (be + 1 <= a && a <= ga - 1)
        add(c, u, y(be, a, ga), -1);
      if (a >= ga + 1)
        add(c, u, y(be, ga, a), +1);
    }
    for (auto const &[a, u] : rows[be]) {
      if (a <= al - 1)
        add(c, u, y(a, al, ga), -1);
      if (al + 1 <= a && a <= ga - 1)
        add(c, u, y(al, a, ga), +1);
      if (a >= ga + 1)
        add(c, u, y(al, ga, a), -1);
    }
    for (auto const &[a, u] : rows[ga]) {
      if (a <= be - 1)
        add(c, u, y(a, al, be), +1);
      if (al + 1 <= a && a <= be - 1)
        add(c, u, y(al, a, be), -1);
      if (a >= be + 1)
        add(c, u, y(al, be, a), +1);
    }
    // c is the coefficient in -rho(U) theta
    out[k] = -c;
  }
}

Trivector infinitesimal_act(MatQ const &u, Trivector const &theta, ActionMethod method)
{
  check_action_shapes(u, theta);
  switch (method) {
    case ActionMethod::multilinear:
      return act_multilinear(u, theta);
    case ActionMethod::lemma_determinant:
      return act_lemma_determinant(u, theta);
    case ActionMethod::expanded_coefficient: {
      if (!is_in_sp(u))
        throw DomainError("the expanded-coefficient formula requires U in sp(2n)");
      TripleIndexer const index(theta.two_n());
      std::vector<Rational> coords(index.size());
      expanded_coefficient_act(coefficient_rows(u), theta, index, coords);
      return Trivector(theta.two_n(), std::move(coords));
    }
  }
  throw DomainError("unknown action method");
}

SparseMatQ rep_matrix(MatQ const &u)
{
  int const two_n = static_cast<int>(u.rows());
  check_two_n(two_n);
  if (u.cols() != u.rows())
    throw ShapeError("rep_matrix needs a square matrix");
  TripleIndexer const index(two_n);
  CoefficientRows rows(two_n + 1); // rows[a] lists (h, U_ah)
  for (int a = 1; a <= two_n; ++a)
    for (int h = 1; h <= two_n; ++h)
      if (sgn(u(a - 1, h - 1)) != 0)
        rows[a].emplace_back(h, u(a - 1, h - 1));

  std::vector<SparseMatQ::Entry> entries;
  for (std::size_t col = 0; col < index.size(); ++col) {
    auto const [a, b, c] = index.unrank(col);
    // rho(U) v^x = -sum_h U_xh v^h, applied slot by slot
    std::array<int, 3> const src{a, b, c};
    for (int slot = 0; slot < 3; ++slot)
      for (auto const &[h, v] : rows[src[slot]]) {
        std::array<int, 3> t = src;
        t[slot] = h;
        std::size_t row = 0;
        int const sign = index.signed_index(t[0], t[1], t[2], row);
        if (sign != 0)
          entries.push_back({row, col, sign > 0 ? Rational(-v) : v});
      }
  }
  return SparseMatQ(index.size(), index.size(), std::move(entries));
}

Trivector exterior_derivative_jet(Jet1TwoForm const &jet)
{
  int const two_n = jet.two_n();
  Trivector out(two_n);
  std::size_t k = 0;
  for (auto const &[a, b, c] : enumerate_triples(two_n))
    out[k++] = jet.df(b, c, a) - jet.df(a, c, b) + jet.df(a, b, c);
  return out;
}

namespace
{

Rational minor2(MatQ const &a, int h, int i, int j, int k)
{
  return a(h - 1, j - 1) * a(i - 1, k - 1) - a(h - 1, k - 1) * a(i - 1, j - 1);
}

} // namespace

Jet1TwoForm pullback_jet_linear(MatQ const &a, Jet1TwoForm const &jet)
{
  int const two_n = jet.two_n();
  if (a.rows() != a.cols() || static_cast<int>(a.rows()) != two_n)
    throw ShapeError("pullback matrix does not match the jet dimension");
  if (bareiss_rank(a, Execution::serial) != a.rows())
    throw SingularMatrix("pullback along a singular linear map");
  auto const pairs = enumerate_pairs(two_n);
  Jet1TwoForm out(two_n);
  for (auto const &[j, k] : pairs)
    for (auto const &[h, i] : pairs) {
      Rational const m = minor2(a, h, i, j, k);
      if (sgn(m) == 0)
        continue;
      out.f(j, k) += jet.f(h, i) * m;
      for (int l = 1; l <= two_n; ++l) {
        Rational chain = 0;
        for (int x = 1; x <= two_n; ++x)
          chain += jet.df(h, i, x) * a(x - 1, l - 1);
        out.df(j, k, l) += chain * m;
      }
    }
  return out;
}

} // namespace sptri
