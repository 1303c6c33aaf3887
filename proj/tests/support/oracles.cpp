#include "support/oracles.hpp"

#include <utility>

#include "sptri/action.hpp"
#include "sptri/combinatorics.hpp"
#include "sptri/symplectic.hpp"

namespace sptri::oracle
{

namespace
{

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(MatQ &m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    for (std::size_t k = 0; k < m.cols(); ++k)
      std::swap(m(p, k), m(r, k));
    Rational const s = m(r, c);
    for (std::size_t k = 0; k < m.cols(); ++k)
      m(r, k) /= s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Rational const f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k)
        m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t gauss_rank(MatQ m) { return rref(m).size(); }

std::vector<std::vector<Rational>> rref_kernel(MatQ m)
{
  auto const pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

Trivector brute_force_rho(MatQ const &u, Trivector const &theta)
{
  int const d = theta.two_n();
  auto e = [d](int k) {
    std::vector<Rational> v(d);
    v[k - 1] = 1;
    return v;
  };
  auto apply = [&](std::vector<Rational> const &v) {
    std::vector<Rational> out(d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        out[r] += u(r, c) * v[c];
    return out;
  };
  Trivector out(d);
  std::size_t k = 0;
  for (auto const &[h, i, j] : enumerate_triples(d)) {
    out[k++] = -(theta.evaluate(apply(e(h)), e(i), e(j)) + theta.evaluate(e(h), apply(e(i)), e(j)) +
                 theta.evaluate(e(h), e(i), apply(e(j))));
  }
  return out;
}

Trivector group_act_derivative(MatQ const &u, Trivector const &theta)
{
  // exp(tU) is a polynomial of degree < size(U); its inverse exp(-tU) too,
  // and every coordinate of the action is a cubic form in the inverse.
  std::size_t const size = u.rows();
  int degree = 0;
  MatQ power = MatQ::identity(size);
  while (!(power = power * u).is_zero())
    ++degree;
  int const points = 3 * degree + 1;

  std::vector<Rational> ts;
  std::vector<Trivector> values;
  for (int s = 0; s < points; ++s) {
    Rational const t(s - points / 2);
    ts.push_back(t);
    values.push_back(group_act(nilpotent_exp(t * u), theta));
  }
  // derivative at 0 of the Lagrange interpolant: sum_s values[s] * L_s'(0)
  Trivector out(theta.two_n());
  for (int s = 0; s < points; ++s) {
    // L_s(t) = prod_{m != s} (t - t_m) / (t_s - t_m)
    Rational denom = 1;
    for (int m = 0; m < points; ++m)
      if (m != s)
        denom *= ts[s] - ts[m];
    Rational deriv = 0; // d/dt prod_{m != s} (t - t_m) at t = 0
    for (int skip = 0; skip < points; ++skip) {
      if (skip == s)
        continue;
      Rational prod = 1;
      for (int m = 0; m < points; ++m)
        if (m != s && m != skip)
          prod *= -ts[m];
      deriv += prod;
    }
    out += (deriv / denom) * values[s];
  }
  return out;
}

MatQ random_matrix(std::size_t rows, std::size_t cols, Rng &rng, int bound, double zero_fraction,
                   bool rational)
{
  MatQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<double>(rng.uniform(0, 999)) < zero_fraction * 1000)
        continue;
      long const num = rng.uniform(-bound, bound);
      long const den = rational ? rng.uniform(1, 4) : 1;
      m(r, c) = make_rational(num, den);
    }
  return m;
}

MatQ random_invertible(std::size_t size, Rng &rng)
{
  for (;;) {
    MatQ m = random_matrix(size, size, rng, 3, 0.2, true);
    if (gauss_rank(m) == size)
      return m;
  }
}

MatQ random_sp(int n, Rng &rng, int bound)
{
  std::vector<Rational> coeffs(sp_dim(n));
  for (auto &c : coeffs)
    c = make_rational(rng.uniform(-bound, bound), rng.uniform(1, 3));
  return sp_assemble(n, coeffs);
}

Trivector random_trivector_q(int two_n, Rng &rng, int bound)
{
  Trivector t(two_n);
  for (std::size_t k = 0; k < t.size(); ++k)
    t[k] = make_rational(rng.uniform(-bound, bound), rng.uniform(1, 3));
  return t;
}

Jet1TwoForm random_jet(int two_n, Rng &rng, int bound)
{
  Jet1TwoForm j(two_n);
  for (auto const &[h, i] : enumerate_pairs(two_n)) {
    j.f(h, i) = Rational(rng.uniform(-bound, bound));
    for (int l = 1; l <= two_n; ++l)
      j.df(h, i, l) = make_rational(rng.uniform(-bound, bound), rng.uniform(1, 2));
  }
  return j;
}

} // namespace sptri::oracle
