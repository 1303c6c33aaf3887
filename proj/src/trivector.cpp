#include "sptri/trivector.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sptri/errors.hpp"

namespace sptri
{

namespace
{

void require_same(Trivector const &x, Trivector const &y)
{
  if (x.two_n() != y.two_n())
    throw ShapeError("trivectors of different dimension");
}

} // namespace

Trivector::Trivector(int two_n) : two_n_(two_n), coords_(lambda3_dim(two_n)) {}

Trivector::Trivector(int two_n, std::vector<Rational> coords)
    : two_n_(two_n), coords_(std::move(coords))
{
  if (coords_.size() != lambda3_dim(two_n))
    throw ShapeError("trivector needs " + std::to_string(lambda3_dim(two_n)) + " coordinates, got " +
                     std::to_string(coords_.size()));
}

Trivector Trivector::basis(int two_n, int a, int b, int c)
{
  Trivector t(two_n);
  t.add_term(a, b, c, 1);
  return t;
}

Rational const &Trivector::at(IndexTriple t) const
{
  return coords_[rank_triple(t, two_n_)];
}

void Trivector::add_term(int a, int b, int c, Rational const &value)
{
  if (std::min({a, b, c}) < 1 || std::max({a, b, c}) > two_n_)
    throw IndexError("index outside 1.." + std::to_string(two_n_));
  if (a == b || b == c || a == c)
    return;
  int sign = 1;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  auto &y = coords_[rank_triple({a, b, c}, two_n_)];
  if (sign > 0)
    y += value;
  else
    y -= value;
}

Rational Trivector::evaluate(std::vector<Rational> const &x, std::vector<Rational> const &y,
                             std::vector<Rational> const &z) const
{
  std::size_t const d = static_cast<std::size_t>(two_n_);
  if (x.size() != d || y.size() != d || z.size() != d)
    throw ShapeError("vector length must equal 2n");
  Rational sum = 0;
  std::size_t k = 0;
  for (auto const &t : enumerate_triples(two_n_)) {
    Rational const &coef = coords_[k++];
    if (sgn(coef) == 0)
      continue;
    int const a = t.a - 1, b = t.b - 1, c = t.c - 1;
    Rational const det = x[a] * (y[b] * z[c] - y[c] * z[b]) - x[b] * (y[a] * z[c] - y[c] * z[a]) +
                         x[c] * (y[a] * z[b] - y[b] * z[a]);
    sum += coef * det;
  }
  return sum;
}

bool Trivector::is_zero() const
{
  return std::all_of(coords_.begin(), coords_.end(), [](Rational const &q) { return sgn(q) == 0; });
}

Trivector &Trivector::operator+=(Trivector const &o)
{
  require_same(*this, o);
  for (std::size_t k = 0; k < coords_.size(); ++k)
    coords_[k] += o.coords_[k];
  return *this;
}

Trivector &Trivector::operator-=(Trivector const &o)
{
  require_same(*this, o);
  for (std::size_t k = 0; k < coords_.size(); ++k)
    coords_[k] -= o.coords_[k];
  return *this;
}

Trivector &Trivector::operator*=(Rational const &s)
{
  for (auto &y : coords_)
    y *= s;
  return *this;
}

Trivector operator+(Trivector x, Trivector const &y) { return x += y; }
Trivector operator-(Trivector x, Trivector const &y) { return x -= y; }
Trivector operator*(Rational const &s, Trivector x) { return x *= s; }

Jet1TwoForm::Jet1TwoForm(int two_n)
    : two_n_(two_n), f_(lambda2_dim(two_n)), df_(lambda2_dim(two_n) * two_n)
{
}

Rational const &Jet1TwoForm::f(int h, int i) const { return f_[rank_pair({h, i}, two_n_)]; }
Rational &Jet1TwoForm::f(int h, int i) { return f_[rank_pair({h, i}, two_n_)]; }

std::size_t Jet1TwoForm::df_index(int h, int i, int l) const
{
  if (l < 1 || l > two_n_)
    throw IndexError("derivative index " + std::to_string(l) + " out of range");
  return rank_pair({h, i}, two_n_) * two_n_ + (l - 1);
}

Rational const &Jet1TwoForm::df(int h, int i, int l) const { return df_[df_index(h, i, l)]; }
Rational &Jet1TwoForm::df(int h, int i, int l) { return df_[df_index(h, i, l)]; }

} // namespace sptri
