#pragma once

#include <cstddef>
#include <vector>

#include "sptri/combinatorics.hpp"
#include "sptri/rational.hpp"

namespace sptri
{

/**
 * A 3-covector on a 2n-dimensional space, stored by its coordinates
 * y_abc over strictly increasing triples in lexicographic order.
 */
class Trivector
{
public:
  /// Zero trivector.
  explicit Trivector(int two_n);
  Trivector(int two_n, std::vector<Rational> coords);

  /// v^a ^ v^b ^ v^c for any index order; sorted with the permutation
  /// sign, zero if an index repeats.
  static Trivector basis(int two_n, int a, int b, int c);

  int two_n() const { return two_n_; }
  int n() const { return two_n_ / 2; }
  std::size_t size() const { return coords_.size(); }

  std::vector<Rational> const &coords() const { return coords_; }
  Rational const &operator[](std::size_t k) const { return coords_[k]; }
  Rational &operator[](std::size_t k) { return coords_[k]; }

  /// y_abc for a < b < c.
  Rational const &at(IndexTriple t) const;

  /// Adds value * v^a ^ v^b ^ v^c, canonicalizing the index order.
  void add_term(int a, int b, int c, Rational const &value);

  /// theta(x, y, z) as an alternating trilinear form on coordinate vectors.
  Rational evaluate(std::vector<Rational> const &x, std::vector<Rational> const &y,
                    std::vector<Rational> const &z) const;

  bool is_zero() const;

  Trivector &operator+=(Trivector const &o);
  Trivector &operator-=(Trivector const &o);
  Trivector &operator*=(Rational const &s);

  friend bool operator==(Trivector const &, Trivector const &) = default;

private:
  int two_n_;
  std::vector<Rational> coords_;
};

Trivector operator+(Trivector x, Trivector const &y);
Trivector operator-(Trivector x, Trivector const &y);
Trivector operator*(Rational const &s, Trivector x);

/**
 * First jet of a 2-form sum_{h<i} F_hi dx^h ^ dx^i at a point:
 * the values F_hi and the derivatives dF_hi/dx^l.
 */
class Jet1TwoForm
{
public:
  explicit Jet1TwoForm(int two_n);

  int two_n() const { return two_n_; }

  Rational const &f(int h, int i) const;
  Rational &f(int h, int i);
  Rational const &df(int h, int i, int l) const;
  Rational &df(int h, int i, int l);

  std::vector<Rational> const &f_values() const { return f_; }
  std::vector<Rational> const &df_values() const { return df_; }

  friend bool operator==(Jet1TwoForm const &, Jet1TwoForm const &) = default;

private:
  std::size_t df_index(int h, int i, int l) const;

  int two_n_;
  std::vector<Rational> f_;
  std::vector<Rational> df_; // pair-major, then derivative index
};

} // namespace sptri
