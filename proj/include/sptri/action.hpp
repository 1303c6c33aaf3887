#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sptri/matrix.hpp"
#include "sptri/trivector.hpp"

namespace sptri
{

/**
 * Conventions
 * -----------
 * GL(2n) acts on 3-covectors by pullback along the inverse,
 *
 *     (A . theta)(x, y, z) = theta(A^-1 x, A^-1 y, A^-1 z),
 *
 * so v^a o A^-1 = sum_h (A^-1)_{ah} v^h. The infinitesimal action is the
 * t-derivative at 0 along exp(tU):
 *
 *     rho(U) theta = -theta(U., ., .) - theta(., U., .) - theta(., ., U.).
 *
 * rho is a Lie algebra homomorphism: rho([U,V]) = [rho(U), rho(V)].
 */

/// A . theta via 3x3 minors of A^-1; throws SingularMatrix.
Trivector group_act(MatQ const &a, Trivector const &theta);

enum class ActionMethod
{
  /// Direct evaluation of -theta(U., ., .) - ... on basis vectors.
  multilinear,
  /// Sum over input triples of the three Kronecker-delta determinants.
  lemma_determinant,
  /// Closed coefficient of each output coordinate as nine index-range sums;
  /// only defined for U in sp(2n).
  expanded_coefficient,
};

std::string to_string(ActionMethod m);
ActionMethod parse_action_method(std::string const &name);

/// rho(U) theta. Throws ShapeError on dimension mismatch and DomainError
/// for expanded_coefficient with U outside sp(2n).
Trivector infinitesimal_act(MatQ const &u, Trivector const &theta,
                            ActionMethod method = ActionMethod::multilinear);

/// Matrix of rho(U) in the lexicographic triple basis, assembled sparsely.
SparseMatQ rep_matrix(MatQ const &u);

/**
 * Entries of an sp element in the indexing used by the expanded
 * coefficient formula: row x holds the nonzero (a, u_xa), 1-based.
 *
 * The formula reads u_xa as the coefficient that carries v^a to v^x,
 * which is entry (a, x) of the matrix U. The entries are read back from
 * the independent unknowns of the canonical sp basis.
 */
using CoefficientRows = std::vector<std::vector<std::pair<int, Rational>>>;
CoefficientRows coefficient_rows(MatQ const &u);

/// rho(U) theta from coefficient rows, written into out (size C(2n,3)).
void expanded_coefficient_act(CoefficientRows const &rows, Trivector const &theta,
                              TripleIndexer const &index, std::span<Rational> out);

/// Exterior derivative at the point: y_abc = dF_bc/dx^a - dF_ac/dx^b + dF_ab/dx^c.
Trivector exterior_derivative_jet(Jet1TwoForm const &jet);

/// First jet at the origin of phi^* Omega for phi(x) = A x; throws SingularMatrix.
Jet1TwoForm pullback_jet_linear(MatQ const &a, Jet1TwoForm const &jet);

} // namespace sptri
