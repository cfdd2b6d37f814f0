#pragma once

#include "forge/suslin.hpp"

namespace forge {

/// Alternating matrix: A^T = -A with zero diagonal. det(A) = pf(A)^2.
struct AlternatingMatrix {
  MatrixR body;
  explicit AlternatingMatrix(MatrixR m);
};

bool is_alternating(const MatrixR& m);

/// The fixed change-of-basis matrix relating Suslin matrices to
/// alternating ones; orthogonal (beta^T = beta^{-1}).
MatrixR beta_matrix(const Ring& ring);

/// V(v, w) = beta S(v, w) J beta^T for (v, w) in H(R^3): a 4x4 alternating
/// matrix with Pfaffian v.w^T. This is the matrix of the Vaserstein symbol.
AlternatingMatrix vaserstein_matrix(const SpherePoint& p);

/// Closed-form 4x4 Pfaffian a12 a34 - a13 a24 + a14 a23.
RingElem pfaffian4(const AlternatingMatrix& a);
/// Pfaffian of any even-dimensional alternating matrix by first-row
/// expansion (division-free; fine at the sizes used here).
RingElem pfaffian(const AlternatingMatrix& a);

AlternatingMatrix perp(const AlternatingMatrix& a, const AlternatingMatrix& b);
/// psi_1 = [[0, 1], [-1, 0]]; psi_r = psi_{r-1} perp psi_1.
AlternatingMatrix psi(const Ring& ring, int r);

/// A 4x4 alternating matrix with Pfaffian exactly 1: a raw representative
/// of a class of the elementary symplectic-Witt group. Only representatives
/// are modeled; the stable equivalence relation is out of scope, so the
/// inclusion of representatives into the group is the identity here.
struct WittElementRaw {
  AlternatingMatrix body;
  explicit WittElementRaw(AlternatingMatrix a);
};

/// Spin action transported to alternating matrices: for g acting on Suslin
/// matrices by S -> g S g* (star built from the 4x4 J), returns
/// g' = beta g beta^T and V' = g' V(p) g'^T, and checks that V' is the
/// matrix of the transformed point. Throws when g S g* is not of Suslin
/// form (g outside the Spin image).
std::pair<MatrixR, AlternatingMatrix> transport_action(const MatrixR& g,
                                                       const SpherePoint& p);

/// The symplectic condition g J g^T = J with respect to the 4x4 J.
bool sp4_fixer_check(const MatrixR& g);

}  // namespace forge
