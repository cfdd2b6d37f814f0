#pragma once

#include "forge/suslin.hpp"

namespace forge {

/// Image of a point of H(R^n) inside M_{2^n}(R):
///   phi(v, w) = [[0, S(v, w)], [bar(S(v, w)), 0]].
/// Squares to q(v, w) * I, which is the defining Clifford relation.
struct CliffordImage {
  int n;
  MatrixR body;
};

RingElem q_form(const SpherePoint& p);
RingElem bilinear(const SpherePoint& p1, const SpherePoint& p2);

CliffordImage phi_embed(const SpherePoint& p);

/// Structural grading predicates: even elements are block-diagonal,
/// odd ones block-off-diagonal.
bool is_block_diagonal(const MatrixR& m);
bool is_block_off_diagonal(const MatrixR& m);

}  // namespace forge
