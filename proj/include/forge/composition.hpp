#pragma once

#include <optional>

#include "forge/suslin.hpp"

namespace forge {

enum class AlgebraKind { SplitQuaternion, SplitOctonion };

/// An element of a composition algebra over the coefficient ring: a split
/// quaternion stored as a 2x2 matrix (conjugate = adjugate, norm = det),
/// or a split octonion stored as a Zorn vector matrix (a, x; y, b) with
/// norm ab - x.y. Both carry a multiplicative norm.
class AlgElement {
 public:
  static AlgElement quaternion(MatrixR two_by_two);
  static AlgElement quaternion_from_pairs(const RingElem& a1, const RingElem& a2,
                                          const RingElem& b1, const RingElem& b2);
  static AlgElement octonion(RingElem a, std::vector<RingElem> x,
                             std::vector<RingElem> y, RingElem b);
  static AlgElement one(const Ring& ring, AlgebraKind kind);
  static AlgElement zero(const Ring& ring, AlgebraKind kind);

  AlgebraKind algebra() const { return kind_; }
  const Ring& ring() const { return ring_; }

  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  AlgElement conj() const;
  RingElem norm() const;
  bool operator==(const AlgElement& o) const;
  bool operator!=(const AlgElement& o) const { return !(*this == o); }

  /// Quaternion payload.
  const MatrixR& quat() const;
  /// Octonion payload, flattened as (a, x1, x2, x3, y1, y2, y3, b).
  std::vector<RingElem> octonion_coords() const;
  static AlgElement octonion_from_coords(const Ring& ring,
                                         const std::vector<RingElem>& coords);

 private:
  AlgElement(AlgebraKind k, Ring r) : kind_(k), ring_(std::move(r)) {}
  AlgebraKind kind_;
  Ring ring_;
  std::optional<MatrixR> quat_;                 // SplitQuaternion
  std::vector<RingElem> zorn_;                   // SplitOctonion: a,x,y,b flat
};

/// Left-multiplication matrix of an octonion on the 8 coordinates above.
/// Satisfies L_alpha L_{conj(alpha)} = norm(alpha) I.
MatrixR octonion_left_mul(const AlgElement& alpha);

/// The recursive matrix Z_i(alpha, v, w):
///   Z_1 = [[a_1, B], [-Bbar, b_1]],  Z_i = [[a_i, Z_{i-1}], [-bar, b_i]],
/// where B is the quaternion 2x2 block or the octonion left-multiplication
/// block. Carries q(Z_i) = norm(alpha) + a_1 b_1 + ... + a_i b_i at every
/// level, since the composition recursion consumes those.
struct ZMatrix {
  AlgebraKind algebra;
  AlgElement alpha;
  std::vector<RingElem> v, w;
  MatrixR body;
  MatrixR bar_body;
  std::vector<RingElem> level_q;  // level_q[i] = q at level i+1

  int level() const { return static_cast<int>(v.size()); }
  const RingElem& q() const { return level_q.back(); }
};

ZMatrix z_matrix(const AlgElement& alpha, std::vector<RingElem> v,
                 std::vector<RingElem> w);

/// The composition X (.) Y on a fixed v-row:
///   level 1:  (a, alpha beta; ..., b q_Y + b' q_X - a b b'),
///   level i:  corner b_i q_{Y_i} + b'_i q_{X_i} - a_i b_i b'_i around the
///             composed inner block.
/// Multiplicative: q(X (.) Y) = q(X) q(Y).
ZMatrix compose(const ZMatrix& x, const ZMatrix& y);
/// Level-1 case by itself (same law; level checked).
ZMatrix compose_plane(const ZMatrix& x, const ZMatrix& y);

struct VdkComposition {
  std::vector<RingElem> v3;
  std::vector<RingElem> w3;
  ZMatrix z;
};

/// Composition of unimodular rows: p1, p2 on the unit sphere with v-rows
/// agreeing past the first two coordinates. The first two coordinate pairs
/// become split quaternions, the shared tail the fixed row; the composed
/// row is (a1, a2) [[c1, c2], [-d2, d1]] followed by the tail.
VdkComposition vdk_compose(const SpherePoint& p1, const SpherePoint& p2);

/// Fixed identification of H(R^4) points with split octonions:
/// a = v1, b = w1, x = (v2, v3, v4), y = -(w2, w3, w4), so norm = v.w^T.
AlgElement octonion_from_h4(const SpherePoint& p4);
SpherePoint octonion_to_h4(const AlgElement& o);

/// Level-1 octonion composition carrying unit-sphere points of H(R^5);
/// non-associative in general.
ZMatrix octonion_sphere_compose(const ZMatrix& x, const ZMatrix& y);
/// The H(R^5) point encoded by a level-1 octonion Z-matrix.
SpherePoint h5_point(const ZMatrix& z);

/// Verifies phi(alpha, v, w) = [[0, Z], [bar Z, 0]] squares to q * I,
/// the polarized anticommutator law against a basis of partner vectors,
/// and the rank bookkeeping 2^(rank V) = dim^2 * rank(A).
bool clifford_embed_check(const AlgElement& alpha,
                          const std::vector<RingElem>& v,
                          const std::vector<RingElem>& w);

struct NonAssocWitness {
  AlgElement o1, o2, o3;
};

/// Searches a small structured family of norm-1 split octonions for a
/// non-associative triple; deterministic order, first hit returned.
std::optional<NonAssocWitness> find_octonion_nonassoc_witness(const Ring& ring);

}  // namespace forge
