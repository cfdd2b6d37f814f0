#pragma once

#include "forge/matrix.hpp"

namespace forge {

/// A pair (v, w) of length-n rows in the hyperbolic space H(R^n), with
/// q(v, w) = v.w^T. Unimodular rows are the v-parts of points with q = 1.
struct SpherePoint {
  Ring ring;
  std::vector<RingElem> v;
  std::vector<RingElem> w;

  SpherePoint(Ring r, std::vector<RingElem> v_, std::vector<RingElem> w_);
  int n() const { return static_cast<int>(v.size()); }
  RingElem q() const { return dot_product(v, w); }
  bool on_unit_sphere() const { return q().is_one(); }
  bool operator==(const SpherePoint& o) const {
    return ring == o.ring && v == o.v && w == o.w;
  }
};

/// The 2^(n-1)-dimensional matrix S(v, w) of the block recursion
///   S(v, w) = [[a_1, S(v', w')], [-bar(S(v', w')), b_1]],
/// together with its bar companion. `barred` marks which of the two the
/// body currently holds; taking bar twice restores the original.
struct SuslinMatrix {
  SpherePoint source;
  MatrixR body;
  bool barred = false;

  int n() const { return source.n(); }
};

MatrixR suslin_body(const SpherePoint& p);
MatrixR suslin_bar_body(const SpherePoint& p);

SuslinMatrix suslin(const SpherePoint& p);
SuslinMatrix suslin_bar(const SuslinMatrix& s);

/// Reads (v, w) back off a Suslin matrix / bar pair; throws when the
/// matrices are not of Suslin shape. For dim >= 2 the bar argument may be
/// omitted (the b-coordinates are visible in the body).
SpherePoint suslin_extract(const MatrixR& body, const MatrixR& bar_body);
SpherePoint suslin_extract(const MatrixR& body);

/// J_0 = (1); J_n = diag(J_{n-1}, -J_{n-1}) for n even,
/// [[0, J_{n-1}], [-J_{n-1}, 0]] for n odd. Satisfies J_n J_n^T = 1.
MatrixR j_matrix(const Ring& ring, int n);

/// The involution M -> J_n M^T J_n^T on M_{2^n}(R). Anti-multiplicative.
MatrixR star(const MatrixR& m, int n);

enum class BasisKind { E, F };

/// E_i = S(e_i, 0), F_i = S(0, f_i): the Clifford images of the standard
/// hyperbolic basis vectors, at ambient length n.
struct BasisUnit {
  BasisKind kind;
  int index;
  int n;
  MatrixR body;
};

BasisUnit basis_unit(const Ring& ring, BasisKind kind, int index, int n);
MatrixR basis_unit_bar(const BasisUnit& u);

}  // namespace forge
