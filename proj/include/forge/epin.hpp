#pragma once

#include <variant>

#include "forge/hyperbolic.hpp"

namespace forge {

/// One factor of a word in E_n(R): either a literal elementary matrix
/// E_ij(lambda) = I + lambda e_ij, or a rank-one "Suslin witness"
/// I + u^T z with z.u^T = 0 and one of u, z unimodular, whose membership
/// in E_n(R) is a cited fact rather than an explicit factorization. The
/// witness stores its own transpose-inverse so that words stay invertible
/// without general matrix inversion.
struct ElemFactor {
  int i;
  int j;
  RingElem lambda;
};

struct WitnessFactor {
  MatrixR body;
  MatrixR body_tinv;  // (body^T)^{-1}
  std::string provenance;
};

using ElemWordFactor = std::variant<ElemFactor, WitnessFactor>;

/// Word in E_n(R) together with its matrix product.
struct ElemMatrix {
  int n;
  MatrixR body;
  std::vector<ElemWordFactor> word;
};

ElemMatrix elem_identity(const Ring& ring, int n);
ElemMatrix elem_generator(const Ring& ring, int i, int j, const RingElem& lambda,
                          int n);
ElemMatrix elem_compose(const ElemMatrix& a, const ElemMatrix& b);
/// Matrix of (body^T)^{-1}, assembled factor by factor.
MatrixR elem_transpose_inverse(const ElemMatrix& e);

/// Word in EO_2n(R); factors are E0_ij(lambda) = I + lambda(e_ij -
/// e_{d(j)d(i)}) with d the permutation swapping k and n+k. Pairs with
/// j = d(i) are accepted and collapse to the identity factor.
struct EOMatrix {
  int n;  // half-size: the matrix is 2n x 2n
  MatrixR body;
  std::vector<ElemFactor> word;
};

int eo_partner(int index, int n);  // the permutation d, 1-based
EOMatrix eo_generator(const Ring& ring, int i, int j, const RingElem& lambda,
                      int n);
EOMatrix eo_compose(const EOMatrix& a, const EOMatrix& b);

/// H: E_n(R) -> EO_2n(R), eps -> diag(eps, eps^{T,-1}).
MatrixR hyperbolic_embed(const ElemMatrix& eps);

enum class FirstSlot { E1, F1 };

/// Generator 1 + lambda x_1 x_i of the elementary Spin group, where
/// x_1 is e_1 or f_1 and x_i is e_i or f_i with i >= 2.
struct EpinGenerator {
  FirstSlot first;
  BasisKind second_kind;
  int second_index;
  RingElem lambda;
  int n;
};

/// Block-diagonal image diag(1 - lambda X_1 X_i, 1 - lambda bar(X_1) bar(X_i))
/// in M_{2^n}(R). Inverse is the same generator with -lambda.
MatrixR epin_matrix(const EpinGenerator& g);
/// Top-left block alone (dimension 2^(n-1)).
MatrixR epin_top_block(const EpinGenerator& g);

EpinGenerator epin_inverse(const EpinGenerator& g);

/// The point p' with phi(p') = g phi(p) g^{-1}. Throws when the conjugate
/// is not a Clifford image, which would indicate a bug, not bad input.
SpherePoint act_on_point(const EpinGenerator& g, const SpherePoint& p);

/// Same action via the closed-form row updates (no matrix conjugation).
SpherePoint act_closed_form(const EpinGenerator& g, const SpherePoint& p);

/// Applies the word left to right and accumulates sigma in E_n(R) with
/// (v sigma, w sigma^{T,-1}) equal to the final point. Requires q(p) = 1.
std::pair<SpherePoint, ElemMatrix> extract_sigma(
    const std::vector<EpinGenerator>& word, const SpherePoint& p);

/// eps = I_n + v^T (w2 - w1) for v.w1^T = v.w2^T = 1; satisfies
/// w1 eps = w2 and v eps^{T,-1} = v. Also returns H(eps^{T,-1}) as the
/// orthogonal-side matrix diag(eps^{T,-1}, eps).
struct TransitiveWitness {
  ElemMatrix eps;
  MatrixR orthogonal;  // 2n x 2n
};
TransitiveWitness transitive_witness(const std::vector<RingElem>& v,
                                     const std::vector<RingElem>& w1,
                                     const std::vector<RingElem>& w2);

}  // namespace forge
