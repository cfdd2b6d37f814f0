#include "forge/suslin.hpp"

#include <stdexcept>

namespace forge {

SpherePoint::SpherePoint(Ring r, std::vector<RingElem> v_,
                         std::vector<RingElem> w_)
    : ring(std::move(r)), v(std::move(v_)), w(std::move(w_)) {
  if (v.empty() || v.size() != w.size())
    throw std::invalid_argument("SpherePoint: v and w must have equal positive length");
  for (const auto& e : v)
    if (e.ring() != ring) throw_ring_mismatch("SpherePoint");
  for (const auto& e : w)
    if (e.ring() != ring) throw_ring_mismatch("SpherePoint");
}

namespace {

// Recursion on coordinate slices [lo, n).
MatrixR suslin_rec(const SpherePoint& p, size_t lo, bool barred) {
  const Ring& r = p.ring;
  const RingElem& a = p.v[lo];
  const RingElem& b = p.w[lo];
  if (lo + 1 == p.v.size()) {
    MatrixR m(r, 1);
    m.set(0, 0, barred ? b : a);
    return m;
  }
  MatrixR inner = suslin_rec(p, lo + 1, false);
  MatrixR inner_bar = suslin_rec(p, lo + 1, true);
  int h = inner.dim();
  if (!barred)
    return MatrixR::from_blocks(MatrixR::scalar_matrix(a, h), inner,
                                -inner_bar, MatrixR::scalar_matrix(b, h));
  return MatrixR::from_blocks(MatrixR::scalar_matrix(b, h), -inner, inner_bar,
                              MatrixR::scalar_matrix(a, h));
}

}  // namespace

MatrixR suslin_body(const SpherePoint& p) { return suslin_rec(p, 0, false); }
MatrixR suslin_bar_body(const SpherePoint& p) { return suslin_rec(p, 0, true); }

SuslinMatrix suslin(const SpherePoint& p) {
  return SuslinMatrix{p, suslin_body(p), false};
}

SuslinMatrix suslin_bar(const SuslinMatrix& s) {
  if (s.barred) return SuslinMatrix{s.source, suslin_body(s.source), false};
  return SuslinMatrix{s.source, suslin_bar_body(s.source), true};
}

namespace {

void extract_rec(const MatrixR& body, const MatrixR& bar_body,
                 std::vector<RingElem>& v, std::vector<RingElem>& w) {
  if (body.dim() == 1) {
    v.push_back(body.at(0, 0));
    w.push_back(bar_body.at(0, 0));
    return;
  }
  int h = body.dim() / 2;
  v.push_back(body.at(0, 0));
  w.push_back(body.at(body.dim() - 1, body.dim() - 1));
  MatrixR inner = body.block(0, h, h);
  MatrixR inner_bar = -body.block(h, 0, h);
  extract_rec(inner, inner_bar, v, w);
}

}  // namespace

SpherePoint suslin_extract(const MatrixR& body, const MatrixR& bar_body) {
  std::vector<RingElem> v, w;
  extract_rec(body, bar_body, v, w);
  SpherePoint p(body.ring(), std::move(v), std::move(w));
  if (suslin_body(p) != body || suslin_bar_body(p) != bar_body)
    throw std::runtime_error("suslin_extract: matrix is not of Suslin form");
  return p;
}

SpherePoint suslin_extract(const MatrixR& body) {
  if (body.dim() < 2)
    throw std::invalid_argument("suslin_extract: need the bar matrix for dim 1");
  std::vector<RingElem> v, w;
  extract_rec(body, body, v, w);  // bar argument unused at dim >= 2
  SpherePoint p(body.ring(), std::move(v), std::move(w));
  if (suslin_body(p) != body)
    throw std::runtime_error("suslin_extract: matrix is not of Suslin form");
  return p;
}

MatrixR j_matrix(const Ring& ring, int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("j_matrix: n out of range (0..7)");
  MatrixR j = MatrixR::identity(ring, 1);
  for (int k = 1; k <= n; k++) {
    MatrixR z(ring, j.dim());
    if (k % 2 == 0)
      j = MatrixR::from_blocks(j, z, z, -j);
    else
      j = MatrixR::from_blocks(z, j, -j, z);
  }
  return j;
}

MatrixR star(const MatrixR& m, int n) {
  if (m.dim() != (1 << n))
    throw std::invalid_argument("star: matrix dim is not 2^n");
  MatrixR j = j_matrix(m.ring(), n);
  return j * m.transpose() * j.transpose();
}

BasisUnit basis_unit(const Ring& ring, BasisKind kind, int index, int n) {
  if (index < 1 || index > n)
    throw std::invalid_argument("basis_unit: index out of range");
  std::vector<RingElem> v(n, RingElem::zero(ring));
  std::vector<RingElem> w(n, RingElem::zero(ring));
  if (kind == BasisKind::E)
    v[index - 1] = RingElem::one(ring);
  else
    w[index - 1] = RingElem::one(ring);
  SpherePoint p(ring, std::move(v), std::move(w));
  return BasisUnit{kind, index, n, suslin_body(p)};
}

MatrixR basis_unit_bar(const BasisUnit& u) {
  std::vector<RingElem> v(u.n, RingElem::zero(u.body.ring()));
  std::vector<RingElem> w(u.n, RingElem::zero(u.body.ring()));
  if (u.kind == BasisKind::E)
    v[u.index - 1] = RingElem::one(u.body.ring());
  else
    w[u.index - 1] = RingElem::one(u.body.ring());
  return suslin_bar_body(SpherePoint(u.body.ring(), std::move(v), std::move(w)));
}

}  // namespace forge
