#include "forge/vaserstein.hpp"

#include <stdexcept>

namespace forge {

bool is_alternating(const MatrixR& m) {
  for (int i = 0; i < m.dim(); i++) {
    if (!m.at(i, i).is_zero()) return false;
    for (int j = i + 1; j < m.dim(); j++)
      if (m.at(i, j) != -m.at(j, i)) return false;
  }
  return true;
}

AlternatingMatrix::AlternatingMatrix(MatrixR m) : body(std::move(m)) {
  if (!is_alternating(body))
    throw std::invalid_argument("AlternatingMatrix: matrix is not alternating");
}

MatrixR beta_matrix(const Ring& ring) {
  MatrixR b(ring, 4);
  const RingElem one = RingElem::one(ring);
  b.set(0, 0, one);
  b.set(1, 1, -one);
  b.set(2, 3, one);
  b.set(3, 2, -one);
  return b;
}

AlternatingMatrix vaserstein_matrix(const SpherePoint& p) {
  if (p.n() != 3)
    throw std::invalid_argument("vaserstein_matrix: needs a length-3 point");
  MatrixR beta = beta_matrix(p.ring);
  MatrixR m = beta * suslin_body(p) * j_matrix(p.ring, 2) * beta.transpose();
  return AlternatingMatrix(std::move(m));
}

RingElem pfaffian4(const AlternatingMatrix& a) {
  const MatrixR& m = a.body;
  if (m.dim() != 4) throw std::invalid_argument("pfaffian4: dim != 4");
  return m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) +
         m.at(0, 3) * m.at(1, 2);
}

namespace {

RingElem pf_expand(const MatrixR& m, const std::vector<int>& rows) {
  const Ring& r = m.ring();
  if (rows.empty()) return RingElem::one(r);
  RingElem acc = RingElem::zero(r);
  const int first = rows[0];
  for (size_t k = 1; k < rows.size(); k++) {
    std::vector<int> rest;
    for (size_t t = 1; t < rows.size(); t++)
      if (t != k) rest.push_back(rows[t]);
    RingElem term = m.at(first, rows[k]) * pf_expand(m, rest);
    acc = (k % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

RingElem pfaffian(const AlternatingMatrix& a) {
  const int n = a.body.dim();
  if (n % 2 == 1) return RingElem::zero(a.body.ring());
  std::vector<int> rows(n);
  for (int i = 0; i < n; i++) rows[i] = i;
  return pf_expand(a.body, rows);
}

AlternatingMatrix perp(const AlternatingMatrix& a, const AlternatingMatrix& b) {
  if (a.body.ring() != b.body.ring()) throw_ring_mismatch("perp");
  const int ra = a.body.dim(), rb = b.body.dim();
  MatrixR m(a.body.ring(), ra + rb);
  for (int i = 0; i < ra; i++)
    for (int j = 0; j < ra; j++) m.set(i, j, a.body.at(i, j));
  for (int i = 0; i < rb; i++)
    for (int j = 0; j < rb; j++) m.set(ra + i, ra + j, b.body.at(i, j));
  return AlternatingMatrix(std::move(m));
}

AlternatingMatrix psi(const Ring& ring, int r) {
  if (r < 1) throw std::invalid_argument("psi: r >= 1");
  MatrixR one(ring, 2);
  one.set(0, 1, RingElem::one(ring));
  one.set(1, 0, -RingElem::one(ring));
  AlternatingMatrix plane{std::move(one)};
  AlternatingMatrix acc = plane;
  for (int k = 2; k <= r; k++) acc = perp(acc, plane);
  return acc;
}

WittElementRaw::WittElementRaw(AlternatingMatrix a) : body(std::move(a)) {
  if (body.body.dim() != 4)
    throw std::invalid_argument("WittElementRaw: expect a 4x4 representative");
  if (!pfaffian4(body).is_one())
    throw std::invalid_argument("WittElementRaw: Pfaffian must be exactly 1");
}

std::pair<MatrixR, AlternatingMatrix> transport_action(const MatrixR& g,
                                                       const SpherePoint& p) {
  if (g.dim() != 4) throw std::invalid_argument("transport_action: g must be 4x4");
  if (p.n() != 3)
    throw std::invalid_argument("transport_action: needs a length-3 point");
  const Ring& r = p.ring;
  MatrixR s_moved = g * suslin_body(p) * star(g, 2);
  SpherePoint p_moved = suslin_extract(s_moved);  // throws off the Spin image

  MatrixR beta = beta_matrix(r);
  MatrixR g_prime = beta * g * beta.transpose();
  AlternatingMatrix v_moved(g_prime * vaserstein_matrix(p).body *
                            g_prime.transpose());
  if (v_moved.body != vaserstein_matrix(p_moved).body)
    throw std::runtime_error("transport_action: transported matrix mismatch");
  return {std::move(g_prime), std::move(v_moved)};
}

bool sp4_fixer_check(const MatrixR& g) {
  if (g.dim() != 4) throw std::invalid_argument("sp4_fixer_check: g must be 4x4");
  MatrixR j = j_matrix(g.ring(), 2);
  return g * j * g.transpose() == j;
}

}  // namespace forge
