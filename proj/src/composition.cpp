#include "forge/composition.hpp"

#include <stdexcept>

namespace forge {

namespace {

void require_same_algebra(const AlgElement& a, const AlgElement& b,
                          const char* where) {
  if (a.algebra() != b.algebra() || a.ring() != b.ring())
    throw std::invalid_argument(std::string(where) + ": algebra mismatch");
}

std::vector<RingElem> cross(const std::vector<RingElem>& x,
                            const std::vector<RingElem>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
          x[0] * y[1] - x[1] * y[0]};
}

}  // namespace

AlgElement AlgElement::quaternion(MatrixR two_by_two) {
  if (two_by_two.dim() != 2)
    throw std::invalid_argument("quaternion: payload must be 2x2");
  AlgElement e(AlgebraKind::SplitQuaternion, two_by_two.ring());
  e.quat_ = std::move(two_by_two);
  return e;
}

AlgElement AlgElement::quaternion_from_pairs(const RingElem& a1,
                                             const RingElem& a2,
                                             const RingElem& b1,
                                             const RingElem& b2) {
  MatrixR m(a1.ring(), 2);
  m.set(0, 0, a1);
  m.set(0, 1, a2);
  m.set(1, 0, -b2);
  m.set(1, 1, b1);
  return quaternion(std::move(m));
}

AlgElement AlgElement::octonion(RingElem a, std::vector<RingElem> x,
                                std::vector<RingElem> y, RingElem b) {
  if (x.size() != 3 || y.size() != 3)
    throw std::invalid_argument("octonion: vector parts must have length 3");
  AlgElement e(AlgebraKind::SplitOctonion, a.ring());
  e.zorn_.reserve(8);
  e.zorn_.push_back(std::move(a));
  for (auto& t : x) e.zorn_.push_back(std::move(t));
  for (auto& t : y) e.zorn_.push_back(std::move(t));
  e.zorn_.push_back(std::move(b));
  return e;
}

AlgElement AlgElement::one(const Ring& ring, AlgebraKind kind) {
  if (kind == AlgebraKind::SplitQuaternion)
    return quaternion(MatrixR::identity(ring, 2));
  std::vector<RingElem> z(3, RingElem::zero(ring));
  return octonion(RingElem::one(ring), z, z, RingElem::one(ring));
}

AlgElement AlgElement::zero(const Ring& ring, AlgebraKind kind) {
  if (kind == AlgebraKind::SplitQuaternion)
    return quaternion(MatrixR(ring, 2));
  std::vector<RingElem> z(3, RingElem::zero(ring));
  return octonion(RingElem::zero(ring), z, z, RingElem::zero(ring));
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a, b, "alg mul");
  if (a.algebra() == AlgebraKind::SplitQuaternion)
    return AlgElement::quaternion(a.quat() * b.quat());
  // Zorn vector matrices:
  // (a, x; y, b)(a', x'; y', b') =
  //   (aa' + x.y', ax' + b'x - y X y'; a'y + by' + x X x', bb' + y.x')
  const auto ca = a.octonion_coords();
  const auto cb = b.octonion_coords();
  const RingElem &sa = ca[0], &sb = ca[7];
  const RingElem &ta = cb[0], &tb = cb[7];
  std::vector<RingElem> xa{ca[1], ca[2], ca[3]}, ya{ca[4], ca[5], ca[6]};
  std::vector<RingElem> xb{cb[1], cb[2], cb[3]}, yb{cb[4], cb[5], cb[6]};
  RingElem ra = sa * ta + dot_product(xa, yb);
  RingElem rb = sb * tb + dot_product(ya, xb);
  std::vector<RingElem> yxy = cross(ya, yb), xxx = cross(xa, xb);
  std::vector<RingElem> rx(3, RingElem::zero(a.ring())),
      ry(3, RingElem::zero(a.ring()));
  for (int i = 0; i < 3; i++) {
    rx[i] = sa * xb[i] + tb * xa[i] - yxy[i];
    ry[i] = ta * ya[i] + sb * yb[i] + xxx[i];
  }
  return AlgElement::octonion(std::move(ra), std::move(rx), std::move(ry),
                              std::move(rb));
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a, b, "alg add");
  if (a.algebra() == AlgebraKind::SplitQuaternion)
    return AlgElement::quaternion(a.quat() + b.quat());
  auto ca = a.octonion_coords();
  auto cb = b.octonion_coords();
  std::vector<RingElem> out;
  out.reserve(8);
  for (int i = 0; i < 8; i++) out.push_back(ca[i] + cb[i]);
  return AlgElement::octonion_from_coords(a.ring(), out);
}

AlgElement AlgElement::conj() const {
  if (kind_ == AlgebraKind::SplitQuaternion) {
    // adjugate of [[p, q], [r, s]]
    const MatrixR& m = quat();
    MatrixR out(ring_, 2);
    out.set(0, 0, m.at(1, 1));
    out.set(0, 1, -m.at(0, 1));
    out.set(1, 0, -m.at(1, 0));
    out.set(1, 1, m.at(0, 0));
    return quaternion(std::move(out));
  }
  std::vector<RingElem> c = zorn_;
  std::swap(c[0], c[7]);
  for (int i = 1; i <= 6; i++) c[i] = -c[i];
  return octonion_from_coords(ring_, c);
}

RingElem AlgElement::norm() const {
  if (kind_ == AlgebraKind::SplitQuaternion) {
    const MatrixR& m = quat();
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  }
  std::vector<RingElem> x{zorn_[1], zorn_[2], zorn_[3]};
  std::vector<RingElem> y{zorn_[4], zorn_[5], zorn_[6]};
  return zorn_[0] * zorn_[7] - dot_product(x, y);
}

bool AlgElement::operator==(const AlgElement& o) const {
  if (kind_ != o.kind_ || ring_ != o.ring_) return false;
  if (kind_ == AlgebraKind::SplitQuaternion) return quat() == o.quat();
  return zorn_ == o.zorn_;
}

const MatrixR& AlgElement::quat() const {
  if (kind_ != AlgebraKind::SplitQuaternion)
    throw std::logic_error("quat(): not a quaternion");
  return *quat_;
}

std::vector<RingElem> AlgElement::octonion_coords() const {
  if (kind_ != AlgebraKind::SplitOctonion)
    throw std::logic_error("octonion_coords(): not an octonion");
  return zorn_;
}

AlgElement AlgElement::octonion_from_coords(const Ring& ring,
                                            const std::vector<RingElem>& c) {
  if (c.size() != 8)
    throw std::invalid_argument("octonion_from_coords: need 8 coordinates");
  (void)ring;
  return octonion(c[0], {c[1], c[2], c[3]}, {c[4], c[5], c[6]}, c[7]);
}

MatrixR octonion_left_mul(const AlgElement& alpha) {
  const Ring& r = alpha.ring();
  MatrixR L(r, 8);
  for (int k = 0; k < 8; k++) {
    std::vector<RingElem> basis(8, RingElem::zero(r));
    basis[k] = RingElem::one(r);
    AlgElement col = alpha * AlgElement::octonion_from_coords(r, basis);
    auto cc = col.octonion_coords();
    for (int i = 0; i < 8; i++) L.set(i, k, cc[i]);
  }
  return L;
}

namespace {

// Block of the innermost slot: the 2x2 quaternion itself, or L_alpha.
MatrixR alg_block(const AlgElement& a) {
  return a.algebra() == AlgebraKind::SplitQuaternion ? a.quat()
                                                     : octonion_left_mul(a);
}

}  // namespace

ZMatrix z_matrix(const AlgElement& alpha, std::vector<RingElem> v,
                 std::vector<RingElem> w) {
  if (v.empty() || v.size() != w.size())
    throw std::invalid_argument("z_matrix: v and w must have equal positive length");
  const Ring& r = alpha.ring();
  for (const auto& e : v)
    if (e.ring() != r) throw_ring_mismatch("z_matrix");
  for (const auto& e : w)
    if (e.ring() != r) throw_ring_mismatch("z_matrix");

  MatrixR block = alg_block(alpha);
  MatrixR block_bar = alg_block(alpha.conj());
  const int s = block.dim();

  MatrixR body = MatrixR::from_blocks(MatrixR::scalar_matrix(v[0], s), block,
                                      -block_bar,
                                      MatrixR::scalar_matrix(w[0], s));
  MatrixR bar = MatrixR::from_blocks(MatrixR::scalar_matrix(w[0], s), -block,
                                     block_bar,
                                     MatrixR::scalar_matrix(v[0], s));
  std::vector<RingElem> level_q{alpha.norm() + v[0] * w[0]};
  for (size_t i = 1; i < v.size(); i++) {
    int h = body.dim();
    MatrixR next = MatrixR::from_blocks(MatrixR::scalar_matrix(v[i], h), body,
                                        -bar, MatrixR::scalar_matrix(w[i], h));
    bar = MatrixR::from_blocks(MatrixR::scalar_matrix(w[i], h), -body, bar,
                               MatrixR::scalar_matrix(v[i], h));
    body = std::move(next);
    level_q.push_back(level_q.back() + v[i] * w[i]);
  }
  return ZMatrix{alpha.algebra(),  alpha,          std::move(v),
                 std::move(w),     std::move(body), std::move(bar),
                 std::move(level_q)};
}

ZMatrix compose(const ZMatrix& x, const ZMatrix& y) {
  if (x.algebra != y.algebra)
    throw std::invalid_argument("compose: algebra mismatch");
  if (x.v != y.v)
    throw std::invalid_argument("compose: operands must share the v-row");
  AlgElement gamma = x.alpha * y.alpha;
  std::vector<RingElem> w3;
  w3.reserve(x.v.size());
  for (size_t i = 0; i < x.v.size(); i++) {
    // b_i q_{Y_i} + b'_i q_{X_i} - a_i b_i b'_i
    w3.push_back(x.w[i] * y.level_q[i] + y.w[i] * x.level_q[i] -
                 x.v[i] * x.w[i] * y.w[i]);
  }
  return z_matrix(gamma, x.v, std::move(w3));
}

ZMatrix compose_plane(const ZMatrix& x, const ZMatrix& y) {
  if (x.level() != 1 || y.level() != 1)
    throw std::invalid_argument("compose_plane: operands must be level 1");
  return compose(x, y);
}

VdkComposition vdk_compose(const SpherePoint& p1, const SpherePoint& p2) {
  const int n = p1.n();
  if (n < 3) throw std::invalid_argument("vdk_compose: need n >= 3");
  if (p2.n() != n) throw std::invalid_argument("vdk_compose: length mismatch");
  if (!p1.on_unit_sphere() || !p2.on_unit_sphere())
    throw std::invalid_argument("vdk_compose: points must lie on the unit sphere");
  for (int i = 2; i < n; i++)
    if (p1.v[i] != p2.v[i])
      throw std::invalid_argument(
          "vdk_compose: v-rows must agree past the first two coordinates");

  AlgElement alpha =
      AlgElement::quaternion_from_pairs(p1.v[0], p1.v[1], p1.w[0], p1.w[1]);
  AlgElement beta =
      AlgElement::quaternion_from_pairs(p2.v[0], p2.v[1], p2.w[0], p2.w[1]);
  std::vector<RingElem> tail_v(p1.v.begin() + 2, p1.v.end());
  std::vector<RingElem> tail_w1(p1.w.begin() + 2, p1.w.end());
  std::vector<RingElem> tail_w2(p2.w.begin() + 2, p2.w.end());

  ZMatrix zx = z_matrix(alpha, tail_v, tail_w1);
  ZMatrix zy = z_matrix(beta, tail_v, tail_w2);
  ZMatrix zc = compose(zx, zy);

  const MatrixR& g = zc.alpha.quat();
  std::vector<RingElem> v3{g.at(0, 0), g.at(0, 1)};
  v3.insert(v3.end(), tail_v.begin(), tail_v.end());
  std::vector<RingElem> w3{g.at(1, 1), -g.at(1, 0)};
  w3.insert(w3.end(), zc.w.begin(), zc.w.end());

  // Independent route: (p, q) = (a1, a2) beta entrywise.
  std::vector<RingElem> head{p1.v[0], p1.v[1]};
  std::vector<RingElem> direct = row_times_matrix(head, beta.quat());
  if (v3[0] != direct[0] || v3[1] != direct[1])
    throw std::runtime_error("vdk_compose: composed row disagrees with the closed form");

  return VdkComposition{std::move(v3), std::move(w3), std::move(zc)};
}

AlgElement octonion_from_h4(const SpherePoint& p4) {
  if (p4.n() != 4)
    throw std::invalid_argument("octonion_from_h4: need a length-4 point");
  std::vector<RingElem> x{p4.v[1], p4.v[2], p4.v[3]};
  std::vector<RingElem> y{-p4.w[1], -p4.w[2], -p4.w[3]};
  return AlgElement::octonion(p4.v[0], std::move(x), std::move(y), p4.w[0]);
}

SpherePoint octonion_to_h4(const AlgElement& o) {
  auto c = o.octonion_coords();
  std::vector<RingElem> v{c[0], c[1], c[2], c[3]};
  std::vector<RingElem> w{c[7], -c[4], -c[5], -c[6]};
  return SpherePoint(o.ring(), std::move(v), std::move(w));
}

ZMatrix octonion_sphere_compose(const ZMatrix& x, const ZMatrix& y) {
  if (x.algebra != AlgebraKind::SplitOctonion ||
      y.algebra != AlgebraKind::SplitOctonion)
    throw std::invalid_argument("octonion_sphere_compose: octonion operands required");
  if (x.level() != 1 || y.level() != 1)
    throw std::invalid_argument("octonion_sphere_compose: operands must be level 1");
  if (!x.q().is_one() || !y.q().is_one())
    throw std::invalid_argument("octonion_sphere_compose: q(X) = q(Y) = 1 required");
  return compose(x, y);
}

SpherePoint h5_point(const ZMatrix& z) {
  if (z.algebra != AlgebraKind::SplitOctonion || z.level() != 1)
    throw std::invalid_argument("h5_point: need a level-1 octonion Z-matrix");
  SpherePoint inner = octonion_to_h4(z.alpha);
  std::vector<RingElem> v{z.v[0]};
  v.insert(v.end(), inner.v.begin(), inner.v.end());
  std::vector<RingElem> w{z.w[0]};
  w.insert(w.end(), inner.w.begin(), inner.w.end());
  return SpherePoint(z.alpha.ring(), std::move(v), std::move(w));
}

bool clifford_embed_check(const AlgElement& alpha,
                          const std::vector<RingElem>& v,
                          const std::vector<RingElem>& w) {
  const Ring& r = alpha.ring();
  const int n = static_cast<int>(v.size());

  auto phi = [&](const AlgElement& a, const std::vector<RingElem>& vv,
                 const std::vector<RingElem>& ww) {
    ZMatrix z = z_matrix(a, vv, ww);
    MatrixR zero(r, z.body.dim());
    return MatrixR::from_blocks(zero, z.body, z.bar_body, zero);
  };
  auto qform = [&](const AlgElement& a, const std::vector<RingElem>& vv,
                   const std::vector<RingElem>& ww) {
    return a.norm() + dot_product(vv, ww);
  };

  MatrixR f = phi(alpha, v, w);
  RingElem q = qform(alpha, v, w);
  if (f * f != MatrixR::scalar_matrix(q, f.dim())) return false;

  // Polarized law against hyperbolic basis vectors and the unit of A:
  // phi(x) phi(y) + phi(y) phi(x) = (q(x+y) - q(x) - q(y)) I.
  std::vector<std::tuple<AlgElement, std::vector<RingElem>, std::vector<RingElem>>>
      partners;
  std::vector<RingElem> zrow(n, RingElem::zero(r));
  partners.emplace_back(AlgElement::one(r, alpha.algebra()), zrow, zrow);
  for (int i = 0; i < n; i++) {
    std::vector<RingElem> e = zrow;
    e[i] = RingElem::one(r);
    partners.emplace_back(AlgElement::zero(r, alpha.algebra()), e, zrow);
    partners.emplace_back(AlgElement::zero(r, alpha.algebra()), zrow, e);
  }
  for (const auto& [pa, pv, pw] : partners) {
    MatrixR g = phi(pa, pv, pw);
    AlgElement sum_a = alpha + pa;
    std::vector<RingElem> sum_v(n, RingElem::zero(r)), sum_w = sum_v;
    for (int i = 0; i < n; i++) {
      sum_v[i] = v[i] + pv[i];
      sum_w[i] = w[i] + pw[i];
    }
    RingElem pairing = qform(sum_a, sum_v, sum_w) - q - qform(pa, pv, pw);
    if (f * g + g * f != MatrixR::scalar_matrix(pairing, f.dim())) return false;
  }

  // Rank bookkeeping: 2^(rank V) must equal (2^(n+1))^2 * rank(A) for the
  // quaternion target and (2^(n+1))^2 * rank(End(O)) for the octonion one.
  const int alg_rank = alpha.algebra() == AlgebraKind::SplitQuaternion ? 4 : 8;
  Int lhs = Int(1) << (alg_rank + 2 * n);
  Int half = Int(1) << (n + 1);
  Int rhs = half * half * (alg_rank == 4 ? 4 : 64);
  return lhs == rhs;
}

std::optional<NonAssocWitness> find_octonion_nonassoc_witness(const Ring& ring) {
  // Candidate pool: Zorn elements with scalar slots over the ring and
  // vector slots drawn from 0 and +-e_i, filtered to norm 1.
  std::vector<std::vector<RingElem>> vecs;
  std::vector<RingElem> z3(3, RingElem::zero(ring));
  vecs.push_back(z3);
  for (int i = 0; i < 3; i++) {
    auto plus = z3, minus = z3;
    plus[i] = RingElem::one(ring);
    minus[i] = -RingElem::one(ring);
    vecs.push_back(plus);
    vecs.push_back(minus);
  }
  std::vector<RingElem> scalars = enumerate_ring(ring);
  std::vector<AlgElement> pool;
  for (const auto& a : scalars)
    for (const auto& b : scalars)
      for (const auto& x : vecs)
        for (const auto& y : vecs) {
          AlgElement o = AlgElement::octonion(a, x, y, b);
          if (o.norm().is_one()) pool.push_back(std::move(o));
        }
  for (const auto& o1 : pool)
    for (const auto& o2 : pool)
      for (const auto& o3 : pool)
        if ((o1 * o2) * o3 != o1 * (o2 * o3))
          return NonAssocWitness{o1, o2, o3};
  return std::nullopt;
}

}  // namespace forge
