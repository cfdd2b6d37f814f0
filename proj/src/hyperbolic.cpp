#include "forge/hyperbolic.hpp"

#include <stdexcept>

namespace forge {

RingElem q_form(const SpherePoint& p) { return p.q(); }

RingElem bilinear(const SpherePoint& p1, const SpherePoint& p2) {
  if (p1.n() != p2.n())
    throw std::invalid_argument("bilinear: length mismatch");
  return dot_product(p1.v, p2.w) + dot_product(p2.v, p1.w);
}

CliffordImage phi_embed(const SpherePoint& p) {
  if (p.n() < 2) throw std::invalid_argument("phi_embed: need n >= 2");
  MatrixR s = suslin_body(p);
  MatrixR sbar = suslin_bar_body(p);
  MatrixR zero(p.ring, s.dim());
  return CliffordImage{p.n(), MatrixR::from_blocks(zero, s, sbar, zero)};
}

bool is_block_diagonal(const MatrixR& m) {
  int h = m.dim() / 2;
  return m.block(0, h, h).is_zero() && m.block(h, 0, h).is_zero();
}

bool is_block_off_diagonal(const MatrixR& m) {
  int h = m.dim() / 2;
  return m.block(0, 0, h).is_zero() && m.block(h, h, h).is_zero();
}

}  // namespace forge
