#include "forge/epin.hpp"

#include <stdexcept>

namespace forge {

namespace {

MatrixR rank_one_update(const Ring& ring, const std::vector<RingElem>& col,
                        const std::vector<RingElem>& row, bool subtract) {
  const int n = static_cast<int>(col.size());
  MatrixR m = MatrixR::identity(ring, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      RingElem t = col[i] * row[j];
      m.set(i, j, subtract ? m.at(i, j) - t : m.at(i, j) + t);
    }
  return m;
}

std::vector<RingElem> sub_rows(const std::vector<RingElem>& a,
                               const std::vector<RingElem>& b) {
  std::vector<RingElem> out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); i++) out.push_back(a[i] - b[i]);
  return out;
}

}  // namespace

ElemMatrix elem_identity(const Ring& ring, int n) {
  return ElemMatrix{n, MatrixR::identity(ring, n), {}};
}

ElemMatrix elem_generator(const Ring& ring, int i, int j, const RingElem& lambda,
                          int n) {
  if (i == j) throw std::invalid_argument("elem_generator: i == j");
  if (i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("elem_generator: index out of range");
  MatrixR m = MatrixR::identity(ring, n);
  m.set(i - 1, j - 1, m.at(i - 1, j - 1) + lambda);
  return ElemMatrix{n, std::move(m), {ElemFactor{i, j, lambda}}};
}

ElemMatrix elem_compose(const ElemMatrix& a, const ElemMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("elem_compose: size mismatch");
  ElemMatrix out{a.n, a.body * b.body, a.word};
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

MatrixR elem_transpose_inverse(const ElemMatrix& e) {
  // (AB)^{T,-1} = A^{T,-1} B^{T,-1}, factor by factor.
  MatrixR out = MatrixR::identity(e.body.ring(), e.n);
  for (const auto& f : e.word) {
    if (std::holds_alternative<ElemFactor>(f)) {
      const auto& ef = std::get<ElemFactor>(f);
      out = out * elem_generator(e.body.ring(), ef.j, ef.i, -ef.lambda, e.n).body;
    } else {
      out = out * std::get<WitnessFactor>(f).body_tinv;
    }
  }
  return out;
}

int eo_partner(int index, int n) {
  // The permutation (1 n+1)(2 n+2)...(n 2n) applied as a product of
  // transpositions.
  int result = index;
  for (int k = 1; k <= n; k++) {
    if (result == k)
      result = n + k;
    else if (result == n + k)
      result = k;
  }
  return result;
}

EOMatrix eo_generator(const Ring& ring, int i, int j, const RingElem& lambda,
                      int n) {
  if (i == j) throw std::invalid_argument("eo_generator: i == j");
  if (i < 1 || j < 1 || i > 2 * n || j > 2 * n)
    throw std::invalid_argument("eo_generator: index out of range");
  MatrixR m = MatrixR::identity(ring, 2 * n);
  const int pi = eo_partner(i, n), pj = eo_partner(j, n);
  // I + lambda(e_ij - e_{d(j)d(i)}); for j = d(i) the two terms cancel.
  m.set(i - 1, j - 1, m.at(i - 1, j - 1) + lambda);
  m.set(pj - 1, pi - 1, m.at(pj - 1, pi - 1) - lambda);
  return EOMatrix{n, std::move(m), {ElemFactor{i, j, lambda}}};
}

EOMatrix eo_compose(const EOMatrix& a, const EOMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("eo_compose: size mismatch");
  EOMatrix out{a.n, a.body * b.body, a.word};
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

MatrixR hyperbolic_embed(const ElemMatrix& eps) {
  MatrixR tinv = elem_transpose_inverse(eps);
  MatrixR zero(eps.body.ring(), eps.n);
  return MatrixR::from_blocks(eps.body, zero, zero, tinv);
}

namespace {

void validate_generator(const EpinGenerator& g) {
  if (g.n < 3) throw std::invalid_argument("epin generator: need n >= 3");
  if (g.second_index < 2 || g.second_index > g.n)
    throw std::invalid_argument("epin generator: second index must be in 2..n");
}

}  // namespace

MatrixR epin_top_block(const EpinGenerator& g) {
  validate_generator(g);
  const Ring& r = g.lambda.ring();
  BasisUnit x1 = basis_unit(r, g.first == FirstSlot::E1 ? BasisKind::E : BasisKind::F, 1, g.n);
  BasisUnit xi = basis_unit(r, g.second_kind, g.second_index, g.n);
  MatrixR prod = (x1.body * xi.body).scaled(g.lambda);
  return MatrixR::identity(r, prod.dim()) - prod;
}

MatrixR epin_matrix(const EpinGenerator& g) {
  validate_generator(g);
  const Ring& r = g.lambda.ring();
  BasisUnit x1 = basis_unit(r, g.first == FirstSlot::E1 ? BasisKind::E : BasisKind::F, 1, g.n);
  BasisUnit xi = basis_unit(r, g.second_kind, g.second_index, g.n);
  MatrixR x1b = basis_unit_bar(x1);
  MatrixR xib = basis_unit_bar(xi);
  const int h = x1.body.dim();
  MatrixR top = MatrixR::identity(r, h) - (x1.body * xi.body).scaled(g.lambda);
  MatrixR bottom = MatrixR::identity(r, h) - (x1b * xib).scaled(g.lambda);
  MatrixR zero(r, h);
  return MatrixR::from_blocks(top, zero, zero, bottom);
}

EpinGenerator epin_inverse(const EpinGenerator& g) {
  EpinGenerator inv = g;
  inv.lambda = -g.lambda;
  return inv;
}

SpherePoint act_on_point(const EpinGenerator& g, const SpherePoint& p) {
  if (p.n() != g.n)
    throw std::invalid_argument("act_on_point: point length mismatch");
  MatrixR gm = epin_matrix(g);
  MatrixR gm_inv = epin_matrix(epin_inverse(g));
  MatrixR conj = gm * phi_embed(p).body * gm_inv;
  if (!is_block_off_diagonal(conj))
    throw std::runtime_error("act_on_point: conjugate has nonzero diagonal blocks");
  const int h = conj.dim() / 2;
  return suslin_extract(conj.block(0, h, h), conj.block(h, 0, h));
}

SpherePoint act_closed_form(const EpinGenerator& g, const SpherePoint& p) {
  if (p.n() != g.n)
    throw std::invalid_argument("act_closed_form: point length mismatch");
  validate_generator(g);
  std::vector<RingElem> v = p.v, w = p.w;
  const RingElem& lam = g.lambda;
  const int i = g.second_index - 1;
  if (g.first == FirstSlot::E1 && g.second_kind == BasisKind::E) {
    v[0] = p.v[0] + lam * p.w[i];
    v[i] = p.v[i] - lam * p.w[0];
  } else if (g.first == FirstSlot::E1 && g.second_kind == BasisKind::F) {
    v[0] = p.v[0] + lam * p.v[i];
    w[i] = p.w[i] - lam * p.w[0];
  } else if (g.first == FirstSlot::F1 && g.second_kind == BasisKind::E) {
    v[i] = p.v[i] - lam * p.v[0];
    w[0] = p.w[0] + lam * p.w[i];
  } else {
    w[i] = p.w[i] - lam * p.v[0];
    w[0] = p.w[0] + lam * p.v[i];
  }
  return SpherePoint(p.ring, std::move(v), std::move(w));
}

namespace {

// Per-generator sigma with (v sigma, w sigma^{T,-1}) = p_next, built at the
// current point. Two of the four generator shapes admit a literal elementary
// factor; the other two need the rank-one witnesses, which is where q = 1
// enters.
ElemMatrix sigma_for_step(const EpinGenerator& g, const SpherePoint& p_cur,
                          const SpherePoint& p_next) {
  const Ring& r = p_cur.ring;
  const int n = p_cur.n();
  if (g.first == FirstSlot::F1 && g.second_kind == BasisKind::E)
    return elem_generator(r, 1, g.second_index, -g.lambda, n);
  if (g.first == FirstSlot::E1 && g.second_kind == BasisKind::F)
    return elem_generator(r, g.second_index, 1, g.lambda, n);
  if (g.first == FirstSlot::E1 && g.second_kind == BasisKind::E) {
    // sigma = I + w^T (v' - v), sigma^{T,-1} = I - (v' - v)^T w.
    std::vector<RingElem> diff = sub_rows(p_next.v, p_cur.v);
    WitnessFactor wf{rank_one_update(r, p_cur.w, diff, false),
                     rank_one_update(r, diff, p_cur.w, true),
                     "rank-one unimodular witness I + w^T(v'-v)"};
    return ElemMatrix{n, wf.body, {std::move(wf)}};
  }
  // F1/F: v is fixed and w moves; sigma = I - (w' - w)^T v.
  std::vector<RingElem> diff = sub_rows(p_next.w, p_cur.w);
  WitnessFactor wf{rank_one_update(r, diff, p_cur.v, true),
                   rank_one_update(r, p_cur.v, diff, false),
                   "rank-one unimodular witness I - (w'-w)^T v"};
  return ElemMatrix{n, wf.body, {std::move(wf)}};
}

}  // namespace

std::pair<SpherePoint, ElemMatrix> extract_sigma(
    const std::vector<EpinGenerator>& word, const SpherePoint& p) {
  if (!p.on_unit_sphere())
    throw std::invalid_argument("extract_sigma: point must satisfy v.w^T = 1");
  SpherePoint cur = p;
  ElemMatrix sigma = elem_identity(p.ring, p.n());
  for (const auto& g : word) {
    SpherePoint next = act_on_point(g, cur);
    ElemMatrix step = sigma_for_step(g, cur, next);
    sigma = elem_compose(sigma, step);
    cur = next;
  }
  if (row_times_matrix(p.v, sigma.body) != cur.v ||
      row_times_matrix(p.w, elem_transpose_inverse(sigma)) != cur.w)
    throw std::runtime_error("extract_sigma: sigma does not reproduce the action");
  return {cur, sigma};
}

TransitiveWitness transitive_witness(const std::vector<RingElem>& v,
                                     const std::vector<RingElem>& w1,
                                     const std::vector<RingElem>& w2) {
  if (v.size() < 3)
    throw std::invalid_argument("transitive_witness: need n >= 3");
  if (v.size() != w1.size() || v.size() != w2.size())
    throw std::invalid_argument("transitive_witness: length mismatch");
  if (!dot_product(v, w1).is_one() || !dot_product(v, w2).is_one())
    throw std::invalid_argument("transitive_witness: both products must be 1");
  const Ring& r = v[0].ring();
  const int n = static_cast<int>(v.size());
  std::vector<RingElem> diff = sub_rows(w2, w1);
  MatrixR eps = rank_one_update(r, v, diff, false);       // I + v^T (w2 - w1)
  MatrixR eps_tinv = rank_one_update(r, diff, v, true);   // I - (w2 - w1)^T v
  WitnessFactor wf{eps, eps_tinv, "rank-one unimodular witness I + v^T(w2-w1)"};
  ElemMatrix em{n, eps, {std::move(wf)}};
  MatrixR zero(r, n);
  MatrixR orth = MatrixR::from_blocks(eps_tinv, zero, zero, eps);
  return TransitiveWitness{std::move(em), std::move(orth)};
}

}  // namespace forge
