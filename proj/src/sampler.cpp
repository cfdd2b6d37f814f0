#include "forge/sampler.hpp"

#include <stdexcept>

namespace forge {

namespace {

// Extended gcd: returns g = gcd(a, b) and x, y with a x + b y = g.
Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::optional<std::vector<Int>> solve_unimodular_zmod(const std::vector<Int>& v,
                                                      const Int& m) {
  // Running Bezout combination: g = sum c_i v_i (over Z).
  Int g = 0;
  std::vector<Int> c(v.size(), Int(0));
  for (size_t i = 0; i < v.size(); i++) {
    Int x, y;
    Int g2 = egcd(g, v[i], x, y);
    for (size_t j = 0; j < i; j++) c[j] *= x;
    c[i] = y;
    g = g2;
  }
  Int x, y;
  Int t = egcd(g, m, x, y);
  if (t != 1) return std::nullopt;
  // g*x = 1 (mod m), so w = x*c solves v.w^T = 1 (mod m).
  std::vector<Int> w(v.size());
  for (size_t i = 0; i < v.size(); i++) {
    w[i] = (c[i] * x) % m;
    if (w[i] < 0) w[i] += m;
  }
  return w;
}

std::uint64_t Sampler::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: zero bound");
  return rng_() % bound;
}

Int Sampler::integer_in(long lo, long hi) {
  return Int(lo + static_cast<long>(uniform(static_cast<std::uint64_t>(hi - lo + 1))));
}

RingElem Sampler::element(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Integers:
      return RingElem::from_int(r, integer_in(-9, 9));
    case RingKind::Modular: {
      if (r.modulus() > 1000000000)
        throw std::invalid_argument("sampler: modulus too large");
      std::uint64_t m = r.modulus().convert_to<std::uint64_t>();
      return RingElem::from_int(r, Int(uniform(m)));
    }
    case RingKind::Polynomial: {
      // Random degree-1 element: c_0 + sum c_i x_i.
      Ring base = r.base();
      RingElem acc = RingElem::from_int(r, base.is_modular()
                                               ? Int(uniform(base.modulus().convert_to<std::uint64_t>()))
                                               : integer_in(-9, 9));
      for (int i = 1; i <= r.num_vars(); i++) {
        Int c = base.is_modular()
                    ? Int(uniform(base.modulus().convert_to<std::uint64_t>()))
                    : integer_in(-9, 9);
        acc = acc + RingElem::from_int(r, c) * RingElem::variable(r, i);
      }
      return acc;
    }
  }
  throw std::logic_error("element: bad ring kind");
}

std::vector<RingElem> Sampler::row(const Ring& r, int n) {
  std::vector<RingElem> out;
  out.reserve(n);
  for (int i = 0; i < n; i++) out.push_back(element(r));
  return out;
}

std::pair<std::vector<RingElem>, std::vector<RingElem>> Sampler::point(
    const Ring& r, int n) {
  return {row(r, n), row(r, n)};
}

std::pair<std::vector<RingElem>, std::vector<RingElem>> Sampler::sphere_point(
    const Ring& r, int n) {
  const RingElem one = RingElem::one(r);
  if (r.is_modular()) {
    const Int& m = r.modulus();
    for (int attempt = 0; attempt < 1000; attempt++) {
      std::vector<RingElem> v = row(r, n);
      std::vector<Int> vi;
      for (const auto& e : v) vi.push_back(e.scalar());
      auto particular = solve_unimodular_zmod(vi, m);
      if (!particular) continue;
      // Prefer a uniformly drawn solution; fall back to the gcd witness.
      for (int tries = 0; tries < 200; tries++) {
        std::vector<RingElem> w = row(r, n);
        if (dot_product(v, w) == one) return {v, w};
      }
      std::vector<RingElem> w;
      for (const auto& b : *particular) w.push_back(RingElem::from_int(r, b));
      return {v, w};
    }
    throw std::runtime_error("sphere_point: no unimodular row found");
  }
  if (r.is_integers()) {
    for (int attempt = 0; attempt < 1000; attempt++) {
      std::vector<Int> vi;
      for (int i = 0; i < n; i++) vi.push_back(integer_in(-9, 9));
      Int g = 0;
      for (const auto& a : vi) g = boost::multiprecision::gcd(g, a);
      if (g != 1) continue;
      // Bezout chain: w with sum v_i w_i = 1 over Z.
      Int acc = 0;
      std::vector<Int> c(vi.size(), Int(0));
      for (size_t i = 0; i < vi.size(); i++) {
        Int x, y;
        Int g2 = egcd(acc, vi[i], x, y);
        for (size_t j = 0; j < i; j++) c[j] *= x;
        c[i] = y;
        acc = g2;
      }
      // Randomize within the solution set: w += t * (a_j e_i - a_i e_j).
      for (int k = 0; k < 3; k++) {
        size_t i = uniform(vi.size());
        size_t j = uniform(vi.size());
        if (i == j) continue;
        Int t = integer_in(-3, 3);
        c[i] += t * vi[j];
        c[j] -= t * vi[i];
      }
      std::vector<RingElem> v, w;
      for (const auto& a : vi) v.push_back(RingElem::from_int(r, a));
      for (const auto& b : c) w.push_back(RingElem::from_int(r, b));
      return {v, w};
    }
    throw std::runtime_error("sphere_point: no unimodular row found");
  }
  // Generic ring: affine patch v_1 = 1, w_1 balancing the rest.
  std::vector<RingElem> v = row(r, n);
  std::vector<RingElem> w = row(r, n);
  v[0] = one;
  RingElem rest = RingElem::zero(r);
  for (int i = 1; i < n; i++) rest = rest + v[i] * w[i];
  w[0] = one - rest;
  return {v, w};
}

}  // namespace forge
