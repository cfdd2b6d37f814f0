#pragma once

#include <random>

#include "forge/ring.hpp"

namespace forge {

/// Deterministic element sampling. All verification sweeps draw through
/// this so that a seed pins down the whole run. Conventions: uniform in
/// [-9, 9] over the integers, uniform over Z/m, and random degree-1
/// polynomials with base-ring coefficients otherwise.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)
  Int integer_in(long lo, long hi);

  RingElem element(const Ring& r);
  std::vector<RingElem> row(const Ring& r, int n);

  /// Point (v, w) of H(R^n) with no constraint on v.w^T.
  std::pair<std::vector<RingElem>, std::vector<RingElem>> point(const Ring& r,
                                                                int n);

  /// Unit-sphere point: v.w^T = 1. Uses gcd arithmetic over Z and Z/m;
  /// over other rings falls back to the v_1 = 1 patch.
  std::pair<std::vector<RingElem>, std::vector<RingElem>> sphere_point(
      const Ring& r, int n);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Solve v.w^T = 1 over Z/m by iterated extended gcd; empty result when v
/// is not unimodular.
std::optional<std::vector<Int>> solve_unimodular_zmod(const std::vector<Int>& v,
                                                      const Int& m);

}  // namespace forge
