#pragma once

#include <functional>

#include "forge/suslin.hpp"

namespace forge {

/// Finest partition of a finite point set closed under a generator action.
/// Classes are sorted by smallest member, members sorted ascending, so the
/// partition is independent of the order the closure was computed in.
struct OrbitPartition {
  std::vector<std::string> universe;       // canonical point serializations
  std::vector<std::vector<int>> classes;   // disjoint index sets
  std::string generator_set;

  int class_of(int point_index) const;
};

/// Executable form of the orbit correspondence: the unimodular-row classes
/// against the unit-sphere classes, with the induced map and its verdict.
struct BijectionReport {
  Ring ring;
  int n;
  int um_orbit_count = 0;
  int sphere_orbit_count = 0;
  std::vector<int> witness_map;  // um class index -> sphere class index
  bool ok = false;
};

/// All rows v in R^n admitting a solution of v.w^T = 1. Over Z/m this is
/// decided by gcd arithmetic; over other enumerable rings by exhaustive
/// w-search inside the declared enumeration window.
std::vector<std::vector<RingElem>> enumerate_um(const Ring& ring, int n,
                                                const Int& budget = Int(1000000));

std::vector<SpherePoint> enumerate_sphere(const Ring& ring, int n,
                                          const Int& budget = Int(1000000));

/// Closure under a total action universe x generator -> universe. The
/// action is supplied as a function from point index and generator index
/// to point index; `num_generators` bounds the generator index.
OrbitPartition orbit_partition(
    const std::vector<std::string>& universe, int num_generators,
    const std::function<int(int point, int generator)>& action,
    std::string generator_set_name);

/// Row-side partition: Um_n(R) under all E_ij(lambda).
OrbitPartition um_orbits(const Ring& ring, int n, const Int& budget = Int(1000000));
/// Sphere-side partition: U_{2n-1}(R) under all elementary orthogonal
/// generators (the sphere orbits of the elementary Spin group coincide
/// with these).
OrbitPartition sphere_orbits(const Ring& ring, int n,
                             const Int& budget = Int(1000000));

BijectionReport bijection_check(const Ring& ring, int n,
                                const Int& budget = Int(1000000));

std::string serialize_row(const std::vector<RingElem>& row);
std::string serialize_point(const SpherePoint& p);

}  // namespace forge
