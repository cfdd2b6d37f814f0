#include "forge/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "forge/epin.hpp"
#include "forge/sampler.hpp"

namespace forge {

namespace {

Int pow_int(const Int& base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; i++) r *= base;
  return r;
}

void require_budget(const Ring& ring, int exponent, const Int& budget,
                    const char* what) {
  if (!ring.enumerable())
    throw std::invalid_argument(std::string(what) + ": ring is not enumerable");
  if (pow_int(ring.element_count(), exponent) > budget)
    throw std::invalid_argument(std::string(what) + ": enumeration budget exceeded");
}

// Iterate all vectors in R^n via an odometer over the element list.
template <typename Fn>
void for_each_vector(const std::vector<RingElem>& elems, int n, Fn&& fn) {
  std::vector<size_t> idx(n, 0);
  std::vector<RingElem> vec(n, elems[0]);
  while (true) {
    fn(const_cast<const std::vector<RingElem>&>(vec));
    int pos = n - 1;
    while (pos >= 0) {
      idx[pos]++;
      if (idx[pos] < elems.size()) {
        vec[pos] = elems[idx[pos]];
        break;
      }
      idx[pos] = 0;
      vec[pos] = elems[0];
      pos--;
    }
    if (pos < 0) break;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; i++) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // root at the smaller index: order-free result
    parent[b] = a;
  }
};

}  // namespace

std::string serialize_row(const std::vector<RingElem>& row) {
  std::string s;
  for (const auto& e : row) e.canonical_bytes(s);
  return s;
}

std::string serialize_point(const SpherePoint& p) {
  std::string s = serialize_row(p.v);
  s.push_back('|');
  s += serialize_row(p.w);
  return s;
}

int OrbitPartition::class_of(int point_index) const {
  for (size_t c = 0; c < classes.size(); c++)
    for (int m : classes[c])
      if (m == point_index) return static_cast<int>(c);
  throw std::invalid_argument("class_of: index not in partition");
}

std::vector<std::vector<RingElem>> enumerate_um(const Ring& ring, int n,
                                                const Int& budget) {
  require_budget(ring, n, budget, "enumerate_um");
  std::vector<RingElem> elems = enumerate_ring(ring);
  std::vector<std::vector<RingElem>> out;

  if (ring.is_modular()) {
    const Int& m = ring.modulus();
    for_each_vector(elems, n, [&](const std::vector<RingElem>& v) {
      std::vector<Int> vi;
      for (const auto& e : v) vi.push_back(e.scalar());
      if (solve_unimodular_zmod(vi, m)) out.push_back(v);
    });
    return out;
  }
  // Exhaustive w-search within the enumeration window.
  require_budget(ring, 2 * n, budget, "enumerate_um (w-search)");
  const RingElem one = RingElem::one(ring);
  for_each_vector(elems, n, [&](const std::vector<RingElem>& v) {
    bool found = false;
    for_each_vector(elems, n, [&](const std::vector<RingElem>& w) {
      if (!found && dot_product(v, w) == one) found = true;
    });
    if (found) out.push_back(v);
  });
  return out;
}

std::vector<SpherePoint> enumerate_sphere(const Ring& ring, int n,
                                          const Int& budget) {
  require_budget(ring, 2 * n, budget, "enumerate_sphere");
  std::vector<RingElem> elems = enumerate_ring(ring);
  const RingElem one = RingElem::one(ring);
  std::vector<SpherePoint> out;
  for_each_vector(elems, n, [&](const std::vector<RingElem>& v) {
    for_each_vector(elems, n, [&](const std::vector<RingElem>& w) {
      if (dot_product(v, w) == one) out.emplace_back(ring, v, w);
    });
  });
  return out;
}

OrbitPartition orbit_partition(
    const std::vector<std::string>& universe, int num_generators,
    const std::function<int(int point, int generator)>& action,
    std::string generator_set_name) {
  const int n = static_cast<int>(universe.size());
  UnionFind uf(n);
  for (int p = 0; p < n; p++)
    for (int g = 0; g < num_generators; g++) {
      int q = action(p, g);
      if (q < 0 || q >= n)
        throw std::runtime_error("orbit_partition: action left the universe");
      uf.join(p, q);
    }
  std::map<int, std::vector<int>> by_root;
  for (int p = 0; p < n; p++) by_root[uf.find(p)].push_back(p);
  OrbitPartition part;
  part.universe = universe;
  part.generator_set = std::move(generator_set_name);
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    part.classes.push_back(std::move(members));
  }
  return part;
}

namespace {

struct RowUniverse {
  std::vector<std::vector<RingElem>> rows;
  std::unordered_map<std::string, int> index;
};

RowUniverse index_rows(std::vector<std::vector<RingElem>> rows) {
  RowUniverse u;
  u.rows = std::move(rows);
  for (size_t i = 0; i < u.rows.size(); i++)
    u.index[serialize_row(u.rows[i])] = static_cast<int>(i);
  return u;
}

struct Gen {
  int i, j;
  RingElem lambda;
};

std::vector<Gen> all_generators(const std::vector<RingElem>& elems, int size) {
  std::vector<Gen> gens;
  for (int i = 1; i <= size; i++)
    for (int j = 1; j <= size; j++) {
      if (i == j) continue;
      for (const auto& lam : elems)
        if (!lam.is_zero()) gens.push_back({i, j, lam});
    }
  return gens;
}

}  // namespace

OrbitPartition um_orbits(const Ring& ring, int n, const Int& budget) {
  RowUniverse u = index_rows(enumerate_um(ring, n, budget));
  std::vector<Gen> gens = all_generators(enumerate_ring(ring), n);
  std::vector<std::string> names;
  names.reserve(u.rows.size());
  for (const auto& r : u.rows) names.push_back(serialize_row(r));
  auto action = [&](int p, int g) {
    const Gen& gen = gens[g];
    std::vector<RingElem> v = u.rows[p];
    v[gen.j - 1] = v[gen.j - 1] + gen.lambda * u.rows[p][gen.i - 1];
    auto it = u.index.find(serialize_row(v));
    return it == u.index.end() ? -1 : it->second;
  };
  return orbit_partition(names, static_cast<int>(gens.size()), action,
                         "elementary E_ij(lambda), all lambda in R");
}

OrbitPartition sphere_orbits(const Ring& ring, int n, const Int& budget) {
  std::vector<SpherePoint> pts = enumerate_sphere(ring, n, budget);
  std::unordered_map<std::string, int> index;
  std::vector<std::string> names;
  names.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); i++) {
    names.push_back(serialize_point(pts[i]));
    index[names.back()] = static_cast<int>(i);
  }
  std::vector<Gen> gens = all_generators(enumerate_ring(ring), 2 * n);
  auto action = [&](int pi, int g) {
    const Gen& gen = gens[g];
    const SpherePoint& p = pts[pi];
    std::vector<RingElem> x = p.v;
    x.insert(x.end(), p.w.begin(), p.w.end());
    const int di = eo_partner(gen.i, n), dj = eo_partner(gen.j, n);
    // x E0_ij(lambda): coordinate j gains lambda x_i, coordinate d(i)
    // loses lambda x_{d(j)}.
    RingElem xi = x[gen.i - 1], xdj = x[dj - 1];
    x[gen.j - 1] = x[gen.j - 1] + gen.lambda * xi;
    x[di - 1] = x[di - 1] - gen.lambda * xdj;
    SpherePoint moved(ring, {x.begin(), x.begin() + n}, {x.begin() + n, x.end()});
    auto it = index.find(serialize_point(moved));
    return it == index.end() ? -1 : it->second;
  };
  return orbit_partition(names, static_cast<int>(gens.size()), action,
                         "elementary orthogonal E0_ij(lambda), all lambda in R");
}

BijectionReport bijection_check(const Ring& ring, int n, const Int& budget) {
  if (n < 3) throw std::invalid_argument("bijection_check: need n >= 3");
  BijectionReport rep{ring, n, 0, 0, {}, false};

  RowUniverse um = index_rows(enumerate_um(ring, n, budget));
  OrbitPartition um_part = um_orbits(ring, n, budget);
  std::vector<SpherePoint> pts = enumerate_sphere(ring, n, budget);
  OrbitPartition sp_part = sphere_orbits(ring, n, budget);

  rep.um_orbit_count = static_cast<int>(um_part.classes.size());
  rep.sphere_orbit_count = static_cast<int>(sp_part.classes.size());

  std::vector<int> um_class(um.rows.size()), sp_class(pts.size());
  for (size_t c = 0; c < um_part.classes.size(); c++)
    for (int m : um_part.classes[c]) um_class[m] = static_cast<int>(c);
  for (size_t c = 0; c < sp_part.classes.size(); c++)
    for (int m : sp_part.classes[c]) sp_class[m] = static_cast<int>(c);

  // Each sphere point projects to its v-row; the induced map on classes is
  // well defined iff every um class sees exactly one sphere class across
  // all its lifts.
  std::vector<std::set<int>> lifts(um_part.classes.size());
  for (size_t i = 0; i < pts.size(); i++) {
    auto it = um.index.find(serialize_row(pts[i].v));
    if (it == um.index.end())
      throw std::runtime_error("bijection_check: sphere point with non-unimodular row");
    lifts[um_class[it->second]].insert(sp_class[i]);
  }
  bool well_defined = true;
  std::set<int> image;
  for (const auto& s : lifts) {
    if (s.size() != 1) well_defined = false;
    rep.witness_map.push_back(s.empty() ? -1 : *s.begin());
    for (int c : s) image.insert(c);
  }
  const bool injective = well_defined && image.size() == um_part.classes.size();
  const bool surjective = image.size() == sp_part.classes.size();
  rep.ok = well_defined && injective && surjective &&
           rep.um_orbit_count == rep.sphere_orbit_count;
  return rep;
}

}  // namespace forge
