#include "doctest.h"

#include <random>
#include <set>

#include "symspace/cones.hpp"
#include "symspace/hilbert_kernel.hpp"

using namespace symspace;

namespace {

IntVec vec(std::vector<long> entries) {
  IntVec v;
  for (long e : entries) v.push_back(Int(e));
  return v;
}

std::vector<IntVec> vecs(std::vector<std::vector<long>> rows) {
  std::vector<IntVec> out;
  for (auto& r : rows) out.push_back(vec(r));
  return out;
}

// brute-force Hilbert basis over Z^n: all nonzero cone points inside the box
// bounded by twice the componentwise sum of absolute ray entries, reduced to
// the irreducible ones
std::vector<IntVec> hilbert_oracle(const Cone& c) {
  const int n = c.ambient_rank;
  std::vector<long> box(static_cast<size_t>(n), 0);
  for (const auto& r : c.rays)
    for (int j = 0; j < n; ++j) box[static_cast<size_t>(j)] += 2 * std::abs(static_cast<long>(r[static_cast<size_t>(j)].get_si()));
  std::vector<IntVec> points;
  std::vector<long> cur(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) cur[static_cast<size_t>(j)] = -box[static_cast<size_t>(j)];
  while (true) {
    IntVec x(static_cast<size_t>(n));
    bool zero = true;
    for (int j = 0; j < n; ++j) {
      x[static_cast<size_t>(j)] = cur[static_cast<size_t>(j)];
      zero = zero && cur[static_cast<size_t>(j)] == 0;
    }
    if (!zero && cone_contains(c, x)) points.push_back(x);
    int k = n - 1;
    while (k >= 0 && cur[static_cast<size_t>(k)] == box[static_cast<size_t>(k)]) {
      cur[static_cast<size_t>(k)] = -box[static_cast<size_t>(k)];
      --k;
    }
    if (k < 0) break;
    ++cur[static_cast<size_t>(k)];
  }
  std::vector<IntVec> irreducible;
  for (const auto& x : points) {
    bool red = false;
    for (const auto& y : points) {
      if (y == x) continue;
      IntVec z = vec_sub(x, y);
      if (!is_zero(z) && cone_contains(c, z)) {
        red = true;
        break;
      }
    }
    if (!red) irreducible.push_back(x);
  }
  std::sort(irreducible.begin(), irreducible.end());
  return irreducible;
}

}  // namespace

TEST_CASE("dual description of fixed cones") {
  Cone quadrant = cone_from_generators(2, vecs({{1, 0}, {0, 1}}));
  CHECK(quadrant.rays == vecs({{0, 1}, {1, 0}}));
  CHECK(quadrant.facets == vecs({{0, 1}, {1, 0}}));
  CHECK(quadrant.dim == 2);

  Cone wedge = cone_from_generators(2, vecs({{1, 0}, {1, 2}}));
  CHECK(wedge.facets == vecs({{0, 1}, {2, -1}}));
  for (const auto& r : wedge.rays) {
    int saturated = 0;
    for (const auto& f : wedge.facets)
      if (dot(f, r) == 0) ++saturated;
    CHECK(saturated >= 1);
  }

  // a line: 1-dimensional lineality cone in rank 2
  Cone line = cone_from_generators(2, vecs({{1, 0}, {-1, 0}}));
  CHECK(line.facets == vecs({{0, -1}, {0, 1}}));
  CHECK(line.rays == vecs({{-1, 0}, {1, 0}}));
  CHECK(line.dim == 1);
  CHECK(!is_pointed(line));
  CHECK(is_pointed(quadrant));
}

TEST_CASE("degenerate cones") {
  Cone zero = cone_from_generators(2, std::vector<IntVec>{});
  CHECK(zero.rays.empty());
  CHECK(zero.dim == 0);
  CHECK(cone_contains(zero, vec({0, 0})));
  CHECK(!cone_contains(zero, vec({1, 0})));

  Cone all = cone_from_inequalities(2, std::vector<IntVec>{});
  CHECK(all.dim == 2);
  CHECK(cone_contains(all, vec({-3, 5})));
}

TEST_CASE("interior generators are dropped") {
  Cone c = cone_from_generators(2, vecs({{1, 0}, {1, 1}, {1, 2}}));
  CHECK(c.rays == vecs({{1, 0}, {1, 2}}));
  // (1,1) lies in no proper face
  for (const Face& f : faces(c)) {
    if (f.ray_set.size() == c.rays.size()) continue;
    bool on_face = true;
    for (int j : f.facet_set)
      if (dot(c.facets[static_cast<size_t>(j)], vec({1, 1})) != 0) on_face = false;
    CHECK(!on_face);
  }
}

TEST_CASE("face lattice") {
  Cone wedge = cone_from_generators(2, vecs({{1, 0}, {1, 2}}));
  CHECK(faces(wedge).size() == 4);

  Cone octant = cone_from_generators(3, vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto fs = faces(octant);
  CHECK(fs.size() == 8);
  // 2^d faces of a simplicial pointed d-cone, each one an intersection
  for (const Face& f : fs) {
    std::set<int> rays(f.ray_set.begin(), f.ray_set.end());
    for (size_t j = 0; j < octant.facets.size(); ++j) {
      bool vanishes = true;
      for (int r : f.ray_set)
        if (dot(octant.facets[j], octant.rays[static_cast<size_t>(r)]) != 0) vanishes = false;
      CHECK(vanishes == std::binary_search(f.facet_set.begin(), f.facet_set.end(), static_cast<int>(j)));
    }
  }
}

TEST_CASE("containment") {
  Cone quadrant = cone_from_generators(2, vecs({{1, 0}, {0, 1}}));
  CHECK(cone_contains(quadrant, vec({3, 5})));
  CHECK(!cone_contains(quadrant, vec({-1, 0})));
  Cone wedge = cone_from_generators(2, vecs({{1, 2}, {1, 0}}));
  CHECK(cone_contains(wedge, vec({1, 1})));
  for (const auto& r : wedge.rays) CHECK(cone_contains(wedge, r));
  CHECK_THROWS(cone_contains(wedge, vec({1})));
}

TEST_CASE("duality round-trip on random cones") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> entry(-4, 4), nrays(1, 5), dim(1, 4);
  for (int t = 0; t < 80; ++t) {
    const int n = dim(rng);
    std::vector<IntVec> gens;
    for (int g = 0; g < nrays(rng); ++g) {
      IntVec v(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = entry(rng);
      gens.push_back(v);
    }
    Cone c = cone_from_generators(n, gens);
    Cone again = cone_from_generators(n, c.rays);
    CHECK(again.rays == c.rays);
    CHECK(again.facets == c.facets);
    Cone via_facets = cone_from_inequalities(n, c.facets);
    CHECK(via_facets.rays == c.rays);
    CHECK(via_facets.facets == c.facets);
    for (const auto& g : gens) CHECK(cone_contains(c, g));
    for (const auto& r : c.rays) CHECK(cone_contains(c, r));
  }
}

TEST_CASE("hilbert basis of fixed cones") {
  Cone wedge = cone_from_generators(2, vecs({{1, 0}, {1, 2}}));
  HilbertBasis hb = hilbert_basis(wedge, standard_lattice(2));
  CHECK(hb.elements == vecs({{1, 0}, {1, 1}, {1, 2}}));

  Cone halfline = cone_from_generators(1, vecs({{1}}));
  LatticeBasis two = lattice_from_generators(1, {vec({2})});
  CHECK(hilbert_basis(halfline, two).elements == vecs({{2}}));

  // negative root cone against the rank-2 type A weight lattice
  Cone chart = cone_from_generators(2, vecs({{-2, 1}, {1, -2}}));
  HilbertBasis chart_hb = hilbert_basis(chart, standard_lattice(2));
  CHECK(chart_hb.elements.size() == 4);
  CHECK(chart_hb.elements == hilbert_oracle(chart));

  Cone line = cone_from_generators(2, vecs({{1, 0}, {-1, 0}}));
  CHECK_THROWS(hilbert_basis(line, standard_lattice(2)));
}

TEST_CASE("hilbert basis matches the brute-force oracle on random pointed cones") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> entry(-5, 5), nrays(2, 4), dim(2, 3);
  int done = 0;
  while (done < 40) {
    const int n = dim(rng);
    std::vector<IntVec> gens;
    for (int g = 0; g < nrays(rng); ++g) {
      IntVec v(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = entry(rng);
      gens.push_back(v);
    }
    Cone c = cone_from_generators(n, gens);
    if (!is_pointed(c) || c.rays.empty()) continue;
    ++done;
    HilbertBasis hb = hilbert_basis(c, standard_lattice(n));
    HilbertBasis hb_serial = hilbert_basis_serial(c, standard_lattice(n));
    CHECK(hb.elements == hb_serial.elements);
    CHECK(hb.elements == hilbert_oracle(c));
  }
}

TEST_CASE("hilbert basis elements are irreducible and generate") {
  Cone c = cone_from_generators(3, vecs({{1, 0, 0}, {1, 2, 0}, {1, 0, 3}, {1, 2, 3}}));
  REQUIRE(is_pointed(c));
  HilbertBasis hb = hilbert_basis(c, standard_lattice(3));
  for (const auto& x : hb.elements) {
    CHECK(cone_contains(c, x));
    // x - y must never be a nonzero cone lattice point for y in the basis
    for (const auto& y : hb.elements) {
      if (y == x) continue;
      IntVec z = vec_sub(x, y);
      CHECK((is_zero(z) || !cone_contains(c, z)));
    }
  }
}

TEST_CASE("quotient by lineality") {
  Cone halfplane = cone_from_generators(2, vecs({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK(!is_pointed(halfplane));
  QuotientByLineality q = quotient_by_lineality(halfplane);
  CHECK(q.lineality_basis.size() == 1);
  CHECK(is_pointed(q.pointed));
  CHECK(q.pointed.ambient_rank == 1);
  CHECK(q.pointed.rays.size() == 1);
  // the projection kills exactly the lineality direction
  for (const auto& l : q.lineality_basis) CHECK(is_zero(q.projection * l));
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < 20; ++t) {
    std::vector<IntVec> gens;
    for (int g = 0; g < 3; ++g) {
      IntVec v(3);
      for (int j = 0; j < 3; ++j) v[static_cast<size_t>(j)] = entry(rng);
      gens.push_back(v);
    }
    Cone c = cone_from_generators(3, gens);
    if (!is_pointed(c) || c.rays.empty()) continue;
    CappedConeQuery q;
    q.dim = 3;
    q.facets = c.facets;
    q.functional = positive_functional(c);
    q.cap = 30;
    q.lo.assign(3, -10);
    q.hi.assign(3, 10);
    auto serial = enumerate_capped_serial(q);
    auto parallel = enumerate_capped_parallel(q);
    CHECK(serial == parallel);
    CHECK(irreducible_mask_serial(serial, q.facets) == irreducible_mask_parallel(parallel, q.facets));
  }
}
