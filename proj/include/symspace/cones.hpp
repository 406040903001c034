#pragma once

#include "symspace/exact.hpp"

namespace symspace {

// Rational polyhedral cone with both descriptions kept canonical: rays and
// facet inner normals are primitive integer vectors, deduplicated and sorted
// lexicographically. A non-pointed cone lists +/- generator pairs for its
// lineality directions; a non-full-dimensional cone lists +/- facet pairs for
// the equations cutting out its span. Membership is always
//   x in cone  <=>  <f, x> >= 0 for every facet f.
struct Cone {
  int ambient_rank = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> facets;
  int dim = 0;
};

Cone cone_from_generators(int ambient_rank, const std::vector<RatVec>& generators);
Cone cone_from_generators(int ambient_rank, const std::vector<IntVec>& generators);
Cone cone_from_inequalities(int ambient_rank, const std::vector<RatVec>& inner_normals);
Cone cone_from_inequalities(int ambient_rank, const std::vector<IntVec>& inner_normals);

bool cone_contains(const Cone& c, const RatVec& v);
bool cone_contains(const Cone& c, const IntVec& v);
// True iff v lies in the relative interior of c's lineality space, i.e. all
// facet products are zero.
bool cone_saturates_all(const Cone& c, const IntVec& v);

bool is_pointed(const Cone& c);
// Saturated basis of the lineality space intersected with Z^n; empty iff pointed.
std::vector<IntVec> lineality_lattice(const Cone& c);

// A face of a cone: the intersection with the vanishing locus of a facet
// subset. `facet_set` holds all facet indices vanishing on the face (the
// canonical, maximal choice); `ray_set` the indices of rays lying on it.
struct Face {
  std::vector<int> facet_set;
  std::vector<int> ray_set;
  int dim = 0;
};

// Complete face lattice, from the minimal face up to the cone itself, sorted
// by (dim, ray_set) — a linear extension of inclusion.
std::vector<Face> faces(const Cone& c);

bool face_subset_leq(const Face& a, const Face& b);  // inclusion via ray sets

struct QuotientByLineality {
  Cone pointed;        // image cone in Z^(n-k) coordinates
  IntMat projection;   // (n-k) x n, kills exactly the lineality lattice
  std::vector<IntVec> lineality_basis;
};

QuotientByLineality quotient_by_lineality(const Cone& c);

// Minimal generating set of the monoid c ∩ lattice (Gordan's lemma made
// effective). Requires c pointed; rays must lie in the rational span of the
// lattice. Elements are in ambient coordinates, sorted lexicographically.
struct HilbertBasis {
  LatticeBasis lattice;
  std::vector<IntVec> elements;
};

HilbertBasis hilbert_basis(const Cone& c, const LatticeBasis& lattice);
// Single-threaded reference implementation; kept for differential testing
// against the OpenMP kernels.
HilbertBasis hilbert_basis_serial(const Cone& c, const LatticeBasis& lattice);

// All lattice points x of c ∩ lattice with <functional, x> <= cap, ambient
// coordinates, sorted. The functional must be strictly positive on c \ {0}
// (callers typically pass the sum of the facet normals of a pointed cone).
std::vector<IntVec> lattice_points_capped(const Cone& c, const LatticeBasis& lattice,
                                          const IntVec& functional, const Int& cap);

// Sum of the facet normals: strictly positive on c \ {0} when c is pointed.
IntVec positive_functional(const Cone& c);

}  // namespace symspace
