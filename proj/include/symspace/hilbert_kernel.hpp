#pragma once

#include "symspace/exact.hpp"

namespace symspace {

// Enumeration kernel behind hilbert_basis / lattice_points_capped, exposed so
// the serial reference and the OpenMP variant can be compared directly (tests,
// bench-hilbert). Everything here works in lattice coordinates Z^dim.
//
// Region: { y in Z^dim : F y >= 0 componentwise, <functional, y> <= cap },
// scanned over the integer box [lo, hi].
struct CappedConeQuery {
  int dim = 0;
  std::vector<IntVec> facets;  // rows of F, in lattice coordinates
  IntVec functional;           // strictly positive on the cone minus 0
  Int cap;
  std::vector<long> lo, hi;    // per-coordinate bounds containing the region
};

// Nonzero integer points of the region, sorted lexicographically.
std::vector<IntVec> enumerate_capped_serial(const CappedConeQuery& q);
std::vector<IntVec> enumerate_capped_parallel(const CappedConeQuery& q);

// mask[i] = 1 iff points[i] is irreducible: not a sum of two nonzero cone
// lattice points. `points` must contain every cone lattice point whose
// functional value is <= the maximum over `points` (callers guarantee this by
// construction).
std::vector<char> irreducible_mask_serial(const std::vector<IntVec>& points,
                                          const std::vector<IntVec>& facets);
std::vector<char> irreducible_mask_parallel(const std::vector<IntVec>& points,
                                            const std::vector<IntVec>& facets);

}  // namespace symspace
