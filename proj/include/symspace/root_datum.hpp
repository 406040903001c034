#pragma once

#include <memory>
#include <optional>
#include <string>

#include "symspace/exact.hpp"

namespace symspace {

// Finite-type Cartan classification: multiset of irreducible components.
struct CartanType {
  std::vector<std::pair<char, int>> components;  // sorted (family, rank)
  std::string to_string() const;
};

// Classifies a (generalized) Cartan matrix. With allow_rational_rescale the
// rows may be rescaled by positive rationals to reach diagonal 2 first;
// non-integer off-diagonal entries after rescaling are rejected. Throws
// std::invalid_argument when the matrix is not of finite type.
CartanType classify_type(const IntMat& cartan, bool allow_rational_rescale);

// A root datum: simple roots in X-coordinates, simple coroots in
// Y-coordinates, the perfect pairing between Y and X as a matrix. The Cartan
// matrix <coroot_i, root_j> is validated to be of finite type.
struct RootDatum {
  int rank = 0;                        // rank of X and of Y
  std::vector<std::string> labels;     // node labels, size |I|
  std::vector<IntVec> simple_roots;    // X-coordinates
  std::vector<IntVec> simple_coroots;  // Y-coordinates
  IntMat pairing;                      // <y, x> = y^T * pairing * x
  IntMat cartan;                       // derived
  CartanType type;
  std::vector<IntVec> coroot_functionals;  // pairing^T * coroot_i, derived

  int size() const { return static_cast<int>(simple_roots.size()); }
};

RootDatum make_root_datum(int rank, std::vector<IntVec> simple_roots,
                          std::vector<IntVec> simple_coroots,
                          std::optional<IntMat> pairing = std::nullopt,
                          std::vector<std::string> labels = {});

struct Weight {
  const RootDatum* datum = nullptr;
  IntVec coords;
};

Int pair_coroot(const RootDatum& d, int i, const IntVec& x);
Rat pair_coroot(const RootDatum& d, int i, const RatVec& x);
// <y, x> for an arbitrary Y-coordinate vector y.
Rat pair_with(const RootDatum& d, const RatVec& y, const RatVec& x);

bool is_dominant(const RootDatum& d, const IntVec& x);

// mu - lambda as a nonnegative *integer* combination of simple roots
// (nullopt when there is none). dominance_leq is the derived partial order.
std::optional<IntVec> dominance_coefficients(const RootDatum& d, const IntVec& lambda,
                                             const IntVec& mu);
bool dominance_leq(const RootDatum& d, const IntVec& lambda, const IntVec& mu);

// Matrix of the simple reflection s_i acting on X-coordinates.
IntMat simple_reflection(const RootDatum& d, int i);

// Longest element of the parabolic subgroup W_J, as a lattice automorphism of
// X, computed by greedy descent. J holds node indices.
IntMat parabolic_longest(const RootDatum& d, const std::vector<int>& J);

// Fundamental (co)weights over Q: <coroot_j, w_i> = delta_ij, with zero
// component on a fixed complement of the coroot span (and dually).
std::vector<RatVec> fundamental_weights(const RootDatum& d);
std::vector<RatVec> fundamental_coweights(const RootDatum& d);

// |I| == rank and the simple roots span X rationally.
bool is_semisimple(const RootDatum& d);

}  // namespace symspace
