#pragma once

#include <memory>
#include <mutex>
#include <set>

#include "symspace/satake.hpp"

namespace symspace {

// Finitely generated submonoid of the dominant part of the spherical lattice,
// with lazily built cone / Hilbert-basis caches (computed once, shared).
class SphericalMonoid {
 public:
  SphericalMonoid(std::shared_ptr<const SphericalLattice> sl, std::vector<IntVec> generators);

  const SphericalLattice& sl() const { return *sl_; }
  std::shared_ptr<const SphericalLattice> sl_ptr() const { return sl_; }
  const std::vector<IntVec>& generators() const { return generators_; }

  const Cone& cone() const;
  // Hilbert basis of cone ∩ Xbreve (the saturation's generators).
  const HilbertBasis& hilbert() const;
  // Generators coincide with the Hilbert basis; membership then reduces to
  // the exact cone-and-lattice test.
  bool generators_are_hilbert_basis() const;

 private:
  std::shared_ptr<const SphericalLattice> sl_;
  std::vector<IntVec> generators_;  // sorted, deduplicated, in X-coordinates

  struct Cache {
    std::once_flag cone_flag, hb_flag, sat_flag;
    Cone cone;
    HilbertBasis hb;
    bool gens_are_hb = false;
  };
  std::shared_ptr<Cache> cache_;
};

// The full dominant monoid Xbreve^+ (generated by the Hilbert basis of the
// dominant cone). Requires the dominant cone of the datum to be pointed.
SphericalMonoid dominant_monoid(std::shared_ptr<const SphericalLattice> sl);

// Membership as a nonnegative-integer combination of the generators: cone
// precheck, then bounded enumeration along a positive functional.
bool member(const SphericalMonoid& L, const IntVec& mu);

// The group generated by the generators equals the whole spherical lattice.
bool generates_lattice(const SphericalMonoid& L);

bool is_saturated(const SphericalMonoid& L);
SphericalMonoid saturate(const SphericalMonoid& L);

// {lambda in Xbreve^+ : lambda <= mu}, sorted; mu must lie in Xbreve^+.
std::vector<IntVec> down_set(const SphericalLattice& sl, const IntVec& mu);

enum class ClosednessMode { generator_downsets, bruteforce };

struct ClosednessReport {
  bool closed = false;
  ClosednessMode mode = ClosednessMode::generator_downsets;
  int bound = 0;       // bruteforce degree bound (0 for generator mode)
  bool certified = false;  // "false" verdicts are always certified; "true" only exhaustively
  std::optional<std::pair<IntVec, IntVec>> witness;  // (mu in L, lambda <= mu missing)
};

ClosednessReport is_closed(const SphericalMonoid& L, ClosednessMode mode, int bound = 4);

// All monoid elements expressible with generator multiplicities summing to at
// most `bound`, sorted (includes 0).
std::vector<IntVec> elements_up_to_degree(const SphericalMonoid& L, int bound);

// A closed prime ideal of the monoid, presented by the face of cone(L) whose
// trace is the complementary subsemigroup.
struct MonoidIdealFace {
  Face face;
  std::vector<IntVec> face_hilbert;   // Hilbert-basis elements on the face
  std::vector<IntVec> ideal_hilbert;  // the rest: generators of the ideal part
};

// Enumerates proper faces of cone(L) whose ideal L \ F is downward closed,
// checked on the Hilbert basis plus all elements of degree <= bound. Requires
// L closed, saturated and lattice-generating (validated; throws otherwise).
std::vector<MonoidIdealFace> closed_prime_ideals(const SphericalMonoid& L, int bound = 4);

struct OrbitPosetNode {
  std::optional<int> ideal;  // index into the ideal list; nullopt = open orbit
  std::string label;
};

struct OrbitPoset {
  std::vector<MonoidIdealFace> ideals;
  std::vector<OrbitPosetNode> nodes;          // node 0 = open orbit
  std::vector<std::vector<char>> leq;         // closure containment
  std::vector<std::pair<int, int>> hasse;     // covers: (lower, upper)
};

OrbitPoset orbit_poset(const SphericalMonoid& L, int bound = 4);

std::string orbit_poset_dot(const OrbitPoset& poset);

}  // namespace symspace
