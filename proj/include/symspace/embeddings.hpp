#pragma once

#include "symspace/monoids.hpp"

namespace symspace {

// ---------------------------------------------------------------------------
// Affine embedding validation
// ---------------------------------------------------------------------------

struct EmbeddingReport {
  bool closed = false, saturated = false, generating = false;
  bool closed_certified = false;  // see ClosednessReport
  std::vector<std::string> failures;
  bool valid() const { return closed && saturated && generating; }
};

struct AffineEmbedding {
  SphericalMonoid monoid;
  EmbeddingReport report;
};

AffineEmbedding validate_embedding(std::shared_ptr<const SphericalLattice> sl,
                                   const std::vector<IntVec>& generators, int bound = 4);
EmbeddingReport validate_monoid(const SphericalMonoid& L, int bound = 4);

// ---------------------------------------------------------------------------
// Valuation cone
// ---------------------------------------------------------------------------

// { t in Hom(Xbreve, Q) : t(\bar alpha_i) <= 0 }, in the coordinates dual to
// the lattice basis of Xbreve.
struct ValuationCone {
  Cone cone;                          // ambient rank = rank of Xbreve
  std::vector<IntVec> bar_alpha_dual; // \bar alpha_i in Xbreve-basis coordinates
};

ValuationCone valuation_cone(const SphericalLattice& sl);

// ---------------------------------------------------------------------------
// The rational dominance order on Xbreve
// ---------------------------------------------------------------------------

// mu preceq lambda: lambda - mu lies in the rational cone of the restricted
// roots. Inputs must lie in Xbreve.
bool preceq(const SphericalLattice& sl, const IntVec& mu, const IntVec& lambda);
bool preceq_diff(const SphericalLattice& sl, const IntVec& diff);  // 0 preceq diff

// ---------------------------------------------------------------------------
// Enveloping monoid (group-times-torus construction)
// ---------------------------------------------------------------------------

// L~ = {(mu, lambda) in Xbreve^+ x Xbreve : mu preceq lambda}, realized as a
// spherical monoid over the doubled datum. Requires the base semisimple.
struct EnvelopingMonoid {
  std::shared_ptr<const SphericalLattice> base;
  std::shared_ptr<const SphericalLattice> doubled;
  SphericalMonoid monoid;
  std::vector<IntVec> diag_generators;   // (g, g)
  std::vector<IntVec> shift_generators;  // (0, h)
};

EnvelopingMonoid enveloping_monoid(std::shared_ptr<const SphericalLattice> sl);

// Exact membership (mu, lambda) in L~ via lattice + cone conditions.
bool enveloping_member(const EnvelopingMonoid& em, const IntVec& pair);

// ---------------------------------------------------------------------------
// Essential pairs
// ---------------------------------------------------------------------------

struct EssentialPair {
  std::vector<int> J1, J2;  // subsets of I_circ_prime (node indices, sorted)
  bool essential = false;
};

bool essential(const SphericalLattice& sl, const std::vector<int>& J1, const std::vector<int>& J2);
// All 4^r pairs in deterministic order, with the essential flag set.
std::vector<EssentialPair> essential_pairs(const SphericalLattice& sl);

// Connected components of the complement of J1 in the spherical Dynkin graph.
std::vector<std::vector<int>> spherical_components(const SphericalLattice& sl,
                                                   const std::vector<int>& excluded);

// ---------------------------------------------------------------------------
// Invariant ideals of the enveloping monoid
// ---------------------------------------------------------------------------

// L~_{J1,J2}: the ideal of L~ whose complement is
//   { (mu, gamma) : mu in cone(\bar omega_j, j in J1),
//                   gamma - mu in cone(\bar alpha_j, j in J2) }.
struct EnvelopingIdeal {
  std::vector<int> J1, J2;
  Cone omega_cone;  // in the base X-coordinates
  Cone alpha_cone;
  bool complement_contains(const EnvelopingMonoid& em, const IntVec& pair) const;
  bool ideal_contains(const EnvelopingMonoid& em, const IntVec& pair) const;
  // cone conditions only; valid when the argument is already known to be in L~
  bool complement_test_raw(const IntVec& pair) const;
};

EnvelopingIdeal enveloping_ideal(const EnvelopingMonoid& em, const std::vector<int>& J1,
                                 const std::vector<int>& J2);

// Bounded executable test that the ideal is a closed prime ideal (or the zero
// ideal). The closedness check uses the integral dominance order; the
// rational-order variant is computed alongside as a diagnostic.
struct IdealCheck {
  bool zero_ideal = false;
  bool closed = true;
  bool prime = true;      // complement closed under addition
  bool absorbing = true;  // ideal + L~ stays inside the ideal
  bool closed_rational = true;
  std::optional<std::pair<IntVec, IntVec>> closedness_witness;
  bool passes() const { return zero_ideal || (closed && prime && absorbing); }
};

// Bounded element scan shared by the per-pair ideal checks: the monoid
// elements of degree <= bound and their down-sets inside L~.
struct EnvelopingScan {
  int bound = 0;
  std::vector<IntVec> elements;
  std::vector<std::vector<IntVec>> down_sets;
};

EnvelopingScan enveloping_scan(const EnvelopingMonoid& em, int bound = 4);

IdealCheck check_enveloping_ideal(const EnvelopingMonoid& em, const EnvelopingIdeal& ideal,
                                  int bound = 4);
IdealCheck check_enveloping_ideal(const EnvelopingMonoid& em, const EnvelopingIdeal& ideal,
                                  const EnvelopingScan& scan);

struct CrossCheckEntry {
  EssentialPair pair;
  IdealCheck check;
  bool agree = false;
};

// A functional vanishing exactly on the ideal's face, nonnegative on the
// monoid cone and nonpositive on the doubled restricted roots: the invariant
// valuation behind the orbit closure. Returns nullopt when none exists (the
// face does not carry an orbit).
std::optional<IntVec> orbit_valuation_witness(const EnvelopingMonoid& em,
                                              const MonoidIdealFace& mif);

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;
  int total = 0, essential_count = 0, nonzero_essential_count = 0;
  bool all_agree = false;
  bool integral_rational_agree = true;  // the two closedness orders matched
};

CrossCheckReport cross_check(const EnvelopingMonoid& em, int bound = 4);

// ---------------------------------------------------------------------------
// Canonical embedding
// ---------------------------------------------------------------------------

struct CanonicalEmbedding {
  int spherical_rank = 0;
  Int orbit_count;                       // 2^r
  std::vector<std::vector<int>> orbits;  // subsets of I_circ_prime, closure order = inclusion
  Cone chart_cone;                       // cone of C = {mu in Xbreve : mu preceq 0}
  HilbertBasis chart_hilbert;
  bool smooth = false;
  Int lattice_index;  // [Xbreve : Z-span of the spherical roots], 0 if rank-deficient
};

CanonicalEmbedding canonical_embedding(const SphericalLattice& sl);

std::string orbit_lattice_dot(const CanonicalEmbedding& ce, const SphericalLattice& sl);

// ---------------------------------------------------------------------------
// Abelianization and very-flatness
// ---------------------------------------------------------------------------

struct Abelianization {
  SphericalMonoid central;              // L_Z = L ∩ {<coroot_i, .> = 0 for all i}
  std::vector<IntVec> unit_group_basis; // M_0 = L_Z ∩ (-L_Z)
};

Abelianization abelianization(const SphericalMonoid& L);

// mu <=_Z lambda iff lambda - mu in L_Z (exact for saturated L).
bool leZ(const SphericalMonoid& L, const Abelianization& ab, const IntVec& mu,
         const IntVec& lambda);

// <=_Z-minimal elements of L among elements of generator-degree <= bound.
// Minimality of each candidate is decided exactly.
std::vector<IntVec> minimal_elements(const SphericalMonoid& L, const Abelianization& ab,
                                     int bound);
bool is_minimal_element(const SphericalMonoid& L, const Abelianization& ab, const IntVec& x);

struct VeryFlatReport {
  bool very_flat = false;
  bool exact = false;  // true only for enveloping monoids (diagonal certificate)
  int bound = 0;
  bool flat_condition = false;       // no equal sums with inequivalent minimal parts
  bool fibers_condition = false;     // minimal set closed under addition
  bool diagonal_certified = false;   // enveloping: minimal set = diagonal, M_0 = 0
  std::vector<std::string> notes;
};

VeryFlatReport is_very_flat(const SphericalMonoid& L, int bound = 4);
VeryFlatReport is_very_flat(const EnvelopingMonoid& em, int bound = 4);

}  // namespace symspace
