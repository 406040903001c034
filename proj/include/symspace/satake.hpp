#pragma once

#include <map>

#include "symspace/cones.hpp"
#include "symspace/root_datum.hpp"

namespace symspace {

// Raised when a Satake payload violates one of the defining axioms. `axiom`
// names the failed condition, `index` the witnessing node (-1 if global).
class AxiomError : public std::invalid_argument {
 public:
  AxiomError(std::string axiom, int index, const std::string& detail)
      : std::invalid_argument("axiom " + axiom + " fails" +
                              (index >= 0 ? " at node " + std::to_string(index) : "") + ": " +
                              detail),
        axiom_(std::move(axiom)),
        index_(index) {}
  const std::string& axiom() const { return axiom_; }
  int index() const { return index_; }

 private:
  std::string axiom_;
  int index_;
};

// Satake input data: the black nodes, the diagram involution tau, and an
// explicit lattice involution of X extending alpha_i -> alpha_{tau i}.
struct SatakeData {
  std::vector<int> I_bullet;           // sorted node indices
  std::vector<int> tau;                // involutive permutation of nodes
  IntMat tau_X;                        // lattice involution of X
  std::vector<int> I_circ_prime = {};  // optional override of orbit representatives
};

struct IRootDatum {
  RootDatum datum;
  SatakeData satake;
  IntMat theta_X;   // = -w_bullet . tau_X
  IntMat w_bullet;  // longest element of W_{I_bullet} on X
  std::vector<int> I_circ;
  std::vector<int> I_circ_prime;  // one representative per tau-orbit on I_circ
};

// Validates the Satake axioms and assembles the derived involution theta_X.
// Throws AxiomError naming the violated condition.
IRootDatum build_iroot_datum(const RootDatum& datum, const SatakeData& satake);

IntVec bar(const IRootDatum& ird, const IntVec& mu);
RatVec bar(const IRootDatum& ird, const RatVec& mu);

// Nonnegative integers t[{i,j}] with theta_X(alpha_i) = -alpha_{tau i}
// - sum_j t_ij alpha_j over the black nodes j, for white i.
struct TCoeffs {
  std::map<std::pair<int, int>, Int> t;
};
TCoeffs t_coefficients(const IRootDatum& ird);

// The spherical weight lattice and the combinatorics living on it.
struct SphericalLattice {
  IRootDatum ird;
  LatticeBasis lattice;                 // image of (id - theta_X), X-coordinates
  std::vector<IntVec> bar_alpha;        // \bar alpha_i, i in I_circ_prime
  std::vector<IntVec> spherical_roots;  // primitive generators alpha_i'
  IntMat spherical_cartan;              // <coroot_j, \bar alpha_i>, i,j in I_circ_prime
  CartanType spherical_type;            // after row normalization

  LatticeTester tester;       // prepared membership in Xbreve
  PreparedSolver bar_solver;  // prepared coordinates over the \bar alpha_i

  int spherical_rank() const { return static_cast<int>(bar_alpha.size()); }
};

SphericalLattice spherical_lattice(const IRootDatum& ird);

bool in_spherical_lattice(const SphericalLattice& sl, const IntVec& v);
// Dominant and in the lattice.
bool in_dominant_monoid(const SphericalLattice& sl, const IntVec& v);

// Writes mu - lambda as sum c_i \bar alpha_i with 2 c_i nonnegative integers
// (integral c_i at nodes with tau i != i). Requires lambda, mu in the lattice
// and lambda <= mu in dominance order; throws otherwise.
std::map<int, Rat> decompose_difference(const SphericalLattice& sl, const IntVec& lambda,
                                        const IntVec& mu);

// Doubled datum for the group-times-torus construction: roots (alpha_i, 0),
// theta = theta (+) theta. Its spherical lattice is Xbreve x Xbreve.
IRootDatum doubled_iroot_datum(const IRootDatum& ird);

}  // namespace symspace
