#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspace {

// Arbitrary-precision scalars. Everything in this library is exact; there is
// no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scale(const Int& c, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
bool is_zero(const IntVec& a);
bool is_zero(const RatVec& a);

RatVec to_rat(const IntVec& a);
// Fails if any coordinate has a denominator != 1.
IntVec to_int(const RatVec& a);

// Divides by the gcd of the coordinates; zero stays zero. Sign is preserved.
IntVec primitive(const IntVec& a);
// Clears denominators and divides by the gcd: the primitive integer vector on
// the ray through a (preserving direction).
IntVec rat_primitive(const RatVec& a);

std::string to_string(const IntVec& a);
std::string to_string(const RatVec& a);

// ---------------------------------------------------------------------------
// Integer matrices (row-major, arbitrary precision)
// ---------------------------------------------------------------------------

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMat(int rows, int cols, std::vector<Int> entries);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& other) const;
  IntVec operator*(const IntVec& v) const;  // v has size cols()
  IntMat operator-() const;
  bool operator==(const IntMat& other) const;
  bool is_identity() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

enum class NormalFormKind { smith, hermite };

// U * m * V = D, with U, V unimodular (V = identity for the hermite kind).
// Smith: D diagonal, nonnegative, d1 | d2 | ... .
// Hermite (row-style): D in row echelon form, pivots positive, entries above
// each pivot reduced into [0, pivot).
struct NormalForm {
  IntMat U, V, D;
  IntMat U_inv, V_inv;
  int rank = 0;
};

NormalForm smith_normal_form(const IntMat& m);
NormalForm hermite_normal_form(const IntMat& m);
NormalForm normal_form(const IntMat& m, NormalFormKind kind);

// Saturated basis of {x : m x = 0} (x column vectors of size cols()).
std::vector<IntVec> integer_kernel(const IntMat& m);

// ---------------------------------------------------------------------------
// Rational linear algebra
// ---------------------------------------------------------------------------

// Solves sum_i x_i * vecs[i] = target over Q. Returns a solution with free
// coordinates set to zero, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const std::vector<RatVec>& vecs, const RatVec& target);
std::optional<RatVec> solve_linear(const std::vector<IntVec>& vecs, const IntVec& target);
std::optional<RatVec> solve_linear(const std::vector<IntVec>& vecs, const RatVec& target);

int rational_rank(const std::vector<RatVec>& vecs);
int rational_rank(const std::vector<IntVec>& vecs);

// ---------------------------------------------------------------------------
// Lattices
// ---------------------------------------------------------------------------

// A sublattice of Z^ambient_rank given by an independent basis.
struct LatticeBasis {
  int ambient_rank = 0;
  std::vector<IntVec> basis;  // rows; linearly independent over Q

  int rank() const { return static_cast<int>(basis.size()); }
};

// Builds a canonical (hermite-form) basis of the lattice generated by the
// given vectors; dependent generators are allowed.
LatticeBasis lattice_from_generators(int ambient_rank, const std::vector<IntVec>& generators);

// Full standard lattice Z^n.
LatticeBasis standard_lattice(int n);

bool lattice_member(const LatticeBasis& lattice, const IntVec& v);

// Coordinates of v in the lattice basis over Q (nullopt if v is outside the
// rational span).
std::optional<RatVec> lattice_coordinates(const LatticeBasis& lattice, const RatVec& v);

// The generator of the semigroup {x in lattice : x in Q_{>=0} * ray}; throws
// if ray is zero or misses the rational span of the lattice.
IntVec primitive_on_ray(const LatticeBasis& lattice, const RatVec& ray);
IntVec primitive_on_ray(const LatticeBasis& lattice, const IntVec& ray);

// [Z^?: sublattice] style index: index of the lattice generated by `vecs`
// inside `lattice`; 0 means the ranks differ (infinite index / not full).
Int lattice_index(const LatticeBasis& lattice, const std::vector<IntVec>& vecs);

// Membership tester with the hermite form precomputed (lattice_member
// recomputes it per call).
class LatticeTester {
 public:
  LatticeTester() = default;
  explicit LatticeTester(const LatticeBasis& lattice);
  bool contains(const IntVec& v) const;

 private:
  int ambient_ = 0;
  IntMat h_;
};

// Prepared solver for a fixed independent family: solve sum x_i v_i = target
// with the left inverse computed once.
class PreparedSolver {
 public:
  PreparedSolver() = default;
  explicit PreparedSolver(const std::vector<IntVec>& vecs);
  std::optional<RatVec> solve(const IntVec& target) const;

 private:
  std::vector<RatVec> left_;  // k x n
  std::vector<IntVec> vecs_;
  int ambient_ = 0;
};

}  // namespace symspace
