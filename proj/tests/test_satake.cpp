#include "doctest.h"

#include <random>

#include "symspace/catalog.hpp"
#include "symspace/monoids.hpp"

using namespace symspace;

namespace {

IntVec vec(std::vector<long> entries) {
  IntVec v;
  for (long e : entries) v.push_back(Int(e));
  return v;
}

SatakeData split_satake(int rank, int m) {
  SatakeData s;
  s.tau.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) s.tau[static_cast<size_t>(i)] = i;
  s.tau_X = IntMat::identity(rank);
  return s;
}

}  // namespace

TEST_CASE("split A1: theta is minus the identity") {
  RootDatum d = make_root_datum(1, {vec({2})}, {vec({1})});
  IRootDatum ird = build_iroot_datum(d, split_satake(1, 1));
  CHECK(ird.theta_X == -IntMat::identity(1));
  CHECK(ird.I_circ == std::vector<int>{0});
  CHECK(ird.I_circ_prime == std::vector<int>{0});
  CHECK(bar(ird, vec({1})) == vec({2}));
  CHECK(bar(ird, vec({0})) == vec({0}));
}

TEST_CASE("axiom (i) fails when tau = id on a type A2 compact form") {
  RootDatum d = make_root_datum(2, {vec({2, -1}), vec({-1, 2})}, {vec({1, 0}), vec({0, 1})});
  SatakeData s = split_satake(2, 2);
  s.I_bullet = {0, 1};  // w0(alpha_1) = -alpha_2, so (i) must fail with tau = id
  try {
    build_iroot_datum(d, s);
    CHECK(false);
  } catch (const AxiomError& e) {
    CHECK(e.axiom() == "(i)");
  }
}

TEST_CASE("group case A1 x A1") {
  IRootDatum ird = catalog::get("group.A1");
  // theta(x, y) = (-y, -x)
  CHECK(ird.theta_X * vec({1, 0}) == vec({0, -1}));
  CHECK(ird.theta_X * vec({0, 1}) == vec({-1, 0}));
  CHECK(bar(ird, vec({1, 0})) == vec({1, 1}));
}

TEST_CASE("inconsistent tau mutation is rejected with a named axiom") {
  IRootDatum base = catalog::get("AI.sl.3");
  SatakeData bad = base.satake;
  bad.tau = {1, 0};  // non-identity permutation, tau_X left at the identity
  try {
    build_iroot_datum(base.datum, bad);
    CHECK(false);
  } catch (const AxiomError& e) {
    CHECK(e.axiom() == "tau_X compatibility");
    CHECK(e.index() == 0);
  }
}

TEST_CASE("spherical lattice of the split rank-1 forms") {
  SphericalLattice sc = spherical_lattice(catalog::get("AI.sl.2"));
  CHECK(sc.lattice.basis == std::vector<IntVec>{vec({2})});
  CHECK(sc.bar_alpha == std::vector<IntVec>{vec({4})});
  CHECK(sc.spherical_roots == std::vector<IntVec>{vec({2})});  // alpha' = alpha
  CHECK(sc.spherical_cartan.at(0, 0) == 4);
  CHECK(sc.spherical_type.to_string() == "A1");

  SphericalLattice ad = spherical_lattice(catalog::get("AI.ad.1"));
  CHECK(ad.lattice.basis == std::vector<IntVec>{vec({2})});  // Z * 2 alpha
  CHECK(ad.spherical_roots == std::vector<IntVec>{vec({2})});
  CHECK(ad.spherical_roots == ad.bar_alpha);
}

TEST_CASE("spherical lattice of split A2, simply connected") {
  SphericalLattice sl = spherical_lattice(catalog::get("AI.sl.3"));
  // Xbreve = 2X
  CHECK(sl.lattice.basis == std::vector<IntVec>({vec({2, 0}), vec({0, 2})}));
  // alpha_i' = 2 alpha_i
  CHECK(sl.spherical_roots == std::vector<IntVec>({vec({4, -2}), vec({-2, 4})}));
  CHECK(sl.spherical_cartan == IntMat(2, 2, {Int(4), Int(-2), Int(-2), Int(4)}));
  CHECK(sl.spherical_type.to_string() == "A2");
}

TEST_CASE("t-coefficients") {
  // no black nodes: nothing to solve
  CHECK(t_coefficients(catalog::get("AI.sl.3")).t.empty());

  // one black node flanked by a tau-swapped pair
  TCoeffs tc = t_coefficients(catalog::get("AIII.sl.4.b2"));
  CHECK(tc.t.at({0, 1}) == 1);
  CHECK(tc.t.at({2, 1}) == 1);
  CHECK(tc.t.size() == 2);

  TCoeffs aii = t_coefficients(catalog::get("AII.sl.4"));
  CHECK(aii.t.at({1, 0}) == 1);
  CHECK(aii.t.at({1, 2}) == 1);

  // tampering theta by a sign breaks nonnegativity/integrality
  IRootDatum broken = catalog::get("AIII.sl.4.b2");
  broken.theta_X = -broken.theta_X;
  CHECK_THROWS_AS(t_coefficients(broken), AxiomError);
}

TEST_CASE("theta restricted to the spherical lattice is minus the identity") {
  for (const auto& name : catalog::list()) {
    SphericalLattice sl = spherical_lattice(catalog::get(name));
    for (const auto& b : sl.lattice.basis) CHECK(sl.ird.theta_X * b == vec_neg(b));
  }
}

TEST_CASE("bar maps dominant weights into the dominant spherical monoid") {
  std::mt19937_64 rng(2025);
  for (const auto& name : catalog::list()) {
    SphericalLattice sl = spherical_lattice(catalog::get(name));
    const RootDatum& d = sl.ird.datum;
    std::uniform_int_distribution<int> entry(0, 3);
    auto omegas = fundamental_weights(d);
    for (int t = 0; t < 25; ++t) {
      // random dominant weight: nonnegative combination of fundamental weights,
      // cleared to an integral X-element
      RatVec lam(static_cast<size_t>(d.rank), Rat(0));
      for (int i = 0; i < d.size(); ++i) {
        int c = entry(rng);
        for (int j = 0; j < d.rank; ++j)
          lam[static_cast<size_t>(j)] += Rat(c) * omegas[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      Int den = 1;
      for (auto& q : lam) {
        q.canonicalize();
        den = lcm(den, q.get_den());
      }
      IntVec lam_int(static_cast<size_t>(d.rank));
      for (int j = 0; j < d.rank; ++j) {
        Rat c = lam[static_cast<size_t>(j)] * Rat(den);
        c.canonicalize();
        lam_int[static_cast<size_t>(j)] = c.get_num();
      }
      if (!is_dominant(d, lam_int)) continue;
      IntVec b = bar(sl.ird, lam_int);
      CHECK(in_dominant_monoid(sl, b));
    }
  }
}

TEST_CASE("restricted roots are independent and divisible by the spherical roots") {
  for (const auto& name : catalog::list()) {
    SphericalLattice sl = spherical_lattice(catalog::get(name));
    CHECK(rational_rank(sl.bar_alpha) == sl.spherical_rank());
    for (int a = 0; a < sl.spherical_rank(); ++a) {
      auto coeff = solve_linear(std::vector<IntVec>{sl.spherical_roots[static_cast<size_t>(a)]},
                                sl.bar_alpha[static_cast<size_t>(a)]);
      REQUIRE(coeff.has_value());
      Rat m = (*coeff)[0];
      m.canonicalize();
      CHECK(m.get_den() == 1);
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("difference decomposition") {
  auto sl2 = spherical_lattice(catalog::get("AI.sl.2"));
  auto c = decompose_difference(sl2, vec({0}), vec({4}));
  CHECK(c.at(0) == Rat(1));  // mu - lambda = bar alpha
  auto zero = decompose_difference(sl2, vec({4}), vec({4}));
  CHECK(zero.at(0) == Rat(0));

  auto sl3 = spherical_lattice(catalog::get("AI.sl.3"));
  // mu = 2 alpha_1 + 2 alpha_2 = (2, 2) in the weight basis
  auto c2 = decompose_difference(sl3, vec({0, 0}), vec({2, 2}));
  CHECK(c2.at(0) == Rat(1));
  CHECK(c2.at(1) == Rat(1));

  CHECK_THROWS(decompose_difference(sl2, vec({4}), vec({0})));    // wrong order
  CHECK_THROWS(decompose_difference(sl2, vec({1}), vec({3})));    // outside Xbreve
}

TEST_CASE("difference decomposition reconstructs and obeys the parity pattern") {
  std::mt19937_64 rng(31337);
  for (const auto& name : catalog::list()) {
    SphericalLattice sl = spherical_lattice(catalog::get(name));
    const RootDatum& d = sl.ird.datum;
    std::uniform_int_distribution<int> coeff(-2, 2), rootc(0, 2);
    int done = 0;
    for (int t = 0; t < 200 && done < 40; ++t) {
      IntVec mu(static_cast<size_t>(d.rank), Int(0));
      for (const auto& b : sl.lattice.basis) mu = vec_add(mu, vec_scale(Int(coeff(rng)), b));
      IntVec diff(static_cast<size_t>(d.rank), Int(0));
      for (int i = 0; i < d.size(); ++i)
        diff = vec_add(diff, vec_scale(Int(rootc(rng)), d.simple_roots[static_cast<size_t>(i)]));
      IntVec lam = vec_sub(mu, diff);
      if (!in_spherical_lattice(sl, lam)) continue;
      ++done;
      auto c = decompose_difference(sl, lam, mu);
      RatVec recon(static_cast<size_t>(d.rank), Rat(0));
      for (size_t a = 0; a < sl.bar_alpha.size(); ++a) {
        int node = sl.ird.I_circ_prime[a];
        Rat ci = c.at(node);
        CHECK(ci >= 0);
        Rat twice = ci * 2;
        twice.canonicalize();
        CHECK(twice.get_den() == 1);  // 2 c_i integral
        if (sl.ird.satake.tau[static_cast<size_t>(node)] != node) {
          Rat once = ci;
          once.canonicalize();
          CHECK(once.get_den() == 1);  // integral at swapped nodes
        }
        for (int j = 0; j < d.rank; ++j)
          recon[static_cast<size_t>(j)] += ci * Rat(sl.bar_alpha[a][static_cast<size_t>(j)]);
      }
      for (int j = 0; j < d.rank; ++j)
        CHECK(recon[static_cast<size_t>(j)] == Rat(vec_sub(mu, lam)[static_cast<size_t>(j)]));
    }
    CHECK(done > 0);
  }
}

TEST_CASE("doubled data validate and double the spherical lattice") {
  for (const auto& name : catalog::list()) {
    IRootDatum base = catalog::get(name);
    IRootDatum dd = catalog::get(name + ".GxT");
    CHECK(dd.datum.rank == 2 * base.datum.rank);
    SphericalLattice bsl = spherical_lattice(base);
    SphericalLattice dsl = spherical_lattice(dd);
    CHECK(dsl.lattice.rank() == 2 * bsl.lattice.rank());
    CHECK(dsl.spherical_rank() == bsl.spherical_rank());
    // theta acts diagonally
    for (int i = 0; i < base.datum.rank; ++i)
      for (int j = 0; j < base.datum.rank; ++j) {
        CHECK(dd.theta_X.at(i, j) == base.theta_X.at(i, j));
        CHECK(dd.theta_X.at(base.datum.rank + i, base.datum.rank + j) == base.theta_X.at(i, j));
        CHECK(dd.theta_X.at(i, base.datum.rank + j) == 0);
      }
  }
}

TEST_CASE("compact degenerate case: empty I_circ_prime") {
  RootDatum d = make_root_datum(1, {vec({2})}, {vec({1})});
  SatakeData s = split_satake(1, 1);
  s.I_bullet = {0};
  IRootDatum ird = build_iroot_datum(d, s);  // theta = +id
  CHECK(ird.I_circ_prime.empty());
  SphericalLattice sl = spherical_lattice(ird);
  CHECK(sl.lattice.rank() == 0);
  CHECK(sl.spherical_rank() == 0);
  CHECK(sl.spherical_type.to_string() == "0");
}
