#include "doctest.h"

#include <random>

#include "symspace/root_datum.hpp"

using namespace symspace;

namespace {

IntVec vec(std::vector<long> entries) {
  IntVec v;
  for (long e : entries) v.push_back(Int(e));
  return v;
}

IntMat mat(std::vector<std::vector<long>> rows) {
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

// SL2 simply connected: X = Z omega
RootDatum sl2() { return make_root_datum(1, {vec({2})}, {vec({1})}); }

// rank-2 type A, weight basis
RootDatum sl3() {
  return make_root_datum(2, {vec({2, -1}), vec({-1, 2})}, {vec({1, 0}), vec({0, 1})});
}

}  // namespace

TEST_CASE("dominance order") {
  RootDatum d = sl2();
  CHECK(dominance_leq(d, vec({1}), vec({3})));   // difference 2w = alpha
  CHECK(dominance_leq(d, vec({1}), vec({1})));
  CHECK(!dominance_leq(d, vec({0}), vec({1})));  // w = alpha/2 not integral

  RootDatum a2 = sl3();
  auto coeffs = dominance_coefficients(a2, vec({0, 0}), vec({2, 2}));
  REQUIRE(coeffs.has_value());
  CHECK(*coeffs == vec({2, 2}));  // 2w1 + 2w2 = 2a1 + 2a2
}

TEST_CASE("dominance is a partial order") {
  RootDatum d = sl3();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  auto rnd = [&] { return vec({entry(rng), entry(rng)}); };
  for (int t = 0; t < 200; ++t) {
    IntVec a = rnd(), b = rnd(), c = rnd();
    CHECK(dominance_leq(d, a, a));
    if (dominance_leq(d, a, b) && dominance_leq(d, b, a)) CHECK(a == b);
    if (dominance_leq(d, a, b) && dominance_leq(d, b, c)) CHECK(dominance_leq(d, a, c));
  }
}

TEST_CASE("is_dominant") {
  RootDatum d = sl2();
  CHECK(is_dominant(d, vec({1})));
  CHECK(!is_dominant(d, vec({-1})));
  RootDatum a2 = sl3();
  CHECK(!is_dominant(a2, vec({2, -1})));  // alpha_1 pairs to -1 with the second coroot
}

TEST_CASE("parabolic longest elements") {
  RootDatum d = sl2();
  CHECK(parabolic_longest(d, {}).is_identity());
  IntMat w = parabolic_longest(d, {0});
  CHECK(w * vec({1}) == vec({-1}));  // s1 = w0 for A1

  RootDatum a2 = sl3();
  IntMat w0 = parabolic_longest(a2, {0, 1});
  CHECK(w0 * vec({2, -1}) == vec({1, -2}));  // w0(a1) = -a2
  CHECK((w0 * w0).is_identity());
}

TEST_CASE("classify fixed Cartan matrices") {
  CHECK(classify_type(mat({{2, -1}, {-1, 2}}), false).to_string() == "A2");
  CHECK(classify_type(mat({{4, -2}, {-2, 4}}), true).to_string() == "A2");
  CHECK_THROWS(classify_type(mat({{4, -2}, {-2, 4}}), false));
  CHECK_THROWS(classify_type(mat({{2, -2}, {-2, 2}}), false));  // affine
  CHECK_THROWS(classify_type(mat({{2, -1}, {-4, 2}}), false));

  CHECK(classify_type(mat({{2}}), false).to_string() == "A1");
  CHECK(classify_type(mat({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}), false).to_string() == "B3");
  CHECK(classify_type(mat({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}), false).to_string() == "C3");
  CHECK(classify_type(mat({{2, -1}, {-3, 2}}), false).to_string() == "G2");
  CHECK(classify_type(mat({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}), false)
            .to_string() == "F4");
  CHECK(classify_type(mat({{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}}), false)
            .to_string() == "D4");
  CHECK(classify_type(
            mat({{2, -1, 0, 0, 0, 0}, {-1, 2, -1, 0, 0, 0}, {0, -1, 2, -1, 0, -1},
                 {0, 0, -1, 2, -1, 0}, {0, 0, 0, -1, 2, 0}, {0, 0, -1, 0, 0, 2}}),
            false)
            .to_string() == "E6");
  // disconnected
  CHECK(classify_type(mat({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}}), false).to_string() == "A1+A2");
  // non-crystallographic after normalization
  try {
    classify_type(mat({{4, -1}, {-1, 2}}), true);  // 2*(-1)/4 is not integral
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("non-crystallographic") != std::string::npos);
  }
}

TEST_CASE("classification is permutation invariant") {
  std::mt19937_64 rng(17);
  // B3 under random simultaneous permutations
  IntMat b3 = mat({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  std::vector<int> perm{0, 1, 2};
  for (int t = 0; t < 6; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMat shuffled(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        shuffled.at(i, j) = b3.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    CHECK(classify_type(shuffled, false).to_string() == "B3");
  }
}

TEST_CASE("fundamental weights and coweights") {
  RootDatum a2 = sl3();
  auto omegas = fundamental_weights(a2);
  REQUIRE(omegas.size() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(pair_coroot(a2, j, omegas[static_cast<size_t>(i)]) == Rat(i == j ? 1 : 0));
  auto cow = fundamental_coweights(a2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(pair_with(a2, cow[static_cast<size_t>(i)],
                      to_rat(a2.simple_roots[static_cast<size_t>(j)])) == Rat(i == j ? 1 : 0));

  // non-semisimple: group-like rank-2 datum with a single root
  RootDatum torus_mix = make_root_datum(2, {vec({2, 0})}, {vec({1, 0})});
  CHECK(!is_semisimple(torus_mix));
  auto om = fundamental_weights(torus_mix);
  REQUIRE(om.size() == 1);
  CHECK(pair_coroot(torus_mix, 0, om[0]) == Rat(1));
  CHECK(om[0][1] == Rat(0));  // zero component on the fixed complement
  CHECK(is_semisimple(sl3()));
}

TEST_CASE("root datum validation") {
  CHECK_THROWS(make_root_datum(1, {vec({2})}, {vec({1}), vec({1})}));
  // dependent roots
  CHECK_THROWS(make_root_datum(2, {vec({2, 0}), vec({4, 0})}, {vec({1, 0}), vec({2, 0})}));
  // affine cartan
  CHECK_THROWS(make_root_datum(2, {vec({2, -2}), vec({-2, 2})}, {vec({1, 0}), vec({0, 1})}));
}
