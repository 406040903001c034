#include "symspace/satake.hpp"

#include <algorithm>

namespace symspace {

IRootDatum build_iroot_datum(const RootDatum& datum, const SatakeData& satake_in) {
  const int m = datum.size();
  SatakeData satake = satake_in;
  std::sort(satake.I_bullet.begin(), satake.I_bullet.end());
  satake.I_bullet.erase(std::unique(satake.I_bullet.begin(), satake.I_bullet.end()),
                        satake.I_bullet.end());
  if (static_cast<int>(satake.tau.size()) != m)
    throw AxiomError("tau", -1, "permutation size != |I|");
  for (int i = 0; i < m; ++i) {
    if (satake.tau[static_cast<size_t>(i)] < 0 || satake.tau[static_cast<size_t>(i)] >= m)
      throw AxiomError("tau", i, "index out of range");
    if (satake.tau[static_cast<size_t>(satake.tau[static_cast<size_t>(i)])] != i)
      throw AxiomError("tau involutive", i, "tau(tau(i)) != i");
  }
  for (int b : satake.I_bullet) {
    if (b < 0 || b >= m) throw AxiomError("I_bullet", b, "index out of range");
    if (!std::binary_search(satake.I_bullet.begin(), satake.I_bullet.end(),
                            satake.tau[static_cast<size_t>(b)]))
      throw AxiomError("tau(I_bullet) = I_bullet", b, "tau moves a black node out");
  }
  if (satake.tau_X.rows() != datum.rank || satake.tau_X.cols() != datum.rank)
    throw AxiomError("tau_X", -1, "matrix shape mismatch");
  if (!(satake.tau_X * satake.tau_X).is_identity())
    throw AxiomError("tau_X involutive", -1, "tau_X^2 != id");
  for (int i = 0; i < m; ++i) {
    IntVec img = satake.tau_X * datum.simple_roots[static_cast<size_t>(i)];
    if (img != datum.simple_roots[static_cast<size_t>(satake.tau[static_cast<size_t>(i)])])
      throw AxiomError("tau_X compatibility", i, "tau_X(alpha_i) != alpha_{tau i}");
  }

  IRootDatum ird;
  ird.datum = datum;
  ird.satake = satake;
  ird.w_bullet = parabolic_longest(datum, satake.I_bullet);
  ird.theta_X = -(ird.w_bullet * satake.tau_X);

  if (!(ird.theta_X * ird.theta_X).is_identity())
    throw AxiomError("theta involutive", -1, "theta_X^2 != id");
  // (i): w_bullet alpha_i = -alpha_{tau i} on black nodes
  for (int i : satake.I_bullet) {
    IntVec img = ird.w_bullet * datum.simple_roots[static_cast<size_t>(i)];
    if (img != vec_neg(datum.simple_roots[static_cast<size_t>(satake.tau[static_cast<size_t>(i)])]))
      throw AxiomError("(i)", i, "w_bullet(alpha_i) != -alpha_{tau i}");
  }
  // (ii): theta_X(alpha_i) = -w_bullet alpha_{tau i} everywhere
  for (int i = 0; i < m; ++i) {
    IntVec lhs = ird.theta_X * datum.simple_roots[static_cast<size_t>(i)];
    IntVec rhs = vec_neg(
        ird.w_bullet * datum.simple_roots[static_cast<size_t>(satake.tau[static_cast<size_t>(i)])]);
    if (lhs != rhs) throw AxiomError("(ii)", i, "theta_X(alpha_i) != -w_bullet(alpha_{tau i})");
  }

  for (int i = 0; i < m; ++i)
    if (!std::binary_search(satake.I_bullet.begin(), satake.I_bullet.end(), i))
      ird.I_circ.push_back(i);

  if (!satake.I_circ_prime.empty()) {
    // validate the override: exactly one node per tau-orbit on I_circ
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int i : satake.I_circ_prime) {
      if (std::binary_search(satake.I_bullet.begin(), satake.I_bullet.end(), i))
        throw AxiomError("I_circ_prime", i, "representative is a black node");
      seen[static_cast<size_t>(i)] = 1;
    }
    for (int i : ird.I_circ) {
      int cnt = seen[static_cast<size_t>(i)] + (satake.tau[static_cast<size_t>(i)] != i
                                                    ? seen[static_cast<size_t>(
                                                          satake.tau[static_cast<size_t>(i)])]
                                                    : 0);
      if (cnt != 1) throw AxiomError("I_circ_prime", i, "not a transversal of the tau-orbits");
    }
    ird.I_circ_prime = satake.I_circ_prime;
    std::sort(ird.I_circ_prime.begin(), ird.I_circ_prime.end());
  } else {
    for (int i : ird.I_circ)
      if (satake.tau[static_cast<size_t>(i)] >= i) ird.I_circ_prime.push_back(i);
  }
  return ird;
}

IntVec bar(const IRootDatum& ird, const IntVec& mu) {
  return vec_sub(mu, ird.theta_X * mu);
}

RatVec bar(const IRootDatum& ird, const RatVec& mu) {
  RatVec img(mu.size(), Rat(0));
  for (int i = 0; i < ird.theta_X.rows(); ++i)
    for (int j = 0; j < ird.theta_X.cols(); ++j)
      img[static_cast<size_t>(i)] += Rat(ird.theta_X.at(i, j)) * mu[static_cast<size_t>(j)];
  RatVec out(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) {
    out[i] = mu[i] - img[i];
    out[i].canonicalize();
  }
  return out;
}

TCoeffs t_coefficients(const IRootDatum& ird) {
  TCoeffs tc;
  const auto& d = ird.datum;
  const auto& bullet = ird.satake.I_bullet;
  std::vector<IntVec> bullet_roots;
  for (int j : bullet) bullet_roots.push_back(d.simple_roots[static_cast<size_t>(j)]);
  for (int i : ird.I_circ) {
    // theta(alpha_i) + alpha_{tau i} = - sum_j t_ij alpha_j
    IntVec lhs = vec_add(ird.theta_X * d.simple_roots[static_cast<size_t>(i)],
                         d.simple_roots[static_cast<size_t>(ird.satake.tau[static_cast<size_t>(i)])]);
    IntVec rhs = vec_neg(lhs);
    if (bullet.empty()) {
      if (!is_zero(rhs))
        throw AxiomError("t-coefficients", i, "theta(alpha_i) != -alpha_{tau i} with no black nodes");
      continue;
    }
    auto sol = solve_linear(bullet_roots, rhs);
    if (!sol) throw AxiomError("t-coefficients", i, "no decomposition over black roots");
    for (size_t k = 0; k < bullet.size(); ++k) {
      Rat q = (*sol)[k];
      q.canonicalize();
      if (q.get_den() != 1) throw AxiomError("t-coefficients", i, "non-integral coefficient");
      if (q < 0) throw AxiomError("t-coefficients", i, "negative coefficient");
      tc.t[{i, bullet[k]}] = q.get_num();
    }
  }
  // tau-symmetry
  for (const auto& [key, val] : tc.t) {
    auto [i, j] = key;
    auto it = tc.t.find({ird.satake.tau[static_cast<size_t>(i)], j});
    if (it == tc.t.end() || it->second != val)
      throw AxiomError("t-coefficients tau-symmetry", i, "t_ij != t_{tau i, j}");
  }
  return tc;
}

SphericalLattice spherical_lattice(const IRootDatum& ird) {
  SphericalLattice sl;
  sl.ird = ird;
  const int n = ird.datum.rank;
  // Xbreve = image of (id - theta_X) applied to a basis of X
  std::vector<IntVec> gens;
  IntMat one_minus_theta = IntMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) one_minus_theta.at(i, j) -= ird.theta_X.at(i, j);
  for (int j = 0; j < n; ++j) gens.push_back(one_minus_theta.col(j));
  sl.lattice = lattice_from_generators(n, gens);

  for (int i : ird.I_circ_prime)
    sl.bar_alpha.push_back(bar(ird, ird.datum.simple_roots[static_cast<size_t>(i)]));
  if (rational_rank(sl.bar_alpha) != static_cast<int>(sl.bar_alpha.size()))
    throw AxiomError("spherical independence", -1, "restricted roots linearly dependent");
  for (const auto& ba : sl.bar_alpha)
    sl.spherical_roots.push_back(primitive_on_ray(sl.lattice, ba));

  const int r = sl.spherical_rank();
  sl.spherical_cartan = IntMat(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      sl.spherical_cartan.at(a, b) =
          pair_coroot(ird.datum, ird.I_circ_prime[static_cast<size_t>(b)], sl.bar_alpha[static_cast<size_t>(a)]);
  sl.spherical_type = classify_type(sl.spherical_cartan, /*allow_rational_rescale=*/true);
  sl.tester = LatticeTester(sl.lattice);
  sl.bar_solver = PreparedSolver(sl.bar_alpha);
  return sl;
}

bool in_spherical_lattice(const SphericalLattice& sl, const IntVec& v) {
  return sl.tester.contains(v);
}

bool in_dominant_monoid(const SphericalLattice& sl, const IntVec& v) {
  return is_dominant(sl.ird.datum, v) && in_spherical_lattice(sl, v);
}

std::map<int, Rat> decompose_difference(const SphericalLattice& sl, const IntVec& lambda,
                                        const IntVec& mu) {
  if (!in_spherical_lattice(sl, lambda) || !in_spherical_lattice(sl, mu))
    throw std::invalid_argument("decompose_difference: inputs outside the spherical lattice");
  auto coeffs = dominance_coefficients(sl.ird.datum, lambda, mu);
  if (!coeffs) throw std::invalid_argument("decompose_difference: lambda ≰ mu");
  std::map<int, Rat> c;
  const auto& tau = sl.ird.satake.tau;
  for (size_t a = 0; a < sl.ird.I_circ_prime.size(); ++a) {
    const int i = sl.ird.I_circ_prime[a];
    const Int& n_i = (*coeffs)[static_cast<size_t>(i)];
    Rat ci = tau[static_cast<size_t>(i)] == i ? Rat(n_i, 2) : Rat(n_i);
    ci.canonicalize();
    c[i] = ci;
  }
  // reconstruction must be exact
  RatVec recon(static_cast<size_t>(sl.ird.datum.rank), Rat(0));
  for (size_t a = 0; a < sl.ird.I_circ_prime.size(); ++a) {
    const Rat& ci = c.at(sl.ird.I_circ_prime[a]);
    for (int j = 0; j < sl.ird.datum.rank; ++j)
      recon[static_cast<size_t>(j)] += ci * Rat(sl.bar_alpha[a][static_cast<size_t>(j)]);
  }
  IntVec diff = vec_sub(mu, lambda);
  for (int j = 0; j < sl.ird.datum.rank; ++j)
    if (recon[static_cast<size_t>(j)] != Rat(diff[static_cast<size_t>(j)]))
      throw std::logic_error("decompose_difference: reconstruction failed (corrupt datum)");
  return c;
}

IRootDatum doubled_iroot_datum(const IRootDatum& ird) {
  const RootDatum& d = ird.datum;
  const int n = d.rank;
  const int N = 2 * n;
  std::vector<IntVec> roots, coroots;
  for (int i = 0; i < d.size(); ++i) {
    IntVec r(static_cast<size_t>(N), Int(0)), c(static_cast<size_t>(N), Int(0));
    for (int j = 0; j < n; ++j) {
      r[static_cast<size_t>(j)] = d.simple_roots[static_cast<size_t>(i)][static_cast<size_t>(j)];
      c[static_cast<size_t>(j)] = d.simple_coroots[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    roots.push_back(r);
    coroots.push_back(c);
  }
  IntMat pairing(N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pairing.at(i, j) = d.pairing.at(i, j);
      pairing.at(n + i, n + j) = d.pairing.at(i, j);
    }
  std::vector<std::string> labels = d.labels;
  RootDatum dd = make_root_datum(N, roots, coroots, pairing, labels);

  // the involution on the doubled lattice must come out as theta (+) theta;
  // with w_bullet acting on the group block only, the torus block of the
  // diagram involution is -theta_X itself
  IntMat tau_X(N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tau_X.at(i, j) = ird.satake.tau_X.at(i, j);
      tau_X.at(n + i, n + j) = -ird.theta_X.at(i, j);
    }
  SatakeData sat{ird.satake.I_bullet, ird.satake.tau, tau_X, ird.I_circ_prime};
  return build_iroot_datum(dd, sat);
}

}  // namespace symspace
