#include "symspace/root_datum.hpp"

#include <algorithm>
#include <sstream>

namespace symspace {

std::string CartanType::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << "+";
    os << components[i].first << components[i].second;
  }
  if (components.empty()) os << "0";
  return os.str();
}

namespace {

[[noreturn]] void not_finite(const std::string& why) {
  throw std::invalid_argument("classify_type: not a finite-type Cartan matrix (" + why + ")");
}

// family + rank of one connected GCM component, nodes given by `comp` indices
// into the normalized matrix a.
std::pair<char, int> classify_component(const std::vector<IntVec>& a, const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return {'A', 1};

  auto entry = [&](int i, int j) { return a[static_cast<size_t>(comp[static_cast<size_t>(i)])]
                                            [static_cast<size_t>(comp[static_cast<size_t>(j)])]; };

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  int edges = 0;
  int max_mult = 1;
  std::pair<int, int> mult_edge{-1, -1};
  int mult_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (entry(i, j) == 0) continue;
      adj[static_cast<size_t>(i)].push_back(j);
      adj[static_cast<size_t>(j)].push_back(i);
      ++edges;
      Int m = entry(i, j) * entry(j, i);
      if (m > 3) not_finite("edge weight >= 4");
      int mi = static_cast<int>(m.get_si());
      if (mi > 1) {
        ++mult_count;
        mult_edge = {i, j};
        max_mult = std::max(max_mult, mi);
      }
    }
  if (edges != n - 1) not_finite("diagram is not a tree");
  if (mult_count > 1) not_finite("more than one multiple edge");

  std::vector<int> degree(static_cast<size_t>(n));
  int branch = -1, branch_count = 0;
  for (int i = 0; i < n; ++i) {
    degree[static_cast<size_t>(i)] = static_cast<int>(adj[static_cast<size_t>(i)].size());
    if (degree[static_cast<size_t>(i)] > 3) not_finite("node of degree >= 4");
    if (degree[static_cast<size_t>(i)] == 3) {
      branch = i;
      ++branch_count;
    }
  }
  if (branch_count > 1) not_finite("more than one branch node");

  if (max_mult == 3) {
    if (n == 2) return {'G', 2};
    not_finite("triple edge in rank > 2");
  }
  if (max_mult == 2) {
    if (branch_count > 0) not_finite("branch node with a double edge");
    auto [u, v] = mult_edge;
    const bool u_end = degree[static_cast<size_t>(u)] == 1;
    const bool v_end = degree[static_cast<size_t>(v)] == 1;
    if (n == 2) return {'B', 2};
    if (n == 4 && !u_end && !v_end) return {'F', 4};
    if (!u_end && !v_end) not_finite("interior double edge outside F4");
    // orient: `inner` -- `end`
    int end = v_end ? v : u;
    int inner = v_end ? u : v;
    // the short root pairs to -2 against the long one
    if (entry(end, inner) == -2) return {'B', n};
    if (entry(inner, end) == -2) return {'C', n};
    not_finite("inconsistent double edge");
  }
  // simply laced
  if (branch_count == 0) return {'A', n};
  // tail lengths from the branch node
  std::vector<int> tails;
  for (int s : adj[static_cast<size_t>(branch)]) {
    int len = 1, prev = branch, cur = s;
    while (degree[static_cast<size_t>(cur)] == 2) {
      int nxt = adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                         : adj[static_cast<size_t>(cur)][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    tails.push_back(len);
  }
  std::sort(tails.begin(), tails.end());
  if (tails[0] == 1 && tails[1] == 1) return {'D', n};
  if (tails[0] == 1 && tails[1] == 2 && tails[2] == 2) return {'E', 6};
  if (tails[0] == 1 && tails[1] == 2 && tails[2] == 3) return {'E', 7};
  if (tails[0] == 1 && tails[1] == 2 && tails[2] == 4) return {'E', 8};
  not_finite("branch tails outside D/E");
}

}  // namespace

CartanType classify_type(const IntMat& cartan, bool allow_rational_rescale) {
  const int n = cartan.rows();
  if (cartan.cols() != n) throw std::invalid_argument("classify_type: matrix not square");

  // normalize rows to diagonal 2
  std::vector<IntVec> a(static_cast<size_t>(n), IntVec(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const Int& d = cartan.at(i, i);
    if (d <= 0) not_finite("nonpositive diagonal entry");
    if (d != 2 && !allow_rational_rescale) not_finite("diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      Rat q(2 * cartan.at(i, j), d);
      q.canonicalize();
      if (q.get_den() != 1)
        throw std::invalid_argument(
            "classify_type: non-crystallographic after normalization (row " + std::to_string(i) +
            ")");
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.get_num();
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0) not_finite("positive off-diagonal");
      if ((a[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) !=
          (a[static_cast<size_t>(j)][static_cast<size_t>(i)] == 0))
        not_finite("asymmetric zero pattern");
    }

  // connected components
  std::vector<int> color(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    color[static_cast<size_t>(s)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (color[static_cast<size_t>(v)] < 0 &&
            a[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0) {
          color[static_cast<size_t>(v)] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  CartanType t;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> comp;
    for (int i = 0; i < n; ++i)
      if (color[static_cast<size_t>(i)] == c) comp.push_back(i);
    t.components.push_back(classify_component(a, comp));
  }
  std::sort(t.components.begin(), t.components.end());
  return t;
}

RootDatum make_root_datum(int rank, std::vector<IntVec> simple_roots,
                          std::vector<IntVec> simple_coroots, std::optional<IntMat> pairing,
                          std::vector<std::string> labels) {
  RootDatum d;
  d.rank = rank;
  d.simple_roots = std::move(simple_roots);
  d.simple_coroots = std::move(simple_coroots);
  if (d.simple_roots.size() != d.simple_coroots.size())
    throw std::invalid_argument("make_root_datum: roots/coroots count mismatch");
  for (const auto& v : d.simple_roots)
    if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("make_root_datum: root size");
  for (const auto& v : d.simple_coroots)
    if (static_cast<int>(v.size()) != rank)
      throw std::invalid_argument("make_root_datum: coroot size");
  d.pairing = pairing ? *pairing : IntMat::identity(rank);
  if (d.pairing.rows() != rank || d.pairing.cols() != rank)
    throw std::invalid_argument("make_root_datum: pairing shape");

  const int m = d.size();
  if (labels.empty())
    for (int i = 0; i < m; ++i) d.labels.push_back(std::to_string(i + 1));
  else {
    if (static_cast<int>(labels.size()) != m)
      throw std::invalid_argument("make_root_datum: label count mismatch");
    d.labels = std::move(labels);
  }

  d.cartan = IntMat(m, m);
  for (int i = 0; i < m; ++i) {
    IntVec py = d.pairing.transpose() * d.simple_coroots[static_cast<size_t>(i)];
    for (int j = 0; j < m; ++j) d.cartan.at(i, j) = dot(py, d.simple_roots[static_cast<size_t>(j)]);
    d.coroot_functionals.push_back(std::move(py));
  }
  if (rational_rank(d.simple_roots) != m)
    throw std::invalid_argument("make_root_datum: simple roots not linearly independent");
  d.type = classify_type(d.cartan, /*allow_rational_rescale=*/false);
  return d;
}

Int pair_coroot(const RootDatum& d, int i, const IntVec& x) {
  return dot(d.coroot_functionals[static_cast<size_t>(i)], x);
}

Rat pair_coroot(const RootDatum& d, int i, const RatVec& x) {
  return dot(d.coroot_functionals[static_cast<size_t>(i)], x);
}

Rat pair_with(const RootDatum& d, const RatVec& y, const RatVec& x) {
  Rat s = 0;
  for (int i = 0; i < d.rank; ++i) {
    if (y[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < d.rank; ++j)
      s += y[static_cast<size_t>(i)] * Rat(d.pairing.at(i, j)) * x[static_cast<size_t>(j)];
  }
  return s;
}

bool is_dominant(const RootDatum& d, const IntVec& x) {
  for (int i = 0; i < d.size(); ++i)
    if (pair_coroot(d, i, x) < 0) return false;
  return true;
}

std::optional<IntVec> dominance_coefficients(const RootDatum& d, const IntVec& lambda,
                                             const IntVec& mu) {
  auto sol = solve_linear(d.simple_roots, vec_sub(mu, lambda));
  if (!sol) return std::nullopt;
  IntVec n(sol->size());
  for (size_t i = 0; i < sol->size(); ++i) {
    Rat q = (*sol)[i];
    q.canonicalize();
    if (q.get_den() != 1 || q < 0) return std::nullopt;
    n[i] = q.get_num();
  }
  return n;
}

bool dominance_leq(const RootDatum& d, const IntVec& lambda, const IntVec& mu) {
  return dominance_coefficients(d, lambda, mu).has_value();
}

IntMat simple_reflection(const RootDatum& d, int i) {
  IntMat s = IntMat::identity(d.rank);
  const IntVec& py = d.coroot_functionals[static_cast<size_t>(i)];
  const IntVec& alpha = d.simple_roots[static_cast<size_t>(i)];
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) s.at(r, c) -= alpha[static_cast<size_t>(r)] * py[static_cast<size_t>(c)];
  return s;
}

namespace {

// sign of w(alpha_j): +1 positive root, -1 negative. Roots of the ambient
// system have uniform-sign coordinates over the simple roots.
int root_sign(const RootDatum& d, const IntVec& root) {
  auto sol = solve_linear(d.simple_roots, root);
  if (!sol) throw std::logic_error("root_sign: vector outside the root span");
  for (const Rat& q : *sol) {
    if (q > 0) return 1;
    if (q < 0) return -1;
  }
  throw std::logic_error("root_sign: zero vector");
}

}  // namespace

IntMat parabolic_longest(const RootDatum& d, const std::vector<int>& J) {
  IntMat w = IntMat::identity(d.rank);
  // greedy descent: extend while some w(alpha_j) stays positive
  const int max_steps = 4 * d.size() * d.size() + 64;
  for (int step = 0; step <= max_steps; ++step) {
    int up = -1;
    for (int j : J) {
      IntVec img = w * d.simple_roots[static_cast<size_t>(j)];
      if (root_sign(d, img) > 0) {
        up = j;
        break;
      }
    }
    if (up < 0) return w;
    w = w * simple_reflection(d, up);
  }
  throw std::logic_error("parabolic_longest: did not terminate (invalid datum)");
}

namespace {

std::vector<RatVec> dual_family(const std::vector<RatVec>& functionals, int rank) {
  // rows `functionals` (size m x rank); returns v_i with functionals[j] . v_i
  // = delta_ij and zero coordinates on non-pivot columns of the row space.
  const int m = static_cast<int>(functionals.size());
  std::vector<RatVec> rows = functionals;
  // row-reduce a copy to find pivot columns
  std::vector<int> pivots;
  {
    std::vector<RatVec> r = rows;
    int row = 0;
    for (int col = 0; col < rank && row < m; ++col) {
      int p = -1;
      for (int i = row; i < m; ++i)
        if (r[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(r[static_cast<size_t>(row)], r[static_cast<size_t>(p)]);
      for (int i = 0; i < m; ++i) {
        if (i == row || r[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
        Rat f = r[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                r[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int jj = 0; jj < rank; ++jj)
          r[static_cast<size_t>(i)][static_cast<size_t>(jj)] -=
              f * r[static_cast<size_t>(row)][static_cast<size_t>(jj)];
      }
      pivots.push_back(col);
      ++row;
    }
    if (row != m) throw std::invalid_argument("dual_family: functionals not independent");
  }
  // full square system: functionals rows, then e_k for non-pivot k
  std::vector<RatVec> full = rows;
  std::vector<bool> is_pivot(static_cast<size_t>(rank), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  for (int k = 0; k < rank; ++k) {
    if (is_pivot[static_cast<size_t>(k)]) continue;
    RatVec e(static_cast<size_t>(rank), Rat(0));
    e[static_cast<size_t>(k)] = 1;
    full.push_back(e);
  }
  // solve full * v_i = e_i
  std::vector<RatVec> cols;  // columns of the matrix "full" transposed
  for (int j = 0; j < rank; ++j) {
    RatVec col(full.size());
    for (size_t i = 0; i < full.size(); ++i) col[i] = full[i][static_cast<size_t>(j)];
    cols.push_back(col);
  }
  std::vector<RatVec> out;
  for (int i = 0; i < m; ++i) {
    RatVec rhs(full.size(), Rat(0));
    rhs[static_cast<size_t>(i)] = 1;
    auto sol = solve_linear(cols, rhs);
    if (!sol) throw std::logic_error("dual_family: inconsistent system");
    out.push_back(*sol);
  }
  return out;
}

}  // namespace

std::vector<RatVec> fundamental_weights(const RootDatum& d) {
  std::vector<RatVec> functionals;
  for (int i = 0; i < d.size(); ++i)
    functionals.push_back(to_rat(d.coroot_functionals[static_cast<size_t>(i)]));
  return dual_family(functionals, d.rank);
}

std::vector<RatVec> fundamental_coweights(const RootDatum& d) {
  // omega^vee_i = sum_k x_k coroot_k with x row i of the inverse Cartan
  const int m = d.size();
  std::vector<RatVec> cart_cols;
  for (int j = 0; j < m; ++j) {
    RatVec col(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) col[static_cast<size_t>(k)] = Rat(d.cartan.at(k, j));
    cart_cols.push_back(col);
  }
  std::vector<RatVec> out;
  for (int i = 0; i < m; ++i) {
    RatVec rhs(static_cast<size_t>(m), Rat(0));
    rhs[static_cast<size_t>(i)] = 1;
    // solve x^T C = e_i^T, i.e. C^T x = e_i; cart_cols are columns of C, so
    // build columns of C^T = rows of C
    std::vector<RatVec> ct_cols;
    for (int k = 0; k < m; ++k) {
      RatVec col(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) col[static_cast<size_t>(j)] = Rat(d.cartan.at(k, j));
      ct_cols.push_back(col);
    }
    auto x = solve_linear(ct_cols, rhs);
    if (!x) throw std::logic_error("fundamental_coweights: Cartan matrix not invertible");
    RatVec v(static_cast<size_t>(d.rank), Rat(0));
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < d.rank; ++j)
        v[static_cast<size_t>(j)] += (*x)[static_cast<size_t>(k)] *
                                     Rat(d.simple_coroots[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    out.push_back(v);
  }
  return out;
}

bool is_semisimple(const RootDatum& d) {
  return d.size() == d.rank && rational_rank(d.simple_roots) == d.rank;
}

}  // namespace symspace
