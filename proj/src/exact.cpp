#include "symspace/exact.hpp"

#include <algorithm>
#include <sstream>

namespace symspace {

namespace {

void check_same_size(const IntVec& a, const IntVec& b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

}  // namespace

IntVec vec_add(const IntVec& a, const IntVec& b) {
  check_same_size(a, b, "vec_add");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  check_same_size(a, b, "vec_sub");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  check_same_size(a, b, "dot");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

bool is_zero(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

IntVec to_int(const RatVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Rat q = a[i];
    q.canonicalize();
    if (q.get_den() != 1) throw std::invalid_argument("to_int: non-integer coordinate " + q.get_str());
    r[i] = q.get_num();
  }
  return r;
}

IntVec primitive(const IntVec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  if (g == 0 || g == 1) return a;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

IntVec rat_primitive(const RatVec& a) {
  Int den = 1;
  for (const Rat& q : a) {
    Rat c = q;
    c.canonicalize();
    den = lcm(den, c.get_den());
  }
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Rat c = a[i] * Rat(den);
    c.canonicalize();
    r[i] = c.get_num();
  }
  return primitive(r);
}

std::string to_string(const IntVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMat
// ---------------------------------------------------------------------------

IntMat::IntMat(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols) throw std::invalid_argument("IntMat: entry count mismatch");
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMat::col(int j) const {
  IntVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMat::*: shape mismatch");
  IntMat r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += x * other.at(k, j);
    }
  return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat::*vec: size mismatch");
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Int s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
  return r;
}

bool IntMat::operator==(const IntMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

namespace {

// Elementary operations on D with the transform pairs kept in sync.
// Row ops act as D <- E D, so U <- E U and U_inv <- U_inv E^{-1}.
struct SmithWork {
  IntMat D, U, V, U_inv, V_inv;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
    for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    for (int i = 0; i < U_inv.rows(); ++i) std::swap(U_inv.at(i, a), U_inv.at(i, b));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
    for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    for (int j = 0; j < V_inv.cols(); ++j) std::swap(V_inv.at(a, j), V_inv.at(b, j));
  }
  void negate_row(int a) {
    for (int j = 0; j < D.cols(); ++j) D.at(a, j) = -D.at(a, j);
    for (int j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
    for (int i = 0; i < U_inv.rows(); ++i) U_inv.at(i, a) = -U_inv.at(i, a);
  }
  // row[a] -= q * row[b]
  void add_row(int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < D.cols(); ++j) D.at(a, j) -= q * D.at(b, j);
    for (int j = 0; j < U.cols(); ++j) U.at(a, j) -= q * U.at(b, j);
    for (int i = 0; i < U_inv.rows(); ++i) U_inv.at(i, b) += q * U_inv.at(i, a);
  }
  // col[a] -= q * col[b]
  void add_col(int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < D.rows(); ++i) D.at(i, a) -= q * D.at(i, b);
    for (int i = 0; i < V.rows(); ++i) V.at(i, a) -= q * V.at(i, b);
    for (int j = 0; j < V_inv.cols(); ++j) V_inv.at(b, j) += q * V_inv.at(a, j);
  }
};

}  // namespace

NormalForm smith_normal_form(const IntMat& m) {
  const int r = m.rows(), c = m.cols();
  SmithWork w{m, IntMat::identity(r), IntMat::identity(c), IntMat::identity(r), IntMat::identity(c)};

  int t = 0;
  const int bound = std::min(r, c);
  while (t < bound) {
    // locate a nonzero entry of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (w.D.at(i, j) != 0 &&
            (pi < 0 || cmp(abs(w.D.at(i, j)), abs(w.D.at(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (w.D.at(i, t) == 0) continue;
      Int q = w.D.at(i, t) / w.D.at(t, t);
      w.add_row(i, t, q);
      if (w.D.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < c; ++j) {
      if (w.D.at(t, j) == 0) continue;
      Int q = w.D.at(t, j) / w.D.at(t, t);
      w.add_col(j, t, q);
      if (w.D.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller pivot now exists in the block

    // pivot must divide the remaining block; merge an offending row and retry
    bool divides = true;
    for (int i = t + 1; i < r && divides; ++i)
      for (int j = t + 1; j < c && divides; ++j)
        if (w.D.at(i, j) % w.D.at(t, t) != 0) {
          w.add_row(t, i, Int(-1));
          divides = false;
        }
    if (!divides) continue;

    if (w.D.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  NormalForm nf{w.U, w.V, w.D, w.U_inv, w.V_inv, t};
  return nf;
}

NormalForm hermite_normal_form(const IntMat& m) {
  const int r = m.rows(), c = m.cols();
  SmithWork w{m, IntMat::identity(r), IntMat::identity(c), IntMat::identity(r), IntMat::identity(c)};

  int pr = 0;
  for (int j = 0; j < c && pr < r; ++j) {
    // gcd-eliminate below row pr in column j
    while (true) {
      int pi = -1;
      for (int i = pr; i < r; ++i)
        if (w.D.at(i, j) != 0 && (pi < 0 || cmp(abs(w.D.at(i, j)), abs(w.D.at(pi, j))) < 0)) pi = i;
      if (pi < 0) break;
      w.swap_rows(pr, pi);
      bool done = true;
      for (int i = pr + 1; i < r; ++i) {
        if (w.D.at(i, j) == 0) continue;
        Int q = w.D.at(i, j) / w.D.at(pr, j);
        w.add_row(i, pr, q);
        if (w.D.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (w.D.at(pr, j) == 0) continue;
    if (w.D.at(pr, j) < 0) w.negate_row(pr);
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < pr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w.D.at(i, j).get_mpz_t(), w.D.at(pr, j).get_mpz_t());
      w.add_row(i, pr, q);
    }
    ++pr;
  }

  NormalForm nf{w.U, w.V, w.D, w.U_inv, w.V_inv, pr};
  return nf;
}

NormalForm normal_form(const IntMat& m, NormalFormKind kind) {
  return kind == NormalFormKind::smith ? smith_normal_form(m) : hermite_normal_form(m);
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
  NormalForm nf = smith_normal_form(m);
  std::vector<IntVec> kernel;
  for (int j = nf.rank; j < m.cols(); ++j) kernel.push_back(nf.V.col(j));
  return kernel;
}

// ---------------------------------------------------------------------------
// Rational linear algebra
// ---------------------------------------------------------------------------

std::optional<RatVec> solve_linear(const std::vector<RatVec>& vecs, const RatVec& target) {
  const int k = static_cast<int>(vecs.size());
  const int n = static_cast<int>(target.size());
  for (const auto& v : vecs)
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("solve_linear: size mismatch");

  // augmented system [A | b] with A columns = vecs
  std::vector<RatVec> eq(n, RatVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) eq[i][j] = vecs[j][i];
    eq[i][k] = target[i];
  }

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (eq[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(eq[row], eq[p]);
    Rat inv = 1 / eq[row][col];
    for (int j = col; j <= k; ++j) eq[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || eq[i][col] == 0) continue;
      Rat f = eq[i][col];
      for (int j = col; j <= k; ++j) eq[i][j] -= f * eq[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (eq[i][k] != 0) return std::nullopt;

  RatVec x(k, Rat(0));
  for (int i = 0; i < row; ++i) x[pivot_col_of_row[i]] = eq[i][k];
  for (auto& q : x) q.canonicalize();
  return x;
}

std::optional<RatVec> solve_linear(const std::vector<IntVec>& vecs, const IntVec& target) {
  std::vector<RatVec> vr;
  vr.reserve(vecs.size());
  for (const auto& v : vecs) vr.push_back(to_rat(v));
  return solve_linear(vr, to_rat(target));
}

std::optional<RatVec> solve_linear(const std::vector<IntVec>& vecs, const RatVec& target) {
  std::vector<RatVec> vr;
  vr.reserve(vecs.size());
  for (const auto& v : vecs) vr.push_back(to_rat(v));
  return solve_linear(vr, target);
}

int rational_rank(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<RatVec> m = vecs;
  const int n = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(m.size()); ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    for (int i = rank + 1; i < static_cast<int>(m.size()); ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int rational_rank(const std::vector<IntVec>& vecs) {
  std::vector<RatVec> vr;
  vr.reserve(vecs.size());
  for (const auto& v : vecs) vr.push_back(to_rat(v));
  return rational_rank(vr);
}

// ---------------------------------------------------------------------------
// Lattices
// ---------------------------------------------------------------------------

LatticeBasis lattice_from_generators(int ambient_rank, const std::vector<IntVec>& generators) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_rank)
      throw std::invalid_argument("lattice_from_generators: rank mismatch");
  if (generators.empty()) return LatticeBasis{ambient_rank, {}};
  IntMat m(static_cast<int>(generators.size()), ambient_rank);
  for (size_t i = 0; i < generators.size(); ++i)
    for (int j = 0; j < ambient_rank; ++j) m.at(static_cast<int>(i), j) = generators[i][j];
  NormalForm nf = hermite_normal_form(m);
  LatticeBasis lb{ambient_rank, {}};
  for (int i = 0; i < nf.rank; ++i) lb.basis.push_back(nf.D.row(i));
  return lb;
}

LatticeBasis standard_lattice(int n) {
  LatticeBasis lb{n, {}};
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    lb.basis.push_back(e);
  }
  return lb;
}

namespace {

// Hermite form of the basis rows, cached per call site (lattices here are
// small; recomputation is cheap and keeps the type a plain aggregate).
IntMat basis_hermite(const LatticeBasis& lattice) {
  IntMat m(lattice.rank(), lattice.ambient_rank);
  for (int i = 0; i < lattice.rank(); ++i)
    for (int j = 0; j < lattice.ambient_rank; ++j) m.at(i, j) = lattice.basis[i][j];
  return hermite_normal_form(m).D;
}

}  // namespace

bool lattice_member(const LatticeBasis& lattice, const IntVec& v) {
  if (static_cast<int>(v.size()) != lattice.ambient_rank)
    throw std::invalid_argument("lattice_member: rank mismatch");
  if (lattice.rank() == 0) return is_zero(v);
  IntMat h = basis_hermite(lattice);
  IntVec w = v;
  int row = 0;
  for (int j = 0; j < lattice.ambient_rank && row < h.rows(); ++j) {
    if (h.at(row, j) == 0) continue;  // not a pivot column for this row
    if (w[j] % h.at(row, j) == 0) {
      Int q = w[j] / h.at(row, j);
      if (q != 0)
        for (int t = 0; t < lattice.ambient_rank; ++t) w[t] -= q * h.at(row, t);
    }
    ++row;
  }
  return is_zero(w);
}

std::optional<RatVec> lattice_coordinates(const LatticeBasis& lattice, const RatVec& v) {
  std::vector<RatVec> rows;
  rows.reserve(lattice.basis.size());
  for (const auto& b : lattice.basis) rows.push_back(to_rat(b));
  return solve_linear(rows, v);
}

IntVec primitive_on_ray(const LatticeBasis& lattice, const RatVec& ray) {
  if (is_zero(ray)) throw std::invalid_argument("primitive_on_ray: zero ray");
  auto coords = lattice_coordinates(lattice, ray);
  if (!coords) throw std::invalid_argument("primitive_on_ray: ray meets the lattice only at 0");
  // smallest t > 0 with t * coords integral
  Int den = 1;
  for (Rat& q : *coords) {
    q.canonicalize();
    den = lcm(den, q.get_den());
  }
  IntVec scaled(coords->size());
  Int g = 0;
  for (size_t i = 0; i < coords->size(); ++i) {
    Rat c = (*coords)[i] * Rat(den);
    c.canonicalize();
    scaled[i] = c.get_num();
    g = gcd(g, scaled[i]);
  }
  if (g == 0) throw std::invalid_argument("primitive_on_ray: ray meets the lattice only at 0");
  IntVec result(lattice.ambient_rank, Int(0));
  for (size_t i = 0; i < scaled.size(); ++i) {
    Int c = scaled[i] / g;
    if (c == 0) continue;
    for (int j = 0; j < lattice.ambient_rank; ++j) result[j] += c * lattice.basis[i][j];
  }
  return result;
}

IntVec primitive_on_ray(const LatticeBasis& lattice, const IntVec& ray) {
  return primitive_on_ray(lattice, to_rat(ray));
}

LatticeTester::LatticeTester(const LatticeBasis& lattice)
    : ambient_(lattice.ambient_rank), h_(basis_hermite(lattice)) {}

bool LatticeTester::contains(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("LatticeTester: rank mismatch");
  IntVec w = v;
  int row = 0;
  for (int j = 0; j < ambient_ && row < h_.rows(); ++j) {
    if (h_.at(row, j) == 0) continue;
    if (w[static_cast<size_t>(j)] % h_.at(row, j) == 0) {
      Int q = w[static_cast<size_t>(j)] / h_.at(row, j);
      if (q != 0)
        for (int t = j; t < ambient_; ++t) w[static_cast<size_t>(t)] -= q * h_.at(row, t);
    }
    ++row;
  }
  return is_zero(w);
}

PreparedSolver::PreparedSolver(const std::vector<IntVec>& vecs) : vecs_(vecs) {
  const int k = static_cast<int>(vecs.size());
  if (k == 0) return;
  ambient_ = static_cast<int>(vecs[0].size());
  if (rational_rank(vecs) != k)
    throw std::invalid_argument("PreparedSolver: family not linearly independent");
  // G = A^T A, left inverse = G^{-1} A^T
  std::vector<RatVec> aug(static_cast<size_t>(k), RatVec(static_cast<size_t>(2 * k), Rat(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      aug[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Rat(dot(vecs[static_cast<size_t>(i)], vecs[static_cast<size_t>(j)]));
    aug[static_cast<size_t>(i)][static_cast<size_t>(k + i)] = 1;
  }
  for (int col = 0; col < k; ++col) {
    int p = -1;
    for (int i = col; i < k; ++i)
      if (aug[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::logic_error("PreparedSolver: Gram matrix singular");
    std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(p)]);
    Rat inv = 1 / aug[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = 0; j < 2 * k; ++j) aug[static_cast<size_t>(col)][static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < k; ++i) {
      if (i == col || aug[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
      Rat f = aug[static_cast<size_t>(i)][static_cast<size_t>(col)];
      for (int j = 0; j < 2 * k; ++j)
        aug[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * aug[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  left_.assign(static_cast<size_t>(k), RatVec(static_cast<size_t>(ambient_), Rat(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < ambient_; ++j) {
      Rat s = 0;
      for (int t = 0; t < k; ++t)
        s += aug[static_cast<size_t>(i)][static_cast<size_t>(k + t)] *
             Rat(vecs[static_cast<size_t>(t)][static_cast<size_t>(j)]);
      s.canonicalize();
      left_[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
    }
}

std::optional<RatVec> PreparedSolver::solve(const IntVec& target) const {
  const int k = static_cast<int>(vecs_.size());
  if (k == 0) return is_zero(target) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  if (static_cast<int>(target.size()) != ambient_)
    throw std::invalid_argument("PreparedSolver: size mismatch");
  RatVec x(static_cast<size_t>(k), Rat(0));
  for (int i = 0; i < k; ++i) {
    Rat s = 0;
    for (int j = 0; j < ambient_; ++j)
      if (target[static_cast<size_t>(j)] != 0)
        s += left_[static_cast<size_t>(i)][static_cast<size_t>(j)] * Rat(target[static_cast<size_t>(j)]);
    s.canonicalize();
    x[static_cast<size_t>(i)] = s;
  }
  // consistency: the candidate must reproduce the target exactly
  for (int j = 0; j < ambient_; ++j) {
    Rat s = 0;
    for (int i = 0; i < k; ++i)
      if (x[static_cast<size_t>(i)] != 0)
        s += x[static_cast<size_t>(i)] * Rat(vecs_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    if (s != Rat(target[static_cast<size_t>(j)])) return std::nullopt;
  }
  return x;
}

Int lattice_index(const LatticeBasis& lattice, const std::vector<IntVec>& vecs) {
  LatticeBasis sub = lattice_from_generators(lattice.ambient_rank, vecs);
  if (sub.rank() != lattice.rank()) return 0;
  if (lattice.rank() == 0) return 1;
  // express sub basis in lattice coordinates; index = |det|
  std::vector<IntVec> coords;
  for (const auto& v : sub.basis) {
    auto c = lattice_coordinates(lattice, to_rat(v));
    if (!c) return 0;
    coords.push_back(to_int(*c));  // sub must sit inside lattice for a finite index
  }
  IntMat m(lattice.rank(), lattice.rank());
  for (int i = 0; i < lattice.rank(); ++i)
    for (int j = 0; j < lattice.rank(); ++j) m.at(i, j) = coords[i][j];
  NormalForm nf = smith_normal_form(m);
  Int det = 1;
  for (int i = 0; i < lattice.rank(); ++i) det *= nf.D.at(i, i);
  return abs(det);
}

}  // namespace symspace
