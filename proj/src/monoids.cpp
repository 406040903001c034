#include "symspace/monoids.hpp"

#include <algorithm>
#include <sstream>

namespace symspace {

SphericalMonoid::SphericalMonoid(std::shared_ptr<const SphericalLattice> sl,
                                 std::vector<IntVec> generators)
    : sl_(std::move(sl)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != sl_->ird.datum.rank)
      throw std::invalid_argument("SphericalMonoid: generator rank mismatch");
    if (!in_dominant_monoid(*sl_, g))
      throw std::invalid_argument("SphericalMonoid: generator outside Xbreve^+: " + to_string(g));
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  std::erase_if(generators_, [](const IntVec& v) { return is_zero(v); });
}

const Cone& SphericalMonoid::cone() const {
  std::call_once(cache_->cone_flag, [&] {
    cache_->cone = cone_from_generators(sl_->ird.datum.rank, generators_);
  });
  return cache_->cone;
}

const HilbertBasis& SphericalMonoid::hilbert() const {
  std::call_once(cache_->hb_flag, [&] { cache_->hb = hilbert_basis(cone(), sl_->lattice); });
  return cache_->hb;
}

bool SphericalMonoid::generators_are_hilbert_basis() const {
  std::call_once(cache_->sat_flag, [&] { cache_->gens_are_hb = generators_ == hilbert().elements; });
  return cache_->gens_are_hb;
}

SphericalMonoid dominant_monoid(std::shared_ptr<const SphericalLattice> sl) {
  const RootDatum& d = sl->ird.datum;
  // dominant cone cut to the rational span of Xbreve
  std::vector<IntVec> ineqs = d.coroot_functionals;
  {
    // functionals vanishing on the span: integer kernel of (basis rows)^T ... x
    IntMat bt(sl->lattice.rank(), d.rank);
    for (int i = 0; i < sl->lattice.rank(); ++i)
      for (int j = 0; j < d.rank; ++j)
        bt.at(i, j) = sl->lattice.basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (const auto& nvec : integer_kernel(bt)) {
      ineqs.push_back(nvec);
      ineqs.push_back(vec_neg(nvec));
    }
  }
  Cone dom = cone_from_inequalities(d.rank, ineqs);
  HilbertBasis hb = hilbert_basis(dom, sl->lattice);
  return SphericalMonoid(std::move(sl), hb.elements);
}

bool member(const SphericalMonoid& L, const IntVec& mu) {
  if (is_zero(mu)) return true;
  if (L.generators().empty()) return false;
  if (!cone_contains(L.cone(), mu)) return false;
  if (!L.sl().tester.contains(mu)) return false;
  if (L.generators_are_hilbert_basis()) return true;  // saturated: tests above are exact
  if (!is_pointed(L.cone()))
    throw std::invalid_argument("member: cone has lineality, enumeration unbounded");
  IntVec phi = positive_functional(L.cone());
  const auto& gens = L.generators();
  std::vector<IntVec> stack{mu};
  std::set<IntVec> seen;
  while (!stack.empty()) {
    IntVec cur = std::move(stack.back());
    stack.pop_back();
    if (is_zero(cur)) return true;
    if (!seen.insert(cur).second) continue;
    for (size_t k = 0; k < gens.size(); ++k) {
      IntVec next = vec_sub(cur, gens[k]);
      if (dot(phi, next) < 0) continue;
      if (!cone_contains(L.cone(), next)) continue;
      stack.push_back(std::move(next));
    }
  }
  return false;
}

bool generates_lattice(const SphericalMonoid& L) {
  LatticeBasis gen_lattice = lattice_from_generators(L.sl().ird.datum.rank, L.generators());
  if (gen_lattice.rank() != L.sl().lattice.rank()) return false;
  for (const auto& b : L.sl().lattice.basis)
    if (!lattice_member(gen_lattice, b)) return false;
  return true;
}

bool is_saturated(const SphericalMonoid& L) {
  for (const auto& h : L.hilbert().elements)
    if (!member(L, h)) return false;
  return true;
}

SphericalMonoid saturate(const SphericalMonoid& L) {
  return SphericalMonoid(L.sl_ptr(), L.hilbert().elements);
}

std::vector<IntVec> down_set(const SphericalLattice& sl, const IntVec& mu) {
  if (!in_dominant_monoid(sl, mu)) throw std::invalid_argument("down_set: mu not in Xbreve^+");
  const RootDatum& d = sl.ird.datum;
  const int m = d.size();
  std::vector<RatVec> cow = fundamental_coweights(d);
  std::vector<long> hi(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    Rat b = pair_with(d, cow[static_cast<size_t>(i)], to_rat(mu));
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
    if (fl < 0) fl = 0;
    hi[static_cast<size_t>(i)] = fl.get_si();
  }
  std::vector<IntVec> out;
  std::vector<long> n(static_cast<size_t>(m), 0);
  while (true) {
    IntVec lambda = mu;
    for (int i = 0; i < m; ++i)
      if (n[static_cast<size_t>(i)] != 0)
        lambda = vec_sub(lambda, vec_scale(Int(n[static_cast<size_t>(i)]),
                                           d.simple_roots[static_cast<size_t>(i)]));
    if (is_dominant(d, lambda) && in_spherical_lattice(sl, lambda)) out.push_back(lambda);
    int k = m - 1;
    while (k >= 0 && n[static_cast<size_t>(k)] == hi[static_cast<size_t>(k)]) {
      n[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++n[static_cast<size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> elements_up_to_degree(const SphericalMonoid& L, int bound) {
  std::set<IntVec> result;
  IntVec zero(static_cast<size_t>(L.sl().ird.datum.rank), Int(0));
  result.insert(zero);
  std::vector<IntVec> frontier{zero};
  for (int step = 0; step < bound; ++step) {
    std::vector<IntVec> next;
    for (const auto& x : frontier)
      for (const auto& g : L.generators()) {
        IntVec y = vec_add(x, g);
        if (result.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {result.begin(), result.end()};
}

ClosednessReport is_closed(const SphericalMonoid& L, ClosednessMode mode, int bound) {
  ClosednessReport rep;
  rep.mode = mode;
  rep.bound = mode == ClosednessMode::bruteforce ? bound : 0;

  std::vector<IntVec> probes;
  if (mode == ClosednessMode::generator_downsets) {
    probes = L.generators();
    for (const auto& h : L.hilbert().elements)
      if (member(L, h)) probes.push_back(h);
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  } else {
    probes = elements_up_to_degree(L, bound);
  }
  for (const auto& muv : probes) {
    for (const auto& lam : down_set(L.sl(), muv)) {
      if (!member(L, lam)) {
        rep.closed = false;
        rep.certified = true;
        rep.witness = std::make_pair(muv, lam);
        return rep;
      }
    }
  }
  rep.closed = true;
  rep.certified = false;  // generator/degree-bounded evidence only
  return rep;
}

namespace {

void validate_for_ideals(const SphericalMonoid& L, int bound) {
  if (!generates_lattice(L))
    throw std::invalid_argument("closed_prime_ideals: monoid does not generate the lattice");
  if (!is_saturated(L)) throw std::invalid_argument("closed_prime_ideals: monoid not saturated");
  auto rep = is_closed(L, ClosednessMode::generator_downsets, bound);
  if (!rep.closed) throw std::invalid_argument("closed_prime_ideals: monoid not closed");
}

}  // namespace

std::vector<MonoidIdealFace> closed_prime_ideals(const SphericalMonoid& L, int bound) {
  validate_for_ideals(L, bound);
  const Cone& c = L.cone();
  std::vector<Face> all = faces(c);
  std::vector<MonoidIdealFace> out;

  const std::vector<IntVec> deg_elements = elements_up_to_degree(L, bound);

  for (const Face& f : all) {
    if (f.ray_set.size() == c.rays.size()) continue;  // whole cone: zero ideal
    auto on_face = [&](const IntVec& x) {
      for (int j : f.facet_set)
        if (dot(c.facets[static_cast<size_t>(j)], x) != 0) return false;
      return true;
    };
    MonoidIdealFace mif;
    mif.face = f;
    for (const auto& h : L.hilbert().elements)
      (on_face(h) ? mif.face_hilbert : mif.ideal_hilbert).push_back(h);

    // the ideal L \ F is closed iff no down-set of an ideal element reaches
    // the face; checked on the Hilbert basis and all bounded-degree elements
    auto ok = [&](const IntVec& x) {
      if (on_face(x)) return true;
      for (const auto& lam : down_set(L.sl(), x))
        if (on_face(lam) && member(L, lam)) return false;
      return true;
    };
    bool closed = true;
    for (const auto& h : mif.ideal_hilbert)
      if (!ok(h)) {
        closed = false;
        break;
      }
    if (closed)
      for (const auto& x : deg_elements)
        if (!ok(x)) {
          closed = false;
          break;
        }
    if (closed) out.push_back(std::move(mif));
  }
  return out;
}

OrbitPoset orbit_poset(const SphericalMonoid& L, int bound) {
  OrbitPoset poset;
  poset.ideals = closed_prime_ideals(L, bound);
  const size_t n = poset.ideals.size() + 1;

  poset.nodes.push_back({std::nullopt, "open orbit"});
  for (size_t k = 0; k < poset.ideals.size(); ++k) {
    std::ostringstream label;
    label << "face{";
    const auto& rs = poset.ideals[k].face.ray_set;
    for (size_t t = 0; t < rs.size(); ++t) label << (t ? "," : "") << rs[t];
    label << "}";
    poset.nodes.push_back({static_cast<int>(k), label.str()});
  }

  // orbit(F') lies in the closure of orbit(F) iff F' subseteq F; the open
  // orbit corresponds to the whole cone.
  poset.leq.assign(n, std::vector<char>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      bool le;
      if (b == 0)
        le = true;
      else if (a == 0)
        le = a == b;
      else
        le = face_subset_leq(poset.ideals[a - 1].face, poset.ideals[b - 1].face);
      poset.leq[a][b] = le ? 1 : 0;
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (a == b || !poset.leq[a][b]) continue;
      bool cover = true;
      for (size_t t = 0; t < n && cover; ++t)
        if (t != a && t != b && poset.leq[a][t] && poset.leq[t][b]) cover = false;
      if (cover) poset.hasse.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  std::sort(poset.hasse.begin(), poset.hasse.end());
  return poset;
}

std::string orbit_poset_dot(const OrbitPoset& poset) {
  std::ostringstream os;
  os << "digraph orbits {\n  rankdir=BT;\n";
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << poset.nodes[i].label << "\"];\n";
  for (const auto& [a, b] : poset.hasse) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace symspace
