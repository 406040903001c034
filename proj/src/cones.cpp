#include "symspace/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symspace/hilbert_kernel.hpp"

namespace symspace {

namespace {

std::vector<IntVec> canonicalize_list(std::vector<IntVec> vecs) {
  for (auto& v : vecs) v = primitive(v);
  std::sort(vecs.begin(), vecs.end());
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
  std::erase_if(vecs, [](const IntVec& v) { return is_zero(v); });
  return vecs;
}

// Generators (lineality basis + extreme rays) of the dual cone
// { y : <y, v> >= 0 for all v in vecs }, by the double description method:
// start from the full space and insert one inequality at a time.
struct DualGenerators {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

DualGenerators dual_cone_generators(int n, const std::vector<IntVec>& vecs) {
  std::vector<IntVec> lineality;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    lineality.push_back(e);
  }
  std::vector<IntVec> rays;
  std::vector<IntVec> processed;

  auto saturation = [&](const IntVec& r) {
    std::set<int> z;
    for (size_t k = 0; k < processed.size(); ++k)
      if (dot(processed[k], r) == 0) z.insert(static_cast<int>(k));
    return z;
  };

  for (const IntVec& a : vecs) {
    // lineality first: if a is not orthogonal to it, one direction becomes a ray
    int hit = -1;
    for (size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) {
        hit = static_cast<int>(i);
        break;
      }
    if (hit >= 0) {
      IntVec l0 = lineality[static_cast<size_t>(hit)];
      Int p0 = dot(a, l0);
      if (p0 < 0) {
        l0 = vec_neg(l0);
        p0 = -p0;
      }
      std::vector<IntVec> new_lin;
      for (size_t i = 0; i < lineality.size(); ++i) {
        if (static_cast<int>(i) == hit) continue;
        const Int p = dot(a, lineality[i]);
        new_lin.push_back(primitive(vec_sub(vec_scale(p0, lineality[i]), vec_scale(p, l0))));
      }
      for (auto& r : rays) {
        const Int p = dot(a, r);
        r = primitive(vec_sub(vec_scale(p0, r), vec_scale(p, l0)));
      }
      rays.push_back(l0);
      rays = canonicalize_list(std::move(rays));
      lineality = std::move(new_lin);
      processed.push_back(a);
      continue;
    }

    std::vector<size_t> pos, zero, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      const int s = sgn(dot(a, rays[i]));
      if (s > 0)
        pos.push_back(i);
      else if (s == 0)
        zero.push_back(i);
      else
        neg.push_back(i);
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }

    std::vector<std::set<int>> sat(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) sat[i] = saturation(rays[i]);

    std::vector<IntVec> next;
    for (size_t i : pos) next.push_back(rays[i]);
    for (size_t i : zero) next.push_back(rays[i]);
    for (size_t p : pos)
      for (size_t q : neg) {
        // combinatorial adjacency: no third ray saturates everything p,q share
        std::set<int> common;
        std::set_intersection(sat[p].begin(), sat[p].end(), sat[q].begin(), sat[q].end(),
                              std::inserter(common, common.begin()));
        bool adjacent = true;
        for (size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (std::includes(sat[t].begin(), sat[t].end(), common.begin(), common.end()))
            adjacent = false;
        }
        if (!adjacent) continue;
        const Int cp = dot(a, rays[p]);
        const Int cq = dot(a, rays[q]);
        next.push_back(primitive(vec_sub(vec_scale(cp, rays[q]), vec_scale(cq, rays[p]))));
      }
    rays = canonicalize_list(std::move(next));
    processed.push_back(a);
  }

  DualGenerators out;
  out.lineality = canonicalize_list(std::move(lineality));
  out.rays = canonicalize_list(std::move(rays));
  return out;
}

std::vector<IntVec> with_plus_minus(const DualGenerators& g) {
  std::vector<IntVec> all = g.rays;
  for (const auto& l : g.lineality) {
    all.push_back(l);
    all.push_back(vec_neg(l));
  }
  return canonicalize_list(std::move(all));
}

}  // namespace

Cone cone_from_generators(int ambient_rank, const std::vector<IntVec>& generators) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_rank)
      throw std::invalid_argument("cone_from_generators: rank mismatch");
  std::vector<IntVec> gens = canonicalize_list(generators);
  Cone c;
  c.ambient_rank = ambient_rank;
  c.facets = with_plus_minus(dual_cone_generators(ambient_rank, gens));
  // second dualization canonicalizes the rays (drops non-extreme generators)
  c.rays = with_plus_minus(dual_cone_generators(ambient_rank, c.facets));
  c.dim = rational_rank(c.rays);
  return c;
}

Cone cone_from_generators(int ambient_rank, const std::vector<RatVec>& generators) {
  std::vector<IntVec> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(rat_primitive(g));
  return cone_from_generators(ambient_rank, gens);
}

Cone cone_from_inequalities(int ambient_rank, const std::vector<IntVec>& inner_normals) {
  for (const auto& f : inner_normals)
    if (static_cast<int>(f.size()) != ambient_rank)
      throw std::invalid_argument("cone_from_inequalities: rank mismatch");
  std::vector<IntVec> normals = canonicalize_list(inner_normals);
  Cone c;
  c.ambient_rank = ambient_rank;
  c.rays = with_plus_minus(dual_cone_generators(ambient_rank, normals));
  c.facets = with_plus_minus(dual_cone_generators(ambient_rank, c.rays));
  c.dim = rational_rank(c.rays);
  return c;
}

Cone cone_from_inequalities(int ambient_rank, const std::vector<RatVec>& inner_normals) {
  std::vector<IntVec> normals;
  normals.reserve(inner_normals.size());
  for (const auto& f : inner_normals) normals.push_back(rat_primitive(f));
  return cone_from_inequalities(ambient_rank, normals);
}

bool cone_contains(const Cone& c, const RatVec& v) {
  if (static_cast<int>(v.size()) != c.ambient_rank)
    throw std::invalid_argument("cone_contains: rank mismatch");
  for (const auto& f : c.facets)
    if (dot(f, v) < 0) return false;
  return true;
}

bool cone_contains(const Cone& c, const IntVec& v) {
  if (static_cast<int>(v.size()) != c.ambient_rank)
    throw std::invalid_argument("cone_contains: rank mismatch");
  for (const auto& f : c.facets)
    if (dot(f, v) < 0) return false;
  return true;
}

bool cone_saturates_all(const Cone& c, const IntVec& v) {
  for (const auto& f : c.facets)
    if (dot(f, v) != 0) return false;
  return true;
}

std::vector<IntVec> lineality_lattice(const Cone& c) {
  if (c.facets.empty()) return standard_lattice(c.ambient_rank).basis;
  IntMat m(static_cast<int>(c.facets.size()), c.ambient_rank);
  for (size_t i = 0; i < c.facets.size(); ++i)
    for (int j = 0; j < c.ambient_rank; ++j) m.at(static_cast<int>(i), j) = c.facets[i][j];
  return integer_kernel(m);
}

bool is_pointed(const Cone& c) { return lineality_lattice(c).empty(); }

std::vector<Face> faces(const Cone& c) {
  const size_t nrays = c.rays.size();
  const size_t nfacets = c.facets.size();
  // products[i][j] = <facet_i, ray_j> == 0
  std::vector<std::vector<char>> vanish(nfacets, std::vector<char>(nrays));
  for (size_t i = 0; i < nfacets; ++i)
    for (size_t j = 0; j < nrays; ++j) vanish[i][j] = dot(c.facets[i], c.rays[j]) == 0 ? 1 : 0;

  auto facet_set_of = [&](const std::vector<int>& ray_set) {
    std::vector<int> fs;
    for (size_t i = 0; i < nfacets; ++i) {
      bool all = true;
      for (int j : ray_set)
        if (!vanish[i][static_cast<size_t>(j)]) {
          all = false;
          break;
        }
      if (all) fs.push_back(static_cast<int>(i));
    }
    return fs;
  };

  std::vector<int> all_rays(nrays);
  for (size_t j = 0; j < nrays; ++j) all_rays[j] = static_cast<int>(j);

  std::map<std::vector<int>, std::vector<int>> found;  // ray_set -> facet_set
  found[all_rays] = facet_set_of(all_rays);
  std::vector<std::vector<int>> queue{all_rays};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (size_t i = 0; i < nfacets; ++i) {
      std::vector<int> sub;
      for (int j : cur)
        if (vanish[i][static_cast<size_t>(j)]) sub.push_back(j);
      if (sub.size() == cur.size()) continue;  // facet contains the whole face
      if (!found.count(sub)) {
        found[sub] = facet_set_of(sub);
        queue.push_back(sub);
      }
    }
  }

  std::vector<Face> result;
  for (auto& [ray_set, facet_set] : found) {
    Face f;
    f.ray_set = ray_set;
    f.facet_set = facet_set;
    std::vector<IntVec> span;
    for (int j : ray_set) span.push_back(c.rays[static_cast<size_t>(j)]);
    f.dim = rational_rank(span);
    result.push_back(std::move(f));
  }
  std::sort(result.begin(), result.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_set < b.ray_set;
  });
  return result;
}

bool face_subset_leq(const Face& a, const Face& b) {
  return std::includes(b.ray_set.begin(), b.ray_set.end(), a.ray_set.begin(), a.ray_set.end());
}

QuotientByLineality quotient_by_lineality(const Cone& c) {
  std::vector<IntVec> lin = lineality_lattice(c);
  QuotientByLineality out;
  out.lineality_basis = lin;
  if (lin.empty()) {
    out.pointed = c;
    out.projection = IntMat::identity(c.ambient_rank);
    return out;
  }
  // smith form of the facet matrix: kernel = last columns of V, and the first
  // `rank` rows of V^-1 project onto a complement of it
  IntMat m(static_cast<int>(c.facets.size()), c.ambient_rank);
  for (size_t i = 0; i < c.facets.size(); ++i)
    for (int j = 0; j < c.ambient_rank; ++j) m.at(static_cast<int>(i), j) = c.facets[i][j];
  NormalForm nf = smith_normal_form(m);
  const int r = nf.rank;
  IntMat proj(r, c.ambient_rank);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c.ambient_rank; ++j) proj.at(i, j) = nf.V_inv.at(i, j);
  std::vector<IntVec> proj_rays;
  for (const auto& ray : c.rays) proj_rays.push_back(proj * ray);
  out.pointed = cone_from_generators(r, proj_rays);
  out.projection = proj;
  return out;
}

IntVec positive_functional(const Cone& c) {
  IntVec phi(c.ambient_rank, Int(0));
  for (const auto& f : c.facets) phi = vec_add(phi, f);
  return phi;
}

// ---------------------------------------------------------------------------
// Hilbert bases
// ---------------------------------------------------------------------------

namespace {

struct LatticeView {
  int dim;                       // lattice rank
  std::vector<IntVec> facets;    // cone facets in lattice coordinates
  IntVec functional;             // strictly positive on the cone, lattice coords
  std::vector<IntVec> ray_reps;  // primitive lattice points on the rays, lattice coords
};

IntVec to_lattice_coords(const LatticeBasis& lat, const IntVec& v) {
  auto c = lattice_coordinates(lat, to_rat(v));
  if (!c) throw std::invalid_argument("vector outside the lattice span");
  return to_int(*c);
}

IntVec from_lattice_coords(const LatticeBasis& lat, const IntVec& y) {
  IntVec x(lat.ambient_rank, Int(0));
  for (int i = 0; i < lat.rank(); ++i) {
    if (y[i] == 0) continue;
    for (int j = 0; j < lat.ambient_rank; ++j) x[j] += y[i] * lat.basis[i][j];
  }
  return x;
}

LatticeView make_view(const Cone& c, const LatticeBasis& lat) {
  LatticeView view;
  view.dim = lat.rank();
  for (const auto& f : c.facets) {
    IntVec fc(view.dim);
    for (int k = 0; k < view.dim; ++k) fc[k] = dot(f, lat.basis[static_cast<size_t>(k)]);
    if (!is_zero(fc)) view.facets.push_back(primitive(fc));
  }
  std::sort(view.facets.begin(), view.facets.end());
  view.facets.erase(std::unique(view.facets.begin(), view.facets.end()), view.facets.end());
  view.functional.assign(view.dim, Int(0));
  for (const auto& f : view.facets) view.functional = vec_add(view.functional, f);
  for (const auto& ray : c.rays)
    view.ray_reps.push_back(to_lattice_coords(lat, primitive_on_ray(lat, to_rat(ray))));
  return view;
}

// box is exact: the region cone ∩ {functional <= cap} is the convex hull of 0
// and the points (cap / functional(r)) * r over the extreme rays r.
void fill_box(const LatticeView& view, const Int& cap, CappedConeQuery& q) {
  q.lo.assign(static_cast<size_t>(view.dim), 0);
  q.hi.assign(static_cast<size_t>(view.dim), 0);
  for (const auto& r : view.ray_reps) {
    const Int denom = dot(view.functional, r);
    if (denom <= 0) throw std::logic_error("hilbert_basis: functional not positive on a ray");
    for (int k = 0; k < view.dim; ++k) {
      Int lo_num, hi_num;
      // floor(cap * r_k / denom) and ceil(...)
      mpz_fdiv_q(lo_num.get_mpz_t(), Int(cap * r[k]).get_mpz_t(), denom.get_mpz_t());
      mpz_cdiv_q(hi_num.get_mpz_t(), Int(cap * r[k]).get_mpz_t(), denom.get_mpz_t());
      if (lo_num < q.lo[static_cast<size_t>(k)]) q.lo[static_cast<size_t>(k)] = lo_num.get_si();
      if (hi_num > q.hi[static_cast<size_t>(k)]) q.hi[static_cast<size_t>(k)] = hi_num.get_si();
    }
  }
}

HilbertBasis hilbert_basis_impl(const Cone& c, const LatticeBasis& lat, bool parallel) {
  if (c.ambient_rank != lat.ambient_rank)
    throw std::invalid_argument("hilbert_basis: rank mismatch");
  if (!is_pointed(c))
    throw std::invalid_argument("hilbert_basis: cone is not pointed (quotient lineality first)");
  HilbertBasis hb{lat, {}};
  if (c.rays.empty() || lat.rank() == 0) return hb;

  LatticeView view = make_view(c, lat);
  Int cap = 0;
  for (const auto& r : view.ray_reps) cap += dot(view.functional, r);

  CappedConeQuery q;
  q.dim = view.dim;
  q.facets = view.facets;
  q.functional = view.functional;
  q.cap = cap;
  fill_box(view, cap, q);

  std::vector<IntVec> pts =
      parallel ? enumerate_capped_parallel(q) : enumerate_capped_serial(q);
  std::vector<char> mask = parallel ? irreducible_mask_parallel(pts, view.facets)
                                    : irreducible_mask_serial(pts, view.facets);
  for (size_t i = 0; i < pts.size(); ++i)
    if (mask[i]) hb.elements.push_back(from_lattice_coords(lat, pts[i]));
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

}  // namespace

HilbertBasis hilbert_basis(const Cone& c, const LatticeBasis& lattice) {
  return hilbert_basis_impl(c, lattice, /*parallel=*/true);
}

HilbertBasis hilbert_basis_serial(const Cone& c, const LatticeBasis& lattice) {
  return hilbert_basis_impl(c, lattice, /*parallel=*/false);
}

std::vector<IntVec> lattice_points_capped(const Cone& c, const LatticeBasis& lattice,
                                          const IntVec& functional, const Int& cap) {
  if (c.ambient_rank != lattice.ambient_rank)
    throw std::invalid_argument("lattice_points_capped: rank mismatch");
  if (cap < 0) return {};
  if (lattice.rank() == 0) return {};
  LatticeView view = make_view(c, lattice);
  // translate the ambient functional to lattice coordinates
  IntVec fun(view.dim);
  for (int k = 0; k < view.dim; ++k) fun[k] = dot(functional, lattice.basis[static_cast<size_t>(k)]);
  CappedConeQuery q;
  q.dim = view.dim;
  q.facets = view.facets;
  q.functional = fun;
  q.cap = cap;
  // box from the capped region of the *given* functional
  LatticeView bview = view;
  bview.functional = fun;
  fill_box(bview, cap, q);
  std::vector<IntVec> pts = enumerate_capped_parallel(q);
  std::vector<IntVec> out;
  out.reserve(pts.size());
  for (const auto& y : pts) out.push_back(from_lattice_coords(lattice, y));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symspace
