#include "symspace/hilbert_kernel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symspace {

namespace {

struct PruneTables {
  // tables[f][p] = exact min/max of sum_{k >= p} f_k * y_k over the box
  std::vector<std::vector<Int>> rem_min, rem_max;

  PruneTables(const std::vector<IntVec>& forms, const std::vector<long>& lo,
              const std::vector<long>& hi) {
    const int dim = static_cast<int>(lo.size());
    rem_min.assign(forms.size(), std::vector<Int>(dim + 1, Int(0)));
    rem_max.assign(forms.size(), std::vector<Int>(dim + 1, Int(0)));
    for (size_t f = 0; f < forms.size(); ++f)
      for (int p = dim - 1; p >= 0; --p) {
        Int a = forms[f][p] * Int(lo[p]);
        Int b = forms[f][p] * Int(hi[p]);
        rem_min[f][p] = rem_min[f][p + 1] + std::min(a, b);
        rem_max[f][p] = rem_max[f][p + 1] + std::max(a, b);
      }
  }
};

void dfs(const CappedConeQuery& q, const PruneTables& facet_tab, const PruneTables& fun_tab,
         int depth, std::vector<long>& point, std::vector<Int>& facet_val, Int& fun_val,
         std::vector<IntVec>& out) {
  const int dim = q.dim;
  if (depth == dim) {
    bool zero = true;
    for (long v : point)
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero) return;
    IntVec y(dim);
    for (int k = 0; k < dim; ++k) y[k] = point[k];
    out.push_back(std::move(y));
    return;
  }
  for (long v = q.lo[depth]; v <= q.hi[depth]; ++v) {
    point[depth] = v;
    bool ok = true;
    for (size_t f = 0; f < q.facets.size(); ++f) {
      facet_val[f] += q.facets[f][depth] * Int(v);
      if (ok && facet_val[f] + facet_tab.rem_max[f][depth + 1] < 0) ok = false;
    }
    if (ok) {
      fun_val += q.functional[depth] * Int(v);
      if (fun_val + fun_tab.rem_min[0][depth + 1] <= q.cap)
        dfs(q, facet_tab, fun_tab, depth + 1, point, facet_val, fun_val, out);
      fun_val -= q.functional[depth] * Int(v);
    }
    for (size_t f = 0; f < q.facets.size(); ++f) facet_val[f] -= q.facets[f][depth] * Int(v);
  }
  point[depth] = 0;
}

}  // namespace

std::vector<IntVec> enumerate_capped_serial(const CappedConeQuery& q) {
  std::vector<IntVec> out;
  if (q.dim == 0) return out;
  PruneTables facet_tab(q.facets, q.lo, q.hi);
  PruneTables fun_tab({q.functional}, q.lo, q.hi);
  std::vector<long> point(q.dim, 0);
  std::vector<Int> facet_val(q.facets.size(), Int(0));
  Int fun_val = 0;
  dfs(q, facet_tab, fun_tab, 0, point, facet_val, fun_val, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> enumerate_capped_parallel(const CappedConeQuery& q) {
  std::vector<IntVec> out;
  if (q.dim == 0) return out;
  PruneTables facet_tab(q.facets, q.lo, q.hi);
  PruneTables fun_tab({q.functional}, q.lo, q.hi);
  const long lo0 = q.lo[0], hi0 = q.hi[0];
  const long width = hi0 - lo0 + 1;
  std::vector<std::vector<IntVec>> buckets(static_cast<size_t>(width));

#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < width; ++idx) {
    const long v = lo0 + idx;
    std::vector<long> point(q.dim, 0);
    point[0] = v;
    std::vector<Int> facet_val(q.facets.size(), Int(0));
    bool ok = true;
    for (size_t f = 0; f < q.facets.size(); ++f) {
      facet_val[f] = q.facets[f][0] * Int(v);
      if (facet_val[f] + facet_tab.rem_max[f][1] < 0) ok = false;
    }
    Int fun_val = q.functional[0] * Int(v);
    if (fun_val + fun_tab.rem_min[0][1] > q.cap) ok = false;
    if (ok) {
      if (q.dim == 1) {
        if (v != 0) {
          bool feas = fun_val <= q.cap;
          for (size_t f = 0; f < q.facets.size() && feas; ++f)
            if (facet_val[f] < 0) feas = false;
          if (feas) buckets[idx].push_back(IntVec{Int(v)});
        }
      } else {
        dfs(q, facet_tab, fun_tab, 1, point, facet_val, fun_val, buckets[idx]);
      }
    }
  }
  for (auto& b : buckets)
    for (auto& y : b) out.push_back(std::move(y));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// facet-value table: reducibility becomes componentwise domination
std::vector<std::vector<Int>> facet_values(const std::vector<IntVec>& points,
                                           const std::vector<IntVec>& facets) {
  std::vector<std::vector<Int>> table(points.size(), std::vector<Int>(facets.size()));
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t f = 0; f < facets.size(); ++f) table[i][f] = dot(facets[f], points[i]);
  return table;
}

bool dominated(const std::vector<Int>& big, const std::vector<Int>& small) {
  for (size_t f = 0; f < big.size(); ++f)
    if (big[f] < small[f]) return false;
  return true;
}

}  // namespace

std::vector<char> irreducible_mask_serial(const std::vector<IntVec>& points,
                                          const std::vector<IntVec>& facets) {
  auto table = facet_values(points, facets);
  std::vector<char> mask(points.size(), 1);
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      if (dominated(table[i], table[j])) {
        mask[i] = 0;
        break;
      }
    }
  return mask;
}

std::vector<char> irreducible_mask_parallel(const std::vector<IntVec>& points,
                                            const std::vector<IntVec>& facets) {
  auto table = facet_values(points, facets);
  std::vector<char> mask(points.size(), 1);
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dominated(table[i], table[j])) {
        mask[i] = 0;
        break;
      }
    }
  return mask;
}

}  // namespace symspace
