// Benchmark: serial reference vs OpenMP Hilbert-basis kernels on random
// pointed cones and on the catalog's enveloping cones.

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symspace/catalog.hpp"
#include "symspace/embeddings.hpp"

using namespace symspace;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

struct Case {
  std::string name;
  Cone cone;
  LatticeBasis lattice;
};

void run(const Case& c, int reps) {
  double t_serial = 0, t_parallel = 0;
  size_t count = 0;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    HilbertBasis s = hilbert_basis_serial(c.cone, c.lattice);
    auto t1 = Clock::now();
    HilbertBasis p = hilbert_basis(c.cone, c.lattice);
    auto t2 = Clock::now();
    if (s.elements != p.elements) {
      std::cerr << c.name << ": serial and parallel kernels disagree\n";
      std::exit(1);
    }
    t_serial += seconds(t0, t1);
    t_parallel += seconds(t1, t2);
    count = s.elements.size();
  }
  std::printf("%-28s dim=%d rays=%zu basis=%zu   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              c.name.c_str(), c.cone.ambient_rank, c.cone.rays.size(), count,
              1e3 * t_serial / reps, 1e3 * t_parallel / reps,
              t_parallel > 0 ? t_serial / t_parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif

  std::vector<Case> cases;

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int n : {3, 4}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<IntVec> gens;
      for (int g = 0; g < n + 1; ++g) {
        IntVec v(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = entry(rng);
        gens.push_back(v);
      }
      Cone c = cone_from_generators(n, gens);
      if (!is_pointed(c) || c.dim < n) continue;
      cases.push_back({"random-" + std::to_string(n) + "d", std::move(c), standard_lattice(n)});
      break;
    }
  }

  for (const std::string name : {"AI.sl.3", "AI.sl.4", "AI.ad.3", "group.A2"}) {
    auto sl = std::make_shared<SphericalLattice>(spherical_lattice(catalog::get(name)));
    EnvelopingMonoid em = enveloping_monoid(sl);
    cases.push_back({name + " enveloping", em.monoid.cone(), em.doubled->lattice});
  }

  for (const auto& c : cases) run(c, reps);
  return 0;
}
