// Compares the three routes to the maximal-consistent-subbase family:
// DPLL-driven lattice descent, the serial assignment scan, and the
// OpenMP-parallel assignment scan. Also times the raw satisfiability
// kernels on the same inputs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crbr/belief_base.hpp"
#include "crbr/sat.hpp"
#include "crbr/subbase.hpp"

using namespace crbr;

namespace {

Formula random_literal(std::mt19937& rng, int var_count) {
  const int v = static_cast<int>(rng() % var_count);
  Formula atom = Formula::atom("x" + std::to_string(v));
  return rng() % 2 ? atom : Formula::negation(atom);
}

Formula random_formula(std::mt19937& rng, int var_count) {
  switch (rng() % 4) {
    case 0:
      return Formula::disjunction(
          random_literal(rng, var_count),
          Formula::disjunction(random_literal(rng, var_count),
                               random_literal(rng, var_count)));
    case 1:
      return Formula::implication(random_literal(rng, var_count),
                                  random_literal(rng, var_count));
    case 2:
      return Formula::conjunction(random_literal(rng, var_count),
                                  random_literal(rng, var_count));
    default:
      return random_literal(rng, var_count);
  }
}

BeliefBase random_base(std::mt19937& rng, int size, int var_count,
                       const Limits& limits) {
  while (true) {
    std::vector<Formula> formulas;
    std::vector<std::string> seen;
    while (static_cast<int>(formulas.size()) < size) {
      Formula f = random_formula(rng, var_count);
      const std::string key = f.render();
      bool duplicate = false;
      for (const std::string& s : seen) duplicate |= s == key;
      if (duplicate) continue;
      seen.push_back(key);
      formulas.push_back(f);
    }
    // Interesting benches need an inconsistent base; retry until we get one.
    if (!is_satisfiable(formulas, limits)) {
      return BeliefBase(formulas, limits);
    }
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int base_size = argc > 1 ? std::atoi(argv[1]) : 14;
  const int var_count = argc > 2 ? std::atoi(argv[2]) : 12;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  Limits limits;
  limits.max_base = base_size;
  limits.max_vars = var_count < 24 ? 24 : var_count;

  std::mt19937 rng(20240817);
  const BeliefBase base = random_base(rng, base_size, var_count, limits);
  const Formula mu = random_formula(rng, var_count);

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("base: %d formulas over <= %d variables, %d repeat(s)\n\n",
              base_size, var_count, repeats);

  SubbaseFamily descent, serial, parallel;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    descent = enumerate_inclusion_maximal(base, mu, limits);
    const double t_descent = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    serial = scan_inclusion_maximal(base, mu, ScanMode::kSerial, limits);
    const double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    parallel = scan_inclusion_maximal(base, mu, ScanMode::kParallel, limits);
    const double t_parallel = ms_since(t0);

    std::printf(
        "family:  descent %8.2f ms   scan-serial %8.2f ms   scan-parallel "
        "%8.2f ms\n",
        t_descent, t_serial, t_parallel);
  }

  if (!(descent == serial && serial == parallel)) {
    std::printf("MISMATCH between the three family routes!\n");
    return 1;
  }
  std::printf("family size: %zu (all three routes agree)\n\n", descent.size());

  std::vector<Formula> query = base.formulas();
  query.push_back(mu);
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    const bool via_dpll = is_satisfiable(query, limits);
    const double t_dpll = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const bool via_serial =
        truth_table_satisfiable(query, ScanMode::kSerial, limits);
    const double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const bool via_parallel =
        truth_table_satisfiable(query, ScanMode::kParallel, limits);
    const double t_parallel = ms_since(t0);

    if (via_dpll != via_serial || via_serial != via_parallel) {
      std::printf("MISMATCH between the satisfiability kernels!\n");
      return 1;
    }
    std::printf(
        "sat:     dpll    %8.2f ms   scan-serial %8.2f ms   scan-parallel "
        "%8.2f ms\n",
        t_dpll, t_serial, t_parallel);
  }
  return 0;
}
