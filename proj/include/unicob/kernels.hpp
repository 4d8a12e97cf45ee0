#ifndef UNICOB_KERNELS_HPP
#define UNICOB_KERNELS_HPP

// Grid computations over (i, j), degrees and primes. Every kernel has a
// serial reference path and an OpenMP path; both return results in the same
// order, independent of scheduling.

#include "unicob/cobordism.hpp"
#include "unicob/residues.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace unicob {

enum class Exec { Serial, Parallel };

struct GridValue {
  int i = 0;
  int j = 0;
  mpz_class value;
  friend bool operator==(const GridValue&, const GridValue&) = default;
};

// s_{i+j}(X_{i,j}) for 0 <= i <= j, 1 <= j, i + j <= max_n, ordered by (n, i).
std::vector<GridValue> milnor_grid_x(int max_n, Exec exec);
// s_{i+j}(Y_{i,j}) for min_i <= i <= j, i + j <= max_n, ordered by (n, i).
std::vector<GridValue> milnor_grid_y(int max_n, int min_i, Exec exec);
// s(X_{i,j}) - s(Y_{i,j}) for 2 <= i <= j, i + j <= max_n.
std::vector<GridValue> blowup_grid(int max_n, Exec exec);

struct TableRow {
  int i = 0;
  int j = 0;
  mpz_class closed;
  std::optional<mpz_class> engine;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// a_{i,j} for 2 <= i + j <= max_degree; engine values where i + j <= engine_cap.
std::vector<TableRow> a_table(int max_degree, int engine_cap, Exec exec);

std::vector<GeneratorReport> verify_generators(int min_degree, int max_degree, bool use_engine, int engine_cap,
                                               Exec exec);

struct CongruenceJob {
  LemmaId id;
  LemmaParams params;
};

// The standard parameter grid: eq12 over all r, tech and tech4 pairings over
// all a, ressq, and lm32 / lm31 / pmain for 2 <= s <= max_s with p^s <= 2200.
std::vector<CongruenceJob> congruence_jobs(const std::vector<std::uint64_t>& primes, int max_s);
std::vector<LemmaRecord> run_congruences(const std::vector<CongruenceJob>& jobs, Exec exec);

struct ResidueSweep {
  std::uint64_t checked = 0;
  std::uint64_t granville_mismatches = 0;
  std::uint64_t lucas_mismatches = 0;
};

// Compares granville_residue and lucas_residue with exact binomials for all
// m <= n <= max_n, every prime and every q in 1..max_q.
ResidueSweep residue_sweep_exhaustive(std::uint64_t max_n, const std::vector<std::uint64_t>& primes, int max_q,
                                      Exec exec);
// Same over `samples` pseudo-random (n, m) with n <= max_n drawn from seed.
ResidueSweep residue_sweep_random(std::uint64_t max_n, std::uint64_t samples, std::uint64_t seed,
                                  const std::vector<std::uint64_t>& primes, int max_q, Exec exec);

void set_thread_count(int threads);
int thread_count();

}  // namespace unicob

#endif  // UNICOB_KERNELS_HPP
