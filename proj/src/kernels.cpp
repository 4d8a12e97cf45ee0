#include "unicob/kernels.hpp"

#include <omp.h>

#include <exception>
#include <random>

namespace unicob {

namespace {

// Runs f(k) for k in [0, count). Exceptions are collected per index and the
// one with the lowest index is rethrown, so failures do not depend on
// scheduling either.
template <class F>
void for_each_index(std::size_t count, Exec exec, F&& f) {
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < n; ++k) {
    try {
      f(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::pair<int, int>> pairs(int max_n, int min_i, int min_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = min_n; n <= max_n; ++n) {
    for (int i = min_i; 2 * i <= n; ++i) out.emplace_back(i, n - i);
  }
  return out;
}

template <class Make>
std::vector<GridValue> grid(const std::vector<std::pair<int, int>>& ij, Exec exec, Make make) {
  std::vector<GridValue> out(ij.size());
  // Largest towers first keeps the dynamic schedule balanced.
  for_each_index(ij.size(), exec, [&](std::size_t k) {
    const std::size_t idx = ij.size() - 1 - k;
    const auto [i, j] = ij[idx];
    out[idx] = GridValue{i, j, make(i, j)};
  });
  return out;
}

bool composite_or_one(std::uint64_t p) { return !is_prime(p); }

}  // namespace

std::vector<GridValue> milnor_grid_x(int max_n, Exec exec) {
  return grid(pairs(max_n, 0, 1), exec,
              [](int i, int j) { return milnor_number(x_variety(i, j)).to_integer(); });
}

std::vector<GridValue> milnor_grid_y(int max_n, int min_i, Exec exec) {
  if (min_i < 1) throw DomainError("milnor_grid_y: need i >= 1");
  return grid(pairs(max_n, min_i, 2 * min_i), exec,
              [](int i, int j) { return milnor_number(y_variety(i, j)).to_integer(); });
}

std::vector<GridValue> blowup_grid(int max_n, Exec exec) {
  return grid(pairs(max_n, 2, 4), exec, [](int i, int j) {
    return blowup_milnor(x_variety(i, j), y_variety(i, j)).to_integer();
  });
}

std::vector<TableRow> a_table(int max_degree, int engine_cap, Exec exec) {
  const auto ij = pairs(max_degree, 0, 2);
  std::vector<TableRow> out(ij.size());
  for_each_index(ij.size(), exec, [&](std::size_t k) {
    const std::size_t idx = ij.size() - 1 - k;
    const auto [i, j] = ij[idx];
    TableRow row{i, j, a_closed_form(i, j), std::nullopt};
    if (i + j <= engine_cap) row.engine = a_engine(i, j);
    out[idx] = std::move(row);
  });
  return out;
}

std::vector<GeneratorReport> verify_generators(int min_degree, int max_degree, bool use_engine, int engine_cap,
                                               Exec exec) {
  if (min_degree > max_degree) return {};
  const auto count = static_cast<std::size_t>(max_degree - min_degree + 1);
  std::vector<GeneratorReport> out(count);
  for_each_index(count, exec, [&](std::size_t k) {
    const std::size_t idx = count - 1 - k;
    out[idx] = verify_generator_degree(min_degree + static_cast<int>(idx), use_engine, engine_cap);
  });
  return out;
}

std::vector<CongruenceJob> congruence_jobs(const std::vector<std::uint64_t>& primes, int max_s) {
  std::vector<CongruenceJob> jobs;
  for (std::uint64_t p : primes) {
    if (composite_or_one(p)) throw DomainError("congruence_jobs: " + std::to_string(p) + " is not prime");
    for (std::uint64_t r = 0; r < p; ++r) jobs.push_back({LemmaId::Eq12, LemmaParams{p, r, {}, {}}});
    for (std::uint64_t a = 1; a < p; ++a) jobs.push_back({LemmaId::Tech, LemmaParams{p, {}, a, {}}});
    jobs.push_back({LemmaId::Tech4, LemmaParams{p, {}, {}, {}}});
    for (std::uint64_t a = 1; a < p; ++a) jobs.push_back({LemmaId::Tech4, LemmaParams{p, {}, a, {}}});
    jobs.push_back({LemmaId::ResSq, LemmaParams{p, {}, {}, {}}});
    std::uint64_t ps = p;
    for (int s = 2; s <= max_s; ++s) {
      ps *= p;
      if (ps > 2200) break;
      for (LemmaId id : {LemmaId::Lm32, LemmaId::Lm31, LemmaId::PMain}) {
        jobs.push_back({id, LemmaParams{p, {}, {}, s}});
      }
    }
  }
  return jobs;
}

std::vector<LemmaRecord> run_congruences(const std::vector<CongruenceJob>& jobs, Exec exec) {
  std::vector<LemmaRecord> out(jobs.size());
  for_each_index(jobs.size(), exec, [&](std::size_t k) { out[k] = verify_lemma(jobs[k].id, jobs[k].params); });
  return out;
}

namespace {

struct Pair {
  std::uint64_t n;
  std::uint64_t m;
};

ResidueSweep sweep(const std::vector<Pair>& work, const std::vector<std::uint64_t>& primes, int max_q, Exec exec) {
  for (std::uint64_t p : primes) {
    if (composite_or_one(p)) throw DomainError("residue sweep: " + std::to_string(p) + " is not prime");
  }
  std::vector<ResidueSweep> partial(work.size());
  for_each_index(work.size(), exec, [&](std::size_t k) {
    const auto [n, m] = work[k];
    const mpz_class exact = binom_exact(n, m);
    ResidueSweep& r = partial[k];
    for (std::uint64_t p : primes) {
      if (!(lucas_residue(n, m, p) == ResidueClass(exact, p, 1))) ++r.lucas_mismatches;
      for (int q = 1; q <= max_q; ++q) {
        ++r.checked;
        if (!(granville_residue(n, m, p, q) == ResidueClass(exact, p, q))) ++r.granville_mismatches;
      }
    }
  });
  ResidueSweep total;
  for (const auto& r : partial) {
    total.checked += r.checked;
    total.granville_mismatches += r.granville_mismatches;
    total.lucas_mismatches += r.lucas_mismatches;
  }
  return total;
}

}  // namespace

ResidueSweep residue_sweep_exhaustive(std::uint64_t max_n, const std::vector<std::uint64_t>& primes, int max_q,
                                      Exec exec) {
  std::vector<Pair> work;
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    for (std::uint64_t m = 0; m <= n; ++m) work.push_back({n, m});
  }
  return sweep(work, primes, max_q, exec);
}

ResidueSweep residue_sweep_random(std::uint64_t max_n, std::uint64_t samples, std::uint64_t seed,
                                  const std::vector<std::uint64_t>& primes, int max_q, Exec exec) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_n(0, max_n);
  std::vector<Pair> work;
  work.reserve(samples);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const std::uint64_t n = pick_n(rng);
    std::uniform_int_distribution<std::uint64_t> pick_m(0, n);
    work.push_back({n, pick_m(rng)});
  }
  return sweep(work, primes, max_q, exec);
}

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace unicob
