#include "gen.hpp"
#include "unicob/kernels.hpp"
#include "unicob/report.hpp"

#include <gtest/gtest.h>

using namespace unicob;

namespace {

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Runs `f` serially and then in parallel under 1..4 threads; all results
// must be identical.
template <class F>
void expect_schedule_independent(F f) {
  const auto ref = f(Exec::Serial);
  for (int t = 1; t <= 4; ++t) {
    set_thread_count(t);
    EXPECT_TRUE(f(Exec::Parallel) == ref) << t << " threads";
  }
  set_thread_count(0);
}

}  // namespace

TEST(Kernels, MilnorGridX) {
  const auto grid = milnor_grid_x(8, Exec::Serial);
  int prev_n = 0;
  for (const auto& v : grid) {
    const int n = v.i + v.j;
    EXPECT_GE(n, prev_n);
    prev_n = n;
    EXPECT_EQ(v.value, n % 2 ? mpz_class(2 * binom(n, v.i)) : mpz_class(0)) << v.i << "," << v.j;
  }
  EXPECT_EQ(grid.front().i, 0);
  EXPECT_EQ(grid.front().j, 1);
  expect_schedule_independent([](Exec e) { return milnor_grid_x(8, e); });
}

TEST(Kernels, YAndBlowupGrids) {
  for (const auto& v : milnor_grid_y(8, 2, Exec::Serial)) {
    mpz_class sum = 0;
    for (int k = v.j; k <= v.i + v.j; ++k) sum += binom(k, v.j);
    EXPECT_EQ(v.value, sum) << v.i << "," << v.j;
  }
  for (const auto& v : blowup_grid(8, Exec::Serial)) EXPECT_EQ(v.value, a_closed_form(v.i, v.j));
  expect_schedule_independent([](Exec e) { return milnor_grid_y(7, 1, e); });
  expect_schedule_independent([](Exec e) { return blowup_grid(8, e); });
}

TEST(Kernels, ATable) {
  const auto rows = a_table(10, 6, Exec::Serial);
  for (const auto& r : rows) {
    EXPECT_EQ(r.closed, a_closed_form(r.i, r.j));
    EXPECT_EQ(r.engine.has_value(), r.i + r.j <= 6);
    if (r.engine && r.i >= 2) {
      EXPECT_EQ(*r.engine, r.closed);
    }
  }
  expect_schedule_independent([](Exec e) { return a_table(9, 7, e); });
}

TEST(Kernels, GeneratorSweep) {
  const auto reps = verify_generators(2, 30, false, 0, Exec::Serial);
  ASSERT_EQ(reps.size(), 29u);
  for (const auto& r : reps) EXPECT_TRUE(r.pass) << r.degree;
  auto as_json = [](Exec e) {
    Json out = Json::array();
    for (const auto& r : verify_generators(2, 20, true, 7, e)) out.push_back(to_json(r));
    return out.dump();
  };
  expect_schedule_independent(as_json);
}

TEST(Kernels, Congruences) {
  const auto jobs = congruence_jobs({3, 5}, 3);
  std::size_t pmain = 0;
  for (const auto& j : jobs) pmain += j.id == LemmaId::PMain;
  EXPECT_EQ(pmain, 4u);
  for (const auto& r : run_congruences(jobs, Exec::Serial)) EXPECT_TRUE(r.pass()) << lemma_name(r.id);
  auto as_json = [&jobs](Exec e) {
    Json out = Json::array();
    for (const auto& r : run_congruences(jobs, e)) out.push_back(to_json(r));
    return out.dump();
  };
  expect_schedule_independent(as_json);
  // p^s <= 2200 bounds the grid.
  for (const auto& j : congruence_jobs({13}, 4)) {
    if (j.params.s) {
      EXPECT_LE(*j.params.s, 3);
    }
  }
}

TEST(Kernels, ResidueSweeps) {
  const auto ex = residue_sweep_exhaustive(80, {2, 3, 5}, 3, Exec::Serial);
  EXPECT_EQ(ex.checked, 81u * 82u / 2u * 3u * 3u);
  EXPECT_EQ(ex.granville_mismatches, 0u);
  EXPECT_EQ(ex.lucas_mismatches, 0u);
  auto fields = [](const ResidueSweep& s) { return std::make_tuple(s.checked, s.granville_mismatches, s.lucas_mismatches); };
  expect_schedule_independent([&](Exec e) { return fields(residue_sweep_exhaustive(60, {2, 7}, 2, e)); });
  expect_schedule_independent([&](Exec e) { return fields(residue_sweep_random(2000, 300, 5, {3, 5}, 3, e)); });
  const auto rnd = residue_sweep_random(2000, 500, 9, {2, 3, 5, 7}, 3, Exec::Parallel);
  EXPECT_EQ(rnd.granville_mismatches, 0u);
}

// Serial and parallel grids coincide for random bounds and thread counts.
TEST(KernelProperties, SerialEqualsParallel) {
  testgen::Gen g(1111);
  for (int c = 0; c < testgen::kCases; ++c) {
    set_thread_count(g.uniform(1, 4));
    switch (c % 3) {
      case 0: {
        const int n = g.uniform(1, 6);
        ASSERT_EQ(milnor_grid_x(n, Exec::Serial), milnor_grid_x(n, Exec::Parallel)) << c;
        break;
      }
      case 1: {
        const int n = g.uniform(2, 40);
        ASSERT_EQ(a_table(n, 0, Exec::Serial), a_table(n, 0, Exec::Parallel)) << c;
        break;
      }
      default: {
        const std::vector<std::uint64_t> primes{static_cast<std::uint64_t>(std::vector<int>{2, 3, 5, 7}[g.uniform(0, 3)])};
        const auto n = static_cast<std::uint64_t>(g.uniform(0, 30));
        const auto a = residue_sweep_exhaustive(n, primes, 2, Exec::Serial);
        const auto b = residue_sweep_exhaustive(n, primes, 2, Exec::Parallel);
        ASSERT_EQ(a.checked, b.checked) << c;
        ASSERT_EQ(a.granville_mismatches, b.granville_mismatches) << c;
        break;
      }
    }
  }
  set_thread_count(0);
}
