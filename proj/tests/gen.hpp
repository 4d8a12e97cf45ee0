#ifndef UNICOB_TESTS_GEN_HPP
#define UNICOB_TESTS_GEN_HPP

// Small hand-rolled generators for the property tests. Every suite seeds its
// own engine so failures reproduce from the case index alone.

#include "unicob/ring.hpp"

#include <random>
#include <string>
#include <vector>

namespace unicob::testgen {

inline constexpr int kCases = 500;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  // Random class of the given ring with small integer coefficients. `density`
  // is the chance (percent) of each basis coefficient being nonzero.
  RingClass element(const RingPtr& ring, int lo = -3, int hi = 3, int density = 60) {
    std::vector<ExactScalar> c(ring->basis_size());
    for (auto& v : c) {
      if (uniform(0, 99) < density) v = ExactScalar(static_cast<long>(uniform(lo, hi)));
    }
    return RingClass(ring, std::move(c));
  }

  // Random element with zero constant term.
  RingClass nilpotent(const RingPtr& ring) {
    RingClass a = element(ring);
    return a - constant(ring, a.constant_term());
  }

  // Random homogeneous degree-1 class: an integer combination of generators.
  RingClass linear(const RingPtr& ring, int lo = -2, int hi = 2) {
    RingClass a = zero(ring);
    for (std::size_t k = 0; k < ring->stage_count(); ++k)
      a += generator(ring, k) * ExactScalar(static_cast<long>(uniform(lo, hi)));
    return a;
  }

  // Tower of 1..max_stages projectivizations of sums of random line bundles,
  // each of rank 1..max_rank, basis size capped at max_basis.
  RingPtr tower(int max_stages = 3, int max_rank = 3, std::size_t max_basis = 48) {
    RingPtr ring = TowerRing::point();
    const int stages = uniform(1, max_stages);
    for (int s = 0; s < stages; ++s) {
      int rank = uniform(1, max_rank);
      while (rank > 1 && ring->basis_size() * rank > max_basis) --rank;
      RingClass chern = one(ring);
      for (int r = 0; r < rank; ++r) chern = chern * (one(ring) + linear(ring));
      ring = extend_by_projectivization(ring, chern, rank, "g" + std::to_string(s)).ring;
    }
    return ring;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace unicob::testgen

#endif  // UNICOB_TESTS_GEN_HPP
