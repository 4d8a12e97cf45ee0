#ifndef UNICOB_VARIETY_HPP
#define UNICOB_VARIETY_HPP

#include "unicob/errors.hpp"
#include "unicob/ring.hpp"

#include <string>
#include <variant>
#include <vector>

namespace unicob {

// One Chern root equal to c1.
struct LineClass {
  RingClass c1;
};

// One Chern root equal to -c1. Only the blow-up correction term uses it.
struct NegLineClass {
  RingClass c1;
};

// The roots of a rank-m bundle E, each shifted by twist: the bundle E (x) L
// with c_1(L) = twist.
struct TwistedBlock {
  RingClass bundle_chern;
  int rank;
  RingClass twist;
};

using TangentFactor = std::variant<LineClass, NegLineClass, TwistedBlock>;

// A stably complex manifold described by its cohomology ring and a list of
// stable tangent summands.
struct Variety {
  std::string name;
  RingPtr ring;
  std::vector<TangentFactor> tangent;
  int dim = 0;

  // Number of Chern roots in the stable tangent bundle.
  int stable_rank() const;
  // Same variety with every tangent class moved into an extension ring.
  Variety lifted(const RingPtr& target) const;
};

Variety point();
Variety projective_space(int n);
Variety bounded_flag(int n);

// The iterated CP^1-bundle BF(xi_{k+1}, ..., xi_1) over `base`, with
// line_c1s = (c1(xi_1), ..., c1(xi_{k+1})) in attachment order: stage i
// projectivizes zeta_i + xi_{i+1}, where zeta_1 = xi_1 and zeta_{i+1} is the
// tautological bundle of stage i.
Variety bf_bundle(const Variety& base, const std::vector<RingClass>& line_c1s);

struct BfTower {
  Variety variety;
  // fiber[i] = y_{i+1} = c1(conj zeta_{i+1}); fiber[0] = -c1(xi_1).
  std::vector<RingClass> fiber;
};

// bf_bundle plus the fiber classes. New generators are named
// stem + first_index, stem + (first_index + 1), ...
BfTower bf_tower(const Variety& base, const std::vector<RingClass>& line_c1s, const std::string& stem = "y",
                 int first_index = 2);

// P(E) -> base with the tangent block E (x) conj(tautological).
Variety projectivize(const Variety& base, const RingClass& bundle_chern, int rank,
                     const std::string& generator = "w");
// Same for E a sum of line bundles; tangent gets one line class per summand.
Variety projectivize_lines(const Variety& base, const std::vector<RingClass>& line_c1s,
                           const std::string& generator = "w");

Variety product(const Variety& left, const Variety& right);

// X_{i,j}: BF bundle over BF_i with lines (0^{j-i}, conj beta*_1..i, conj beta_i).
Variety x_variety(int i, int j);
// Z_{i,j}: the codimension-2 centre in X_{i,j}.
Variety z_variety(int i, int j);
// Y_{i,j} = P(conj zeta_j conj beta_{i-1} + conj beta_{i-1} + C) over Z_{i,j}
// with the blow-up correction's nonstandard stably complex structure.
Variety y_variety(int i, int j);
// Milnor hypersurface as P(conj eta*_i + C^{j-i}) -> CP^i.
Variety h_variety(int i, int j);
// Buchstaber-Ray variety P(conj beta*_1 + ... + conj beta*_i + C^{j-i}) -> BF_i.
Variety br_variety(int i, int j);
// L(i, j) = P(eta_i + C^j) -> CP^i.
Variety l_variety(int i, int j);

// Milnor number of the hypersurface Poincare dual to a line bundle with
// first Chern class c1: <(p_{n-1}(TX) - c1^{n-1}) c1, [X]>. For n = 1 the
// power sum p_0 is the stable rank.
ExactScalar dual_hypersurface_milnor(const Variety& x, const RingClass& c1);

}  // namespace unicob

#endif  // UNICOB_VARIETY_HPP
