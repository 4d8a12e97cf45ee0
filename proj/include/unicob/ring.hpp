#ifndef UNICOB_RING_HPP
#define UNICOB_RING_HPP

// Graded quotient rings presented as towers of projectivizations.
//
// A tower over a point is built one stage at a time. Stage k adjoins a fiber
// generator y_k of weight 1 together with the monic relation
//
//     y_k^m + c_1 y_k^{m-1} + ... + c_m = 0,
//
// where m is the rank of the projectivized bundle E and c_r = c_r(E) lives in
// the ring of the earlier stages. y_k is the first Chern class of the
// conjugate tautological line bundle, so for E a sum of line bundles with
// first Chern classes u_i the relation reads prod_i (y_k + u_i) = 0.
//
// Elements are kept in the Leray-Hirsch normal form: the exponent of y_k is
// at most m_k - 1. These monomials form a basis and every one of them has
// weight <= top_weight, so the basis is indexed by a mixed-radix integer.
// Multiplication by each generator is precomputed once per stage as a sparse
// linear operator on that basis.

#include "unicob/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unicob {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands belong to different rings.
class OwnershipError : public RingError {
 public:
  using RingError::RingError;
};

// A bundle's total Chern class does not have constant term 1 or has
// components above its rank.
class MalformedBundle : public RingError {
 public:
  using RingError::RingError;
};

// The constant term is not invertible in the ring's coefficient mode.
class UnitError : public RingError {
 public:
  using RingError::RingError;
};

enum class CoefficientMode { Integer, Rational };

class TowerRing;
using RingPtr = std::shared_ptr<const TowerRing>;

// Exponent of each fiber generator, indexed by stage.
using Exponents = std::vector<int>;

class RingClass {
 public:
  RingClass(RingPtr ring, std::vector<ExactScalar> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<ExactScalar>& coefficients() const { return coeffs_; }
  const ExactScalar& coefficient(std::size_t index) const { return coeffs_[index]; }
  ExactScalar coefficient(const Exponents& exps) const;
  const ExactScalar& constant_term() const { return coeffs_[0]; }

  std::map<Exponents, ExactScalar> terms() const;
  std::size_t term_count() const;
  bool is_zero() const;
  bool is_homogeneous(int weight) const;

  // Weight-w homogeneous component.
  RingClass component(int weight) const;

  std::string to_string() const;

  RingClass& operator+=(const RingClass& rhs);
  RingClass& operator-=(const RingClass& rhs);
  RingClass& operator*=(const ExactScalar& s);
  RingClass operator-() const;

  friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
  friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }
  friend RingClass operator*(const RingClass& a, const RingClass& b);
  friend RingClass operator*(RingClass a, const ExactScalar& s) { return a *= s; }
  friend RingClass operator*(const ExactScalar& s, RingClass a) { return a *= s; }

  // Same ring object and same coefficients.
  friend bool operator==(const RingClass& a, const RingClass& b);

 private:
  RingPtr ring_;
  std::vector<ExactScalar> coeffs_;
};

RingClass pow(const RingClass& base, unsigned exponent);

// Inverse of a class whose constant term is a unit (+-1 in integer mode,
// nonzero in rational mode), via the finite geometric series of its
// nilpotent part.
RingClass invert_unit(const RingClass& a);

// exp(a) for a class with zero constant term. Rational mode only.
RingClass exp_nilpotent(const RingClass& a);

// Pairing with the fundamental class: the coefficient of the top monomial
// prod_k y_k^{m_k - 1}. Classes without a top-weight component give 0.
ExactScalar integrate(const RingClass& a);

struct Stage {
  std::string generator;
  int rank = 1;
  // chern[r] is c_r of the projectivized bundle, r = 0..rank, stored densely
  // over the basis of the stages before this one.
  std::vector<std::vector<ExactScalar>> chern;

  friend bool operator==(const Stage&, const Stage&) = default;
};

struct Extension;
struct ProductRing;

class TowerRing {
 public:
  struct Term {
    std::uint32_t index;
    ExactScalar coeff;
  };
  using Column = std::vector<Term>;

  static RingPtr point(CoefficientMode mode = CoefficientMode::Integer);

  CoefficientMode mode() const { return mode_; }
  const std::vector<Stage>& stages() const { return stages_; }
  std::size_t stage_count() const { return stages_.size(); }
  std::size_t basis_size() const { return basis_size_; }
  int top_weight() const { return top_weight_; }
  std::size_t top_index() const { return basis_size_ - 1; }

  int weight(std::size_t index) const { return weights_[index]; }
  Exponents exponents(std::size_t index) const;
  std::size_t index_of(const Exponents& exps) const;

  std::optional<std::size_t> find_generator(const std::string& name) const;
  std::vector<std::string> generator_names() const;

  // Stage structure of this ring is a leading part of `other` (same names,
  // ranks and relations), so classes transfer by index.
  bool is_prefix_of(const TowerRing& other) const;

  // Same stages, different coefficient mode. The result is a distinct ring.
  RingPtr with_mode(CoefficientMode mode) const;

  // out += (y_stage * in), reading only entries of `in` with weight <= cap.
  void apply_generator(std::size_t stage, const std::vector<ExactScalar>& in,
                       std::vector<ExactScalar>& out, int cap) const;

  // (monomial at `index`) * in
  std::vector<ExactScalar> apply_monomial(std::size_t index, const std::vector<ExactScalar>& in) const;

 private:
  friend Extension extend_by_projectivization(const RingPtr&, const RingClass&, int, std::string);
  friend ProductRing product_ring(const RingPtr&, const RingPtr&);

  using SparseVec = std::map<std::uint32_t, ExactScalar>;

  TowerRing() = default;
  void finish_layout();
  SparseVec apply_generator_sparse(std::size_t stage, const SparseVec& in) const;
  SparseVec monomial_times_sparse(std::size_t index, SparseVec v) const;

  CoefficientMode mode_ = CoefficientMode::Integer;
  std::vector<Stage> stages_;
  // ops_[k][lo] is y_k times the basis monomial with prefix index lo, over the
  // basis of stages 0..k. Stages never touch exponents of later stages.
  std::vector<std::shared_ptr<const std::vector<Column>>> ops_;
  std::vector<std::size_t> strides_;  // strides_[k] = prod_{k' < k} rank_{k'}
  std::vector<std::uint8_t> weights_;
  std::size_t basis_size_ = 1;
  int top_weight_ = 0;
};

struct Extension {
  RingPtr ring;
  RingClass fiber;  // the new generator, already in normal form
};

// Adjoin a fiber generator for the projectivization of a rank-`rank` bundle
// with total Chern class `bundle_chern` (a class of `ring`).
Extension extend_by_projectivization(const RingPtr& ring, const RingClass& bundle_chern, int rank,
                                     std::string generator = "y");

struct ProductRing {
  RingPtr ring;
  RingPtr left;
  RingPtr right;

  RingClass from_left(const RingClass& a) const;
  RingClass from_right(const RingClass& a) const;
};

// Tensor product of two towers: stages concatenated, clashing generator
// names of the right factor get primes appended.
ProductRing product_ring(const RingPtr& left, const RingPtr& right);

// Moves a class into a ring whose stage structure extends the class's ring
// (a later stage of the same tower, or the same tower in another mode).
RingClass transport(const RingClass& a, const RingPtr& target);

RingClass zero(const RingPtr& ring);
RingClass one(const RingPtr& ring);
RingClass constant(const RingPtr& ring, const ExactScalar& value);
RingClass monomial(const RingPtr& ring, const Exponents& exps);
// Normal form of the stage's fiber generator. For a rank-1 stage this is -c_1.
RingClass generator(const RingPtr& ring, std::size_t stage);
RingClass generator(const RingPtr& ring, const std::string& name);

}  // namespace unicob

#endif  // UNICOB_RING_HPP
