#include "unicob/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace unicob {

namespace {

void require_same_ring(const RingClass& a, const RingClass& b, const char* op) {
  if (a.ring() != b.ring())
    throw OwnershipError(std::string(op) + ": operands belong to different rings");
}

std::string unique_name(std::string name, const std::set<std::string>& taken) {
  while (taken.count(name) != 0) name += '\'';
  return name;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingClass

RingClass::RingClass(RingPtr ring, std::vector<ExactScalar> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw RingError("RingClass: null ring");
  if (coeffs_.size() != ring_->basis_size())
    throw RingError("RingClass: coefficient vector does not match the ring basis");
}

ExactScalar RingClass::coefficient(const Exponents& exps) const {
  return coeffs_[ring_->index_of(exps)];
}

std::map<Exponents, ExactScalar> RingClass::terms() const {
  std::map<Exponents, ExactScalar> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace(ring_->exponents(i), coeffs_[i]);
  return out;
}

std::size_t RingClass::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const ExactScalar& c) { return !c.is_zero(); }));
}

bool RingClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactScalar& c) { return c.is_zero(); });
}

bool RingClass::is_homogeneous(int weight) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero() && ring_->weight(i) != weight) return false;
  return true;
}

RingClass RingClass::component(int weight) const {
  std::vector<ExactScalar> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (ring_->weight(i) == weight) out[i] = coeffs_[i];
  return RingClass(ring_, std::move(out));
}

std::string RingClass::to_string() const {
  const auto names = ring_->generator_names();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) order.push_back(i);
  if (order.empty()) return "0";
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ring_->weight(a) < ring_->weight(b); });

  std::ostringstream os;
  bool first = true;
  for (const std::size_t idx : order) {
    ExactScalar c = coeffs_[idx];
    const bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    const Exponents exps = ring_->exponents(idx);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (exps[k] > 1) mono += '^' + std::to_string(exps[k]);
    }
    if (mono.empty()) {
      os << c.to_string();
    } else if (c == ExactScalar(1)) {
      os << mono;
    } else {
      os << c.to_string() << '*' << mono;
    }
  }
  return os.str();
}

RingClass& RingClass::operator+=(const RingClass& rhs) {
  require_same_ring(*this, rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RingClass& RingClass::operator-=(const RingClass& rhs) {
  require_same_ring(*this, rhs, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RingClass& RingClass::operator*=(const ExactScalar& s) {
  if (ring_->mode() == CoefficientMode::Integer && !s.is_integer())
    throw UnitError("scalar_mul: non-integral scalar in an integer-mode ring");
  for (auto& c : coeffs_)
    if (!c.is_zero()) c *= s;
  return *this;
}

RingClass RingClass::operator-() const {
  RingClass r = *this;
  for (auto& c : r.coeffs_)
    if (!c.is_zero()) c = -c;
  return r;
}

RingClass operator*(const RingClass& a, const RingClass& b) {
  require_same_ring(a, b, "mul");
  const TowerRing& ring = *a.ring();
  // Iterate over the sparser operand.
  const bool swap = a.term_count() > b.term_count();
  const RingClass& outer = swap ? b : a;
  const RingClass& inner = swap ? a : b;

  std::vector<ExactScalar> out(ring.basis_size());
  for (std::size_t u = 0; u < ring.basis_size(); ++u) {
    const ExactScalar& cu = outer.coefficient(u);
    if (cu.is_zero()) continue;
    if (ring.weight(u) == 0) {
      for (std::size_t j = 0; j < out.size(); ++j)
        if (!inner.coefficient(j).is_zero()) out[j].add_product(cu, inner.coefficient(j));
      continue;
    }
    const auto shifted = ring.apply_monomial(u, inner.coefficients());
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!shifted[j].is_zero()) out[j].add_product(cu, shifted[j]);
  }
  return RingClass(a.ring(), std::move(out));
}

bool operator==(const RingClass& a, const RingClass& b) {
  return a.ring() == b.ring() && a.coefficients() == b.coefficients();
}

RingClass pow(const RingClass& base, unsigned exponent) {
  RingClass result = one(base.ring());
  for (unsigned i = 0; i < exponent; ++i) {
    result = result * base;
    if (result.is_zero()) break;
  }
  return result;
}

RingClass invert_unit(const RingClass& a) {
  const RingPtr& ring = a.ring();
  const ExactScalar c0 = a.constant_term();
  if (c0.is_zero()) throw UnitError("invert_unit: constant term is zero");
  if (ring->mode() == CoefficientMode::Integer && !c0.is_unit_integer())
    throw UnitError("invert_unit: constant term " + c0.to_string() + " is not a unit over the integers");

  const ExactScalar inv0 = ExactScalar(1) / c0;
  RingClass minus_nil = one(ring) - a * inv0;  // -(a/c0 - 1)
  RingClass term = one(ring);
  RingClass sum = one(ring);
  for (int k = 1; k <= ring->top_weight(); ++k) {
    term = term * minus_nil;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * inv0;
}

RingClass exp_nilpotent(const RingClass& a) {
  const RingPtr& ring = a.ring();
  if (ring->mode() != CoefficientMode::Rational)
    throw UnitError("exp_nilpotent: requires a rational-mode ring");
  if (!a.constant_term().is_zero()) throw RingError("exp_nilpotent: constant term must be zero");
  RingClass term = one(ring);
  RingClass sum = one(ring);
  for (int k = 1; k <= ring->top_weight(); ++k) {
    term = (term * a) * (ExactScalar(1) / ExactScalar(k));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

ExactScalar integrate(const RingClass& a) { return a.coefficient(a.ring()->top_index()); }

// ---------------------------------------------------------------------------
// TowerRing

RingPtr TowerRing::point(CoefficientMode mode) {
  auto ring = std::shared_ptr<TowerRing>(new TowerRing());
  ring->mode_ = mode;
  ring->finish_layout();
  return ring;
}

void TowerRing::finish_layout() {
  strides_.assign(stages_.size() + 1, 1);
  top_weight_ = 0;
  for (std::size_t k = 0; k < stages_.size(); ++k) {
    strides_[k + 1] = strides_[k] * static_cast<std::size_t>(stages_[k].rank);
    top_weight_ += stages_[k].rank - 1;
  }
  basis_size_ = strides_.back();
  if (basis_size_ > (std::size_t{1} << 31)) throw RingError("TowerRing: basis too large");
  weights_.assign(basis_size_, 0);
  for (std::size_t idx = 0; idx < basis_size_; ++idx) {
    int w = 0;
    for (std::size_t k = 0; k < stages_.size(); ++k)
      w += static_cast<int>((idx / strides_[k]) % static_cast<std::size_t>(stages_[k].rank));
    weights_[idx] = static_cast<std::uint8_t>(w);
  }
}

Exponents TowerRing::exponents(std::size_t index) const {
  Exponents exps(stages_.size());
  for (std::size_t k = 0; k < stages_.size(); ++k)
    exps[k] = static_cast<int>((index / strides_[k]) % static_cast<std::size_t>(stages_[k].rank));
  return exps;
}

std::size_t TowerRing::index_of(const Exponents& exps) const {
  if (exps.size() != stages_.size()) throw RingError("index_of: exponent vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < stages_.size(); ++k) {
    if (exps[k] < 0 || exps[k] >= stages_[k].rank)
      throw RingError("index_of: exponent of " + stages_[k].generator + " is not reduced");
    idx += static_cast<std::size_t>(exps[k]) * strides_[k];
  }
  return idx;
}

std::optional<std::size_t> TowerRing::find_generator(const std::string& name) const {
  for (std::size_t k = 0; k < stages_.size(); ++k)
    if (stages_[k].generator == name) return k;
  return std::nullopt;
}

std::vector<std::string> TowerRing::generator_names() const {
  std::vector<std::string> names;
  names.reserve(stages_.size());
  for (const auto& s : stages_) names.push_back(s.generator);
  return names;
}

bool TowerRing::is_prefix_of(const TowerRing& other) const {
  if (stages_.size() > other.stages_.size()) return false;
  for (std::size_t k = 0; k < stages_.size(); ++k)
    if (!(stages_[k] == other.stages_[k])) return false;
  return true;
}

RingPtr TowerRing::with_mode(CoefficientMode mode) const {
  if (mode == CoefficientMode::Integer) {
    for (const auto& st : stages_)
      for (const auto& comp : st.chern)
        for (const auto& c : comp)
          if (!c.is_integer()) throw UnitError("with_mode: relation has non-integral coefficients");
  }
  auto ring = std::shared_ptr<TowerRing>(new TowerRing(*this));
  ring->mode_ = mode;
  return ring;
}

void TowerRing::apply_generator(std::size_t stage, const std::vector<ExactScalar>& in,
                                std::vector<ExactScalar>& out, int cap) const {
  const auto& cols = *ops_[stage];
  const std::size_t block = strides_[stage + 1];
  for (std::size_t idx = 0; idx < basis_size_; ++idx) {
    if (in[idx].is_zero() || weights_[idx] > cap) continue;
    const std::size_t lo = idx % block;
    const std::size_t hi = idx - lo;
    for (const Term& t : cols[lo]) out[t.index + hi].add_product(in[idx], t.coeff);
  }
}

std::vector<ExactScalar> TowerRing::apply_monomial(std::size_t index,
                                                   const std::vector<ExactScalar>& in) const {
  const Exponents exps = exponents(index);
  int remaining = weights_[index];
  std::vector<ExactScalar> cur = in;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    for (int e = 0; e < exps[k]; ++e) {
      std::vector<ExactScalar> next(basis_size_);
      apply_generator(k, cur, next, top_weight_ - remaining);
      --remaining;
      cur = std::move(next);
    }
  }
  return cur;
}

TowerRing::SparseVec TowerRing::apply_generator_sparse(std::size_t stage, const SparseVec& in) const {
  const auto& cols = *ops_[stage];
  const std::size_t block = strides_[stage + 1];
  SparseVec out;
  for (const auto& [idx, c] : in) {
    if (weights_[idx] >= top_weight_) continue;
    const std::size_t lo = idx % block;
    const std::size_t hi = idx - lo;
    for (const Term& t : cols[lo]) out[static_cast<std::uint32_t>(t.index + hi)].add_product(c, t.coeff);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TowerRing::SparseVec TowerRing::monomial_times_sparse(std::size_t index, SparseVec v) const {
  const Exponents exps = exponents(index);
  for (std::size_t k = 0; k < exps.size(); ++k)
    for (int e = 0; e < exps[k] && !v.empty(); ++e) v = apply_generator_sparse(k, v);
  return v;
}

// ---------------------------------------------------------------------------
// Construction

Extension extend_by_projectivization(const RingPtr& ring, const RingClass& bundle_chern, int rank,
                                     std::string generator_name) {
  if (!ring) throw RingError("extend_by_projectivization: null ring");
  if (bundle_chern.ring() != ring)
    throw OwnershipError("extend_by_projectivization: bundle Chern class belongs to another ring");
  if (rank < 1) throw MalformedBundle("extend_by_projectivization: rank must be positive");
  if (bundle_chern.constant_term() != ExactScalar(1))
    throw MalformedBundle("extend_by_projectivization: total Chern class must have constant term 1, got " +
                          bundle_chern.constant_term().to_string());
  const std::size_t old_size = ring->basis_size();
  for (std::size_t i = 0; i < old_size; ++i)
    if (!bundle_chern.coefficient(i).is_zero() && ring->weight(i) > rank)
      throw MalformedBundle("extend_by_projectivization: Chern class has components above rank " +
                            std::to_string(rank));

  std::set<std::string> taken;
  for (const auto& s : ring->stages()) taken.insert(s.generator);

  Stage stage;
  stage.generator = unique_name(std::move(generator_name), taken);
  stage.rank = rank;
  stage.chern.assign(static_cast<std::size_t>(rank) + 1, std::vector<ExactScalar>(old_size));
  for (std::size_t i = 0; i < old_size; ++i) {
    const int w = ring->weight(i);
    if (w <= rank) stage.chern[static_cast<std::size_t>(w)][i] = bundle_chern.coefficient(i);
  }

  auto next = std::shared_ptr<TowerRing>(new TowerRing(*ring));
  next->stages_.push_back(stage);
  next->finish_layout();

  const int top = next->top_weight_;
  const std::size_t new_size = next->basis_size_;
  auto cols = std::make_shared<std::vector<TowerRing::Column>>(new_size);

  // Sparse forms of c_1 .. c_m over the old basis.
  std::vector<std::vector<std::pair<std::size_t, ExactScalar>>> c_sparse(static_cast<std::size_t>(rank) + 1);
  for (int r = 1; r <= rank; ++r)
    for (std::size_t i = 0; i < old_size; ++i)
      if (!stage.chern[static_cast<std::size_t>(r)][i].is_zero())
        c_sparse[static_cast<std::size_t>(r)].emplace_back(i, stage.chern[static_cast<std::size_t>(r)][i]);

  for (std::size_t u = 0; u < old_size; ++u) {
    for (int e = 0; e < rank; ++e) {
      const std::size_t idx = u + static_cast<std::size_t>(e) * old_size;
      if (ring->weight(u) + e >= top) continue;
      if (e < rank - 1) {
        (*cols)[idx].push_back({static_cast<std::uint32_t>(idx + old_size), ExactScalar(1)});
        continue;
      }
      // y^m * u = -sum_r c_r * u * y^{m-r}
      TowerRing::SparseVec acc;
      for (int r = 1; r <= rank; ++r) {
        const std::size_t shift = static_cast<std::size_t>(rank - r) * old_size;
        for (const auto& [mono, coeff] : c_sparse[static_cast<std::size_t>(r)]) {
          TowerRing::SparseVec unit{{static_cast<std::uint32_t>(u), ExactScalar(1)}};
          for (const auto& [t, x] : ring->monomial_times_sparse(mono, std::move(unit)))
            acc[static_cast<std::uint32_t>(t + shift)].add_product(-coeff, x);
        }
      }
      for (auto& [t, x] : acc)
        if (!x.is_zero()) (*cols)[idx].push_back({t, std::move(x)});
    }
  }
  next->ops_.push_back(std::move(cols));

  RingPtr result = next;
  return Extension{result, generator(result, next->stages_.size() - 1)};
}

ProductRing product_ring(const RingPtr& left, const RingPtr& right) {
  if (!left || !right) throw RingError("product_ring: null ring");
  if (left->mode() != right->mode()) throw RingError("product_ring: coefficient modes differ");

  auto prod = std::shared_ptr<TowerRing>(new TowerRing(*left));
  const std::size_t b1 = left->basis_size();

  std::set<std::string> taken;
  for (const auto& s : left->stages()) taken.insert(s.generator);

  for (std::size_t k = 0; k < right->stages().size(); ++k) {
    const Stage& src = right->stages()[k];
    Stage st;
    st.generator = unique_name(src.generator, taken);
    taken.insert(st.generator);
    st.rank = src.rank;
    for (const auto& comp : src.chern) {
      std::vector<ExactScalar> re(b1 * comp.size());
      for (std::size_t v = 0; v < comp.size(); ++v) re[b1 * v] = comp[v];
      st.chern.push_back(std::move(re));
    }
    prod->stages_.push_back(std::move(st));

    const auto& src_cols = *right->ops_[k];
    auto cols = std::make_shared<std::vector<TowerRing::Column>>(b1 * src_cols.size());
    for (std::size_t u2 = 0; u2 < src_cols.size(); ++u2) {
      for (std::size_t u1 = 0; u1 < b1; ++u1) {
        auto& col = (*cols)[u1 + b1 * u2];
        col.reserve(src_cols[u2].size());
        for (const auto& t : src_cols[u2])
          col.push_back({static_cast<std::uint32_t>(u1 + b1 * t.index), t.coeff});
      }
    }
    prod->ops_.push_back(std::move(cols));
  }
  prod->finish_layout();
  return ProductRing{prod, left, right};
}

RingClass ProductRing::from_left(const RingClass& a) const {
  if (a.ring() != left) throw OwnershipError("from_left: class does not belong to the left factor");
  std::vector<ExactScalar> out(ring->basis_size());
  std::copy(a.coefficients().begin(), a.coefficients().end(), out.begin());
  return RingClass(ring, std::move(out));
}

RingClass ProductRing::from_right(const RingClass& a) const {
  if (a.ring() != right) throw OwnershipError("from_right: class does not belong to the right factor");
  const std::size_t b1 = left->basis_size();
  std::vector<ExactScalar> out(ring->basis_size());
  for (std::size_t v = 0; v < a.coefficients().size(); ++v) out[b1 * v] = a.coefficient(v);
  return RingClass(ring, std::move(out));
}

RingClass transport(const RingClass& a, const RingPtr& target) {
  if (a.ring() == target) return a;
  if (!a.ring()->is_prefix_of(*target))
    throw OwnershipError("transport: source ring is not a sub-tower of the target");
  std::vector<ExactScalar> out(target->basis_size());
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (target->mode() == CoefficientMode::Integer && !a.coefficient(i).is_integer())
      throw UnitError("transport: non-integral coefficient into an integer-mode ring");
    out[i] = a.coefficient(i);
  }
  return RingClass(target, std::move(out));
}

RingClass zero(const RingPtr& ring) { return RingClass(ring, std::vector<ExactScalar>(ring->basis_size())); }

RingClass one(const RingPtr& ring) { return constant(ring, ExactScalar(1)); }

RingClass constant(const RingPtr& ring, const ExactScalar& value) {
  if (ring->mode() == CoefficientMode::Integer && !value.is_integer())
    throw UnitError("constant: non-integral value in an integer-mode ring");
  std::vector<ExactScalar> c(ring->basis_size());
  c[0] = value;
  return RingClass(ring, std::move(c));
}

RingClass monomial(const RingPtr& ring, const Exponents& exps) {
  std::vector<ExactScalar> c(ring->basis_size());
  c[ring->index_of(exps)] = ExactScalar(1);
  return RingClass(ring, std::move(c));
}

RingClass generator(const RingPtr& ring, std::size_t stage) {
  if (stage >= ring->stage_count()) throw RingError("generator: stage index out of range");
  const Stage& st = ring->stages()[stage];
  if (st.rank >= 2) {
    Exponents exps(ring->stage_count(), 0);
    exps[stage] = 1;
    return monomial(ring, exps);
  }
  std::vector<ExactScalar> c(ring->basis_size());
  for (std::size_t i = 0; i < st.chern[1].size(); ++i) c[i] = -st.chern[1][i];
  return RingClass(ring, std::move(c));
}

RingClass generator(const RingPtr& ring, const std::string& name) {
  const auto k = ring->find_generator(name);
  if (!k) throw RingError("generator: no generator named '" + name + "'");
  return generator(ring, *k);
}

}  // namespace unicob
