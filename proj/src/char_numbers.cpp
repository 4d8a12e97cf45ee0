#include "unicob/char_numbers.hpp"

#include <numeric>

namespace unicob {

namespace {

ExactScalar binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return ExactScalar(0L);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactScalar(r);
}

// powers[e] = c^e for e = 0..max, stopping early once the power vanishes.
std::vector<RingClass> powers_of(const RingClass& c, int max) {
  std::vector<RingClass> out{one(c.ring())};
  for (int e = 1; e <= max; ++e) {
    if (out.back().is_zero()) {
      out.push_back(out.back());
    } else {
      out.push_back(out.back() * c);
    }
  }
  return out;
}

RingClass block_power_sum(const TwistedBlock& b, int k) {
  const std::vector<RingClass> pe = newton_power_sums(b.bundle_chern, k);
  const std::vector<RingClass> lp = powers_of(b.twist, k);
  RingClass out = lp[static_cast<std::size_t>(k)] * ExactScalar(static_cast<long>(b.rank));
  for (int r = 1; r <= k; ++r) {
    const RingClass& p = pe[static_cast<std::size_t>(r - 1)];
    if (p.is_zero()) continue;
    out += (p * lp[static_cast<std::size_t>(k - r)]) * binomial(k, r);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace todd_series {

std::vector<ExactScalar> bernoulli(int max) {
  std::vector<ExactScalar> b;
  for (int m = 0; m <= max; ++m) {
    if (m == 0) {
      b.emplace_back(1L);
      continue;
    }
    ExactScalar s(0L);
    for (int k = 0; k < m; ++k) s.add_product(binomial(m + 1, k), b[static_cast<std::size_t>(k)]);
    b.push_back(-s / ExactScalar(static_cast<long>(m + 1)));
  }
  return b;
}

std::vector<ExactScalar> q_coefficients(int max) {
  const auto b = bernoulli(max);
  std::vector<ExactScalar> q;
  mpz_class fact = 1;
  for (int k = 0; k <= max; ++k) {
    if (k > 0) fact *= k;
    ExactScalar c = b[static_cast<std::size_t>(k)] / ExactScalar(fact);
    q.push_back(k % 2 ? -c : c);
  }
  return q;
}

std::vector<ExactScalar> log_coefficients(int max) {
  // d/dx log(x / (1 - e^{-x})) = -sum_{k>=1} B_k x^{k-1} / k!
  const auto b = bernoulli(max);
  std::vector<ExactScalar> l{ExactScalar(0L)};
  mpz_class fact = 1;
  for (int k = 1; k <= max; ++k) {
    fact *= k;
    l.push_back(-b[static_cast<std::size_t>(k)] / ExactScalar(mpz_class(fact * k)));
  }
  return l;
}

}  // namespace todd_series

RingClass twisted_chern(const RingClass& bundle_chern, int rank, const RingClass& twist) {
  if (bundle_chern.ring() != twist.ring()) throw OwnershipError("twisted_chern: classes from different rings");
  const std::vector<RingClass> lp = powers_of(twist, rank);
  std::vector<RingClass> c;
  for (int j = 0; j <= rank; ++j) c.push_back(bundle_chern.component(j));
  RingClass out = zero(twist.ring());
  for (int k = 0; k <= rank; ++k) {
    for (int j = 0; j <= k; ++j) {
      const RingClass& cj = c[static_cast<std::size_t>(j)];
      if (cj.is_zero()) continue;
      out += (cj * lp[static_cast<std::size_t>(k - j)]) * binomial(rank - j, k - j);
    }
  }
  return out;
}

RingClass total_chern(const Variety& v) {
  RingClass out = one(v.ring);
  for (const auto& f : v.tangent) {
    if (const auto* l = std::get_if<LineClass>(&f)) {
      out = out * (one(v.ring) + l->c1);
    } else if (const auto* n = std::get_if<NegLineClass>(&f)) {
      out = out * (one(v.ring) - n->c1);
    } else {
      const auto& b = std::get<TwistedBlock>(f);
      out = out * twisted_chern(b.bundle_chern, b.rank, b.twist);
    }
  }
  return out;
}

RingClass power_sum(const Variety& v, int k) {
  if (k < 0) throw DomainError("power_sum: negative index");
  if (k == 0) return constant(v.ring, ExactScalar(static_cast<long>(v.stable_rank())));
  RingClass out = zero(v.ring);
  if (k > v.ring->top_weight()) return out;
  for (const auto& f : v.tangent) {
    if (const auto* l = std::get_if<LineClass>(&f)) {
      out += pow(l->c1, static_cast<unsigned>(k));
    } else if (const auto* n = std::get_if<NegLineClass>(&f)) {
      out += pow(-n->c1, static_cast<unsigned>(k));
    } else {
      out += block_power_sum(std::get<TwistedBlock>(f), k);
    }
  }
  return out;
}

std::vector<RingClass> newton_power_sums(const RingClass& total_chern, int max) {
  std::vector<RingClass> e;
  for (int i = 0; i <= max; ++i) e.push_back(total_chern.component(i));
  std::vector<RingClass> p;
  for (int k = 1; k <= max; ++k) {
    RingClass pk = e[static_cast<std::size_t>(k)] * ExactScalar(static_cast<long>(k % 2 ? k : -k));
    for (int i = 1; i < k; ++i) {
      const RingClass& ei = e[static_cast<std::size_t>(i)];
      const RingClass& prev = p[static_cast<std::size_t>(k - i - 1)];
      if (ei.is_zero() || prev.is_zero()) continue;
      if (i % 2) {
        pk += ei * prev;
      } else {
        pk -= ei * prev;
      }
    }
    p.push_back(std::move(pk));
  }
  return p;
}

RingClass power_sum_newton(const Variety& v, int k) {
  if (k < 0) throw DomainError("power_sum: negative index");
  if (k == 0) return constant(v.ring, ExactScalar(static_cast<long>(v.stable_rank())));
  return newton_power_sums(total_chern(v), k).back();
}

ExactScalar milnor_number(const Variety& v) { return integrate(power_sum(v, v.dim)); }

ExactScalar chern_number(const Variety& v, const Partition& omega) {
  if (omega.size() != v.dim) {
    throw DomainError("chern_number: partition of " + std::to_string(omega.size()) + " for a variety of dimension " +
                      std::to_string(v.dim));
  }
  const RingClass c = total_chern(v);
  RingClass prod = one(v.ring);
  for (int part : omega.parts()) prod = prod * c.component(part);
  return integrate(prod);
}

ExactScalar todd_genus(const Variety& v) {
  const RingPtr rational = v.ring->with_mode(CoefficientMode::Rational);
  const Variety w = v.lifted(rational);
  const auto l = todd_series::log_coefficients(v.dim);
  RingClass log_td = zero(rational);
  for (int k = 1; k <= v.dim; ++k) {
    if (l[static_cast<std::size_t>(k)].is_zero()) continue;
    log_td += power_sum(w, k) * l[static_cast<std::size_t>(k)];
  }
  return integrate(exp_nilpotent(log_td));
}

ExactScalar blowup_milnor(const Variety& x, const Variety& y) {
  if (x.dim != y.dim) {
    throw DomainError("blowup_milnor: dimensions differ (" + std::to_string(x.dim) + " vs " +
                      std::to_string(y.dim) + ")");
  }
  return milnor_number(x) - milnor_number(y);
}

ExactScalar closed_form_bf_milnor(const Variety& base, const std::vector<RingClass>& line_c1s) {
  if (line_c1s.size() < 2) throw DomainError("closed_form_bf_milnor: needs at least two line bundles");
  const int k = static_cast<int>(line_c1s.size()) - 1;
  const int n = base.dim;
  if ((n + k) % 2 == 0) return ExactScalar(0L);
  const RingPtr& r = base.ring;
  RingClass acc = pow(one(r) + line_c1s.back(), static_cast<unsigned>(n + k - 1));
  for (int a = 0; a < k; ++a) acc = acc * invert_unit(one(r) + line_c1s[static_cast<std::size_t>(a)]);
  return integrate(acc) * ExactScalar(2L);
}

}  // namespace unicob
