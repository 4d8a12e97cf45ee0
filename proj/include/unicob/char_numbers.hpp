#ifndef UNICOB_CHAR_NUMBERS_HPP
#define UNICOB_CHAR_NUMBERS_HPP

#include "unicob/variety.hpp"

#include <vector>

namespace unicob {

// Weakly decreasing list of positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

namespace todd_series {

// B_0 .. B_max with B_1 = -1/2.
std::vector<ExactScalar> bernoulli(int max);
// Coefficients of x^k, k = 0..max, in x / (1 - e^{-x}).
std::vector<ExactScalar> q_coefficients(int max);
// Coefficients of x^k, k = 0..max, in log(x / (1 - e^{-x})).
std::vector<ExactScalar> log_coefficients(int max);

}  // namespace todd_series

// Total Chern class of E (x) L from c(E), rank E and c_1(L):
// c_k = sum_j binom(m - j, k - j) c_j(E) c_1(L)^{k-j}.
RingClass twisted_chern(const RingClass& bundle_chern, int rank, const RingClass& twist);

RingClass total_chern(const Variety& v);

// k-th power sum of the Chern roots, summed factor by factor.
RingClass power_sum(const Variety& v, int k);

// p_1 .. p_max from a total Chern class by Newton's identities.
std::vector<RingClass> newton_power_sums(const RingClass& total_chern, int max);

// power_sum computed from total_chern(v) through Newton's identities.
RingClass power_sum_newton(const Variety& v, int k);

ExactScalar milnor_number(const Variety& v);
ExactScalar chern_number(const Variety& v, const Partition& omega);
ExactScalar todd_genus(const Variety& v);

// s_n(X) - s_n(Y): the Milnor number of the blow-up of X along a centre whose
// correction term P(nu + C) is Y.
ExactScalar blowup_milnor(const Variety& x, const Variety& y);

// Closed form for the Milnor number of bf_bundle(base, line_c1s): zero in
// even total dimension, otherwise
// 2 <(1 + x_{k+1})^{n+k-1} prod_{a<=k} (1 + x_a)^{-1}, [base]>.
ExactScalar closed_form_bf_milnor(const Variety& base, const std::vector<RingClass>& line_c1s);

}  // namespace unicob

#endif  // UNICOB_CHAR_NUMBERS_HPP
