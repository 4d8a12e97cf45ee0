#ifndef UNICOB_SCALAR_HPP
#define UNICOB_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace unicob {

// Exact rational number, always in lowest terms with a positive denominator.
// Integer-valued scalars take a fast path that never touches the denominator.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactScalar(const mpz_class& value) : q_(value) {}
  ExactScalar(const mpz_class& num, const mpz_class& den);

  static ExactScalar parse(std::string_view text);

  bool is_zero() const { return mpz_sgn(mpq_numref(q_.get_mpq_t())) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0; }
  bool is_unit_integer() const;  // +1 or -1
  int sign() const { return mpz_sgn(mpq_numref(q_.get_mpq_t())); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  // Throws std::domain_error if the value has a nonunit denominator.
  mpz_class to_integer() const;
  const mpq_class& rational() const { return q_; }

  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  // *this += a * b
  void add_product(const ExactScalar& a, const ExactScalar& b);

  ExactScalar operator-() const;

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::string to_string(const mpz_class& value);

}  // namespace unicob

#endif  // UNICOB_SCALAR_HPP
