#include "unicob/scalar.hpp"

#include <stdexcept>

namespace unicob {

namespace {

mpz_ptr num(mpq_class& q) { return mpq_numref(q.get_mpq_t()); }
mpz_srcptr num(const mpq_class& q) { return mpq_numref(q.get_mpq_t()); }

}  // namespace

ExactScalar::ExactScalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("ExactScalar: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

ExactScalar ExactScalar::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return ExactScalar(mpz_class(s, 10));
  return ExactScalar(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
}

bool ExactScalar::is_unit_integer() const {
  return is_integer() && mpz_cmpabs_ui(num(q_), 1) == 0;
}

mpz_class ExactScalar::to_integer() const {
  if (!is_integer()) throw std::domain_error("ExactScalar: " + to_string() + " is not an integer");
  return q_.get_num();
}

std::string ExactScalar::to_string() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_str(10);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  if (is_integer() && rhs.is_integer()) {
    mpz_add(num(q_), num(q_), num(rhs.q_));
  } else {
    q_ += rhs.q_;
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  if (is_integer() && rhs.is_integer()) {
    mpz_sub(num(q_), num(q_), num(rhs.q_));
  } else {
    q_ -= rhs.q_;
  }
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  if (is_integer() && rhs.is_integer()) {
    mpz_mul(num(q_), num(q_), num(rhs.q_));
  } else {
    q_ *= rhs.q_;
  }
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  q_ /= rhs.q_;
  return *this;
}

void ExactScalar::add_product(const ExactScalar& a, const ExactScalar& b) {
  if (is_integer() && a.is_integer() && b.is_integer()) {
    mpz_addmul(num(q_), num(a.q_), num(b.q_));
  } else {
    q_ += a.q_ * b.q_;
  }
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  mpz_neg(num(r.q_), num(r.q_));
  return r;
}

std::string to_string(const mpz_class& value) { return value.get_str(10); }

}  // namespace unicob
