#ifndef UNICOB_RESIDUES_HPP
#define UNICOB_RESIDUES_HPP

// Binomial coefficients modulo prime powers.

#include "unicob/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unicob {

// Trial division; adequate for the small moduli used here.
bool is_prime(std::uint64_t n);

struct BaseDigits {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;  // little-endian

  static BaseDigits of(std::uint64_t n, std::uint64_t base);
  std::uint64_t value() const;
  std::uint64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

// Residue modulo p^q, p prime. Values are kept reduced into [0, p^q).
class ResidueClass {
 public:
  ResidueClass(std::int64_t value, std::uint64_t p, int q);
  ResidueClass(const mpz_class& value, std::uint64_t p, int q);

  std::uint64_t value() const { return value_; }
  std::uint64_t prime() const { return p_; }
  int exponent() const { return q_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  // Representative in (-modulus/2, modulus/2].
  std::int64_t symmetric() const;

  ResidueClass& operator+=(const ResidueClass& rhs);
  ResidueClass& operator-=(const ResidueClass& rhs);
  ResidueClass& operator*=(const ResidueClass& rhs);
  ResidueClass operator-() const;
  // Throws DomainError when the value is divisible by p.
  ResidueClass inverse() const;

  friend ResidueClass operator+(ResidueClass a, const ResidueClass& b) { return a += b; }
  friend ResidueClass operator-(ResidueClass a, const ResidueClass& b) { return a -= b; }
  friend ResidueClass operator*(ResidueClass a, const ResidueClass& b) { return a *= b; }
  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  void check_same_modulus(const ResidueClass& rhs) const;

  std::uint64_t value_ = 0;
  std::uint64_t p_ = 2;
  int q_ = 1;
  std::uint64_t modulus_ = 2;
};

// binom(n, m) by the multiplicative recurrence; 0 when m > n.
mpz_class binom_exact(std::uint64_t n, std::uint64_t m);

// Product of digit binomials mod p.
ResidueClass lucas_residue(std::uint64_t n, std::uint64_t m, std::uint64_t p);

// Number of carries at digit positions >= j when adding m and r in base p.
int kummer_carries(std::uint64_t m, std::uint64_t r, std::uint64_t p, int j);

// Product of the integers in [1, k] prime to p, mod p^q.
ResidueClass factorial_p(std::uint64_t k, std::uint64_t p, int q);

// binom(n, m) mod p^q through Granville's carry formula.
ResidueClass granville_residue(std::uint64_t n, std::uint64_t m, std::uint64_t p, int q);

enum class LemmaId { Eq12, Tech, Tech4, ResSq, Lm32, Lm31, PMain };

std::string lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma(const std::string& name);
std::vector<LemmaId> all_lemmas();

struct LemmaParams {
  std::uint64_t p = 3;
  std::optional<std::uint64_t> r;  // eq12
  std::optional<std::uint64_t> a;  // tech; for tech4 selects the a / p-a pairing
  std::optional<int> s;            // lm32, lm31, pmain
};

struct LemmaRecord {
  LemmaId id = LemmaId::Eq12;
  LemmaParams params;
  // Both sides reduced mod p^2. Unset when the record is unsupported before
  // anything could be evaluated.
  std::optional<ResidueClass> lhs;
  std::optional<ResidueClass> rhs;
  bool supported = true;
  bool holds = false;
  std::string note;

  bool pass() const { return supported && holds; }
};

// Evaluates both sides of the named congruence directly with big integers.
// eq12, tech4, lm31 and lm32 are only used for odd p and are flagged
// unsupported at p = 2 (their values are still computed and reported).
LemmaRecord verify_lemma(LemmaId id, const LemmaParams& params);

// sum_{k=J}^{p^s-1} binom(k, J) with J = p^s - p^{s-1} - 1. Checked against
// binom(p^s, p^{s-1}); a mismatch throws std::logic_error.
mpz_class pmain_sum(std::uint64_t p, int s);

}  // namespace unicob

#endif  // UNICOB_RESIDUES_HPP
