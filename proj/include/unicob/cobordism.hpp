#ifndef UNICOB_COBORDISM_HPP
#define UNICOB_COBORDISM_HPP

// Formal integer combinations of varieties, the a_{i,j} family and the
// per-degree generator verification.

#include "unicob/char_numbers.hpp"
#include "unicob/errors.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unicob {

class CobordismClass {
 public:
  struct Term {
    std::shared_ptr<const Variety> variety;
    mpz_class coefficient;
  };

  explicit CobordismClass(int degree) : degree_(degree) {}
  static CobordismClass of(Variety v, const mpz_class& coefficient = 1);

  int degree() const { return degree_; }
  // Keyed by variety name; zero coefficients are dropped.
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // sum of a_V s_n(V)
  mpz_class milnor() const;

  friend CobordismClass class_negate(const CobordismClass& c);
  friend CobordismClass class_add(const CobordismClass& a, const CobordismClass& b);
  friend CobordismClass class_scale(const CobordismClass& c, const mpz_class& k);

 private:
  void accumulate(const Term& t, const mpz_class& scale);

  int degree_;
  std::map<std::string, Term> terms_;
};

CobordismClass class_negate(const CobordismClass& c);
CobordismClass class_add(const CobordismClass& a, const CobordismClass& b);
CobordismClass class_scale(const CobordismClass& c, const mpz_class& k);

// a_{0,n} = n + 1; a_{i,j} = (-1)^{n+1} binom(n, j) - binom(n, j+1) for
// 0 < i <= j, n = i + j >= 2.
mpz_class a_closed_form(int i, int j);

// The same entry from the engine. For i >= 2 this is the blow-up difference
// s(X_{i,j}) - s(Y_{i,j}). The (0, n) and (1, n-1) entries are built from
// s = s(X_{1,n-1}) - s(Y_{1,n-1}) and s_n(BF_n):
//   n even: a_{0,n} = -s, a_{1,n-1} = s;
//   n odd:  a_{0,n} = s + 2 s_n(BF_n), a_{1,n-1} = s + s_n(BF_n).
mpz_class a_engine(int i, int j);

// The i = 1 entry: the closed form (-1)^{n+1} (n-1) - 2 for
// s(M_{1,n-1}), against the engine's s(X_{1,n-1}) - s(Y_{1,n-1}).
struct RowOneComparison {
  int n = 0;
  mpz_class closed;
  mpz_class engine;
  bool agree() const { return closed == engine; }
};
RowOneComparison compare_row_one(int n);

// p if n + 1 = p^s for a prime p, else 1.
mpz_class milnor_constant(int n);

// (p, s) with n + 1 = p^s, s >= 1, if any.
std::optional<std::pair<std::uint64_t, int>> prime_power_of(std::uint64_t m);

struct DigitCase {
  int case_id = 0;
  int j = 0;
  // Digit that drives the case-2 claim (x_{s-1}); 0 otherwise.
  int leading_digit = 0;
};

// Picks j from the base-q digits of n so that a_{n-j,j} is prime to q.
DigitCase digit_case_select(int n, int q);

struct DigitWitness {
  int q = 0;
  DigitCase choice;
  mpz_class a_value;     // a_{n-j, j}
  long residue = 0;      // a_value mod q in [0, q)
  std::vector<long> expected;  // residues allowed by the case claim
  bool pass = false;
};

struct PrimePowerWitness {
  std::uint64_t p = 0;
  int s = 0;
  int i = 0;
  int j = 0;
  mpz_class a_value;
  mpz_class gcd;       // gcd(a_{0,n}, a_{i,j})
  mpz_class binomial;  // binom(p^s, p^{s-1})
  long residue_mod_p2 = 0;
  bool pass = false;
};

struct GeneratorReport {
  int degree = 0;
  mpz_class m_n;
  // Values used for the verdict, keyed by (i, j).
  std::map<std::pair<int, int>, mpz_class> a_values;
  // Engine values for entries whose verdict value comes from a closed form.
  std::map<std::pair<int, int>, mpz_class> engine_diagnostics;
  std::optional<RowOneComparison> row_one;
  mpz_class gcd;
  std::optional<PrimePowerWitness> prime_power;
  std::vector<DigitWitness> digit_cases;
  bool pass = false;
};

// Assembles the degree-n family and checks gcd = m_n plus the witnesses.
// With use_engine, entries with i >= 2 and n <= engine_cap come from the
// engine; the i in {0, 1} entries always use closed forms and their engine
// values go to the diagnostics.
GeneratorReport verify_generator_degree(int n, bool use_engine, int engine_cap = 12);

}  // namespace unicob

#endif  // UNICOB_COBORDISM_HPP
