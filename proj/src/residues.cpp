#include "unicob/residues.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace unicob {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t checked_power(std::uint64_t p, int q) {
  std::uint64_t m = 1;
  for (int i = 0; i < q; ++i) {
    if (m > kMaxModulus / p) throw DomainError("prime power modulus too large");
    m *= p;
  }
  return m;
}

void require_prime(std::uint64_t p, const char* where) {
  if (!is_prime(p)) throw DomainError(std::string(where) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

// k!_p mod p^q for k < p^q, cached per thread while the table stays small.
const std::vector<std::uint64_t>* factorial_table(std::uint64_t p, int q, std::uint64_t modulus) {
  constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  if (modulus > kTableLimit) return nullptr;
  thread_local std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> cache;
  auto [it, inserted] = cache.try_emplace({p, q});
  if (inserted) {
    auto& t = it->second;
    t.resize(modulus);
    t[0] = 1 % modulus;
    for (std::uint64_t k = 1; k < modulus; ++k) t[k] = k % p ? mulmod(t[k - 1], k, modulus) : t[k - 1];
  }
  return &it->second;
}

std::uint64_t factorial_p_raw(std::uint64_t k, std::uint64_t p, int q, std::uint64_t modulus) {
  // k!_p = ((p^q)!_p)^{k div p^q} * (k mod p^q)!_p
  const std::uint64_t whole = k / modulus;
  const std::uint64_t rest = k % modulus;
  if (const auto* t = factorial_table(p, q, modulus)) {
    return mulmod(powmod((*t)[modulus - 1], whole, modulus), (*t)[rest], modulus);
  }
  auto partial = [&](std::uint64_t upto) {
    std::uint64_t r = 1 % modulus;
    for (std::uint64_t i = 1; i <= upto; ++i) {
      if (i % p) r = mulmod(r, i, modulus);
    }
    return r;
  };
  std::uint64_t r = partial(rest);
  if (whole) r = mulmod(r, powmod(partial(modulus - 1), whole, modulus), modulus);
  return r;
}

std::vector<bool> carry_positions(std::uint64_t m, std::uint64_t r, std::uint64_t p) {
  std::vector<bool> carries;
  std::uint64_t carry = 0;
  while (m || r || carry) {
    const std::uint64_t s = m % p + r % p + carry;
    carry = s >= p ? 1 : 0;
    carries.push_back(carry == 1);
    m /= p;
    r /= p;
  }
  return carries;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BaseDigits BaseDigits::of(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw DomainError("base must be at least 2");
  BaseDigits d;
  d.base = base;
  while (n) {
    d.digits.push_back(n % base);
    n /= base;
  }
  return d;
}

std::uint64_t BaseDigits::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

ResidueClass::ResidueClass(std::int64_t value, std::uint64_t p, int q) : p_(p), q_(q) {
  if (q < 1) throw DomainError("residue exponent must be positive");
  require_prime(p, "ResidueClass");
  modulus_ = checked_power(p, q);
  const auto m = static_cast<std::int64_t>(modulus_);
  value_ = static_cast<std::uint64_t>(((value % m) + m) % m);
}

ResidueClass::ResidueClass(const mpz_class& value, std::uint64_t p, int q) : ResidueClass(std::int64_t{0}, p, q) {
  value_ = reduce(value, modulus_);
}

std::int64_t ResidueClass::symmetric() const {
  const auto v = static_cast<std::int64_t>(value_);
  return value_ > modulus_ / 2 ? v - static_cast<std::int64_t>(modulus_) : v;
}

void ResidueClass::check_same_modulus(const ResidueClass& rhs) const {
  if (modulus_ != rhs.modulus_) throw DomainError("residues with different moduli");
}

ResidueClass& ResidueClass::operator+=(const ResidueClass& rhs) {
  check_same_modulus(rhs);
  value_ = (value_ + rhs.value_) % modulus_;
  return *this;
}

ResidueClass& ResidueClass::operator-=(const ResidueClass& rhs) {
  check_same_modulus(rhs);
  value_ = (value_ + modulus_ - rhs.value_) % modulus_;
  return *this;
}

ResidueClass& ResidueClass::operator*=(const ResidueClass& rhs) {
  check_same_modulus(rhs);
  value_ = mulmod(value_, rhs.value_, modulus_);
  return *this;
}

ResidueClass ResidueClass::operator-() const {
  ResidueClass r = *this;
  r.value_ = (modulus_ - value_) % modulus_;
  return r;
}

ResidueClass ResidueClass::inverse() const {
  if (value_ % p_ == 0) throw DomainError("residue " + to_string() + " is not invertible");
  // Units mod p^q form a group of order phi(p^q).
  ResidueClass r = *this;
  r.value_ = powmod(value_, modulus_ / p_ * (p_ - 1) - 1, modulus_);
  return r;
}

std::string ResidueClass::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

mpz_class binom_exact(std::uint64_t n, std::uint64_t m) {
  if (m > n) return 0;
  if (m > n - m) m = n - m;
  mpz_class r = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    r *= static_cast<unsigned long>(n - m + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

ResidueClass lucas_residue(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require_prime(p, "lucas_residue");
  ResidueClass out(std::int64_t{1}, p, 1);
  while (n || m) {
    const std::uint64_t ni = n % p;
    const std::uint64_t mi = m % p;
    if (mi > ni) return ResidueClass(std::int64_t{0}, p, 1);
    // binom(ni, mi) = ni! / (mi! (ni - mi)!), all factors below p
    const std::uint64_t num = factorial_p_raw(ni, p, 1, p);
    const std::uint64_t den = mulmod(factorial_p_raw(mi, p, 1, p), factorial_p_raw(ni - mi, p, 1, p), p);
    out *= ResidueClass(static_cast<std::int64_t>(num), p, 1) *
           ResidueClass(static_cast<std::int64_t>(den), p, 1).inverse();
    n /= p;
    m /= p;
  }
  return out;
}

int kummer_carries(std::uint64_t m, std::uint64_t r, std::uint64_t p, int j) {
  require_prime(p, "kummer_carries");
  if (j < 0) throw DomainError("kummer_carries: negative digit index");
  const auto carries = carry_positions(m, r, p);
  int count = 0;
  for (std::size_t i = static_cast<std::size_t>(j); i < carries.size(); ++i) count += carries[i] ? 1 : 0;
  return count;
}

ResidueClass factorial_p(std::uint64_t k, std::uint64_t p, int q) {
  require_prime(p, "factorial_p");
  ResidueClass out(std::int64_t{0}, p, q);
  return ResidueClass(static_cast<std::int64_t>(factorial_p_raw(k, p, q, out.modulus())), p, q);
}

ResidueClass granville_residue(std::uint64_t n, std::uint64_t m, std::uint64_t p, int q) {
  require_prime(p, "granville_residue");
  const ResidueClass zero_class(std::int64_t{0}, p, q);
  if (m > n) return zero_class;
  const std::uint64_t modulus = zero_class.modulus();
  const std::uint64_t r = n - m;
  const auto carries = carry_positions(m, r, p);
  int e0 = 0;
  int eq = 0;
  for (std::size_t i = 0; i < carries.size(); ++i) {
    if (!carries[i]) continue;
    ++e0;
    if (static_cast<int>(i) >= q - 1) ++eq;
  }
  if (e0 >= q) return zero_class;

  std::uint64_t num = 1 % modulus;
  std::uint64_t den = 1 % modulus;
  for (std::uint64_t nn = n, mm = m, rr = r; nn; nn /= p, mm /= p, rr /= p) {
    num = mulmod(num, factorial_p_raw(nn % modulus, p, q, modulus), modulus);
    den = mulmod(den, factorial_p_raw(mm % modulus, p, q, modulus), modulus);
    den = mulmod(den, factorial_p_raw(rr % modulus, p, q, modulus), modulus);
  }
  ResidueClass u = ResidueClass(static_cast<std::int64_t>(num), p, q) *
                   ResidueClass(static_cast<std::int64_t>(den), p, q).inverse();
  const bool plus_one = p == 2 && q >= 3;
  if (!plus_one && eq % 2 == 1) u = -u;
  return u * ResidueClass(static_cast<std::int64_t>(powmod(p, static_cast<std::uint64_t>(e0), modulus)), p, q);
}

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::Eq12: return "eq12";
    case LemmaId::Tech: return "tech";
    case LemmaId::Tech4: return "tech4";
    case LemmaId::ResSq: return "ressq";
    case LemmaId::Lm32: return "lm32";
    case LemmaId::Lm31: return "lm31";
    case LemmaId::PMain: return "pmain";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma(const std::string& name) {
  for (LemmaId id : all_lemmas()) {
    if (lemma_name(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<LemmaId> all_lemmas() {
  return {LemmaId::Eq12, LemmaId::Tech, LemmaId::Tech4, LemmaId::ResSq,
          LemmaId::Lm32, LemmaId::Lm31, LemmaId::PMain};
}

namespace {

std::uint64_t ipow(std::uint64_t p, int s) { return checked_power(p, s); }

// Exact rational reduced mod p^2; the denominator must be prime to p.
ResidueClass rational_mod(const mpq_class& x, std::uint64_t p) {
  return ResidueClass(x.get_num(), p, 2) * ResidueClass(x.get_den(), p, 2).inverse();
}

mpq_class harmonic(std::uint64_t a) {
  mpq_class h = 0;
  for (std::uint64_t k = 1; k <= a; ++k) h += mpq_class(1, static_cast<unsigned long>(k));
  return h;
}

// prod_{k=1}^{a-1} (p(p-1) + k) / a!
mpq_class tech4_summand(std::uint64_t p, std::uint64_t a) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::uint64_t k = 1; k < a; ++k) num *= static_cast<unsigned long>(p * (p - 1) + k);
  for (std::uint64_t k = 1; k <= a; ++k) den *= static_cast<unsigned long>(k);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

struct PMainParts {
  std::uint64_t j = 0;      // p^s - p^{s-1} - 1
  mpz_class lm31_sum;       // k = J+1 .. p^s - 2
  mpz_class lm32_term;      // k = p^s - 1
};

PMainParts pmain_parts(std::uint64_t p, int s) {
  const std::uint64_t ps = ipow(p, s);
  const std::uint64_t j = ps - ps / p - 1;
  PMainParts parts;
  parts.j = j;
  mpz_class b = 1;  // binom(k, J) at k = J
  for (std::uint64_t k = j + 1; k <= ps - 1; ++k) {
    b *= static_cast<unsigned long>(k);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k - j));
    if (k < ps - 1) {
      parts.lm31_sum += b;
    } else {
      parts.lm32_term = b;
    }
  }
  return parts;
}

void require_s(const LemmaParams& params, const char* id) {
  if (!params.s || *params.s < 2) throw DomainError(std::string(id) + ": needs s >= 2");
}

}  // namespace

LemmaRecord verify_lemma(LemmaId id, const LemmaParams& params) {
  const std::uint64_t p = params.p;
  require_prime(p, "verify_lemma");
  LemmaRecord rec;
  rec.id = id;
  rec.params = params;
  auto res = [p](const mpz_class& v) { return ResidueClass(v, p, 2); };

  switch (id) {
    case LemmaId::Eq12: {
      if (!params.r || *params.r >= p) throw DomainError("eq12: needs 0 <= r < p");
      mpz_class lhs = 1;
      mpz_class rhs = 1;
      for (std::uint64_t k = 1; k < p; ++k) {
        lhs *= static_cast<unsigned long>(p * *params.r + k);
        rhs *= static_cast<unsigned long>(k);
      }
      rec.lhs = res(lhs);
      rec.rhs = res(rhs);
      if (p == 2) {
        rec.supported = false;
        rec.note = "pairs k with p-k; stated for odd p";
      }
      break;
    }
    case LemmaId::Tech: {
      if (!params.a || *params.a == 0 || *params.a >= p) throw DomainError("tech: needs 0 < a < p");
      const std::uint64_t a = *params.a;
      mpz_class num = 1;
      mpz_class den = 1;
      for (std::uint64_t k = 1; k <= a; ++k) {
        num *= static_cast<unsigned long>(p * (p - 1) + k);
        den *= static_cast<unsigned long>(k);
      }
      rec.lhs = rational_mod(mpq_class(num, den), p);
      rec.rhs = rational_mod(1 - mpq_class(static_cast<unsigned long>(p)) * harmonic(a), p);
      break;
    }
    case LemmaId::Tech4: {
      if (params.a) {
        const std::uint64_t a = *params.a;
        if (a == 0 || a >= p) throw DomainError("tech4: needs 0 < a < p");
        rec.lhs = rational_mod(tech4_summand(p, a), p);
        rec.rhs = -rational_mod(tech4_summand(p, p - a), p);
        rec.note = "pairing of a with p-a";
      } else {
        mpq_class sum = 0;
        for (std::uint64_t a = 1; a < p; ++a) sum += tech4_summand(p, a);
        rec.lhs = rational_mod(sum, p);
        rec.rhs = res(0);
      }
      if (p == 2) {
        rec.supported = false;
        rec.note = "pairs a with p-a; stated for odd p";
      }
      break;
    }
    case LemmaId::ResSq:
      rec.lhs = factorial_p(p * p, p, 2);
      rec.rhs = res(-1);
      break;
    case LemmaId::Lm32: {
      require_s(params, "lm32");
      const std::uint64_t ps = ipow(p, *params.s);
      rec.lhs = res(binom_exact(ps - 1, ps - ps / p - 1));
      rec.rhs = res(static_cast<long>(p - 1));
      if (p == 2) {
        rec.supported = false;
        rec.note = "used only for odd p";
      }
      break;
    }
    case LemmaId::Lm31: {
      require_s(params, "lm31");
      rec.lhs = res(pmain_parts(p, *params.s).lm31_sum);
      rec.rhs = res(0);
      if (p == 2) {
        rec.supported = false;
        rec.note = "relies on the a / p-a pairing; used only for odd p";
      }
      break;
    }
    case LemmaId::PMain: {
      require_s(params, "pmain");
      const PMainParts parts = pmain_parts(p, *params.s);
      const mpz_class total = pmain_sum(p, *params.s);
      if (total != 1 + parts.lm31_sum + parts.lm32_term) {
        throw std::logic_error("pmain: sum does not split into its three parts");
      }
      rec.lhs = res(total);
      rec.rhs = res(static_cast<long>(p));
      rec.note = "sum = " + total.get_str() + " = 1 + " + parts.lm31_sum.get_str() + " + " + parts.lm32_term.get_str();
      break;
    }
  }
  rec.holds = rec.lhs && rec.rhs && *rec.lhs == *rec.rhs;
  return rec;
}

mpz_class pmain_sum(std::uint64_t p, int s) {
  require_prime(p, "pmain_sum");
  if (s < 2) throw DomainError("pmain_sum: needs s >= 2");
  const std::uint64_t ps = ipow(p, s);
  const std::uint64_t j = ps - ps / p - 1;
  mpz_class b = 1;
  mpz_class sum = 1;
  for (std::uint64_t k = j + 1; k <= ps - 1; ++k) {
    b *= static_cast<unsigned long>(k);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k - j));
    sum += b;
  }
  const mpz_class hockey = binom_exact(ps, ps / p);
  if (sum != hockey) throw std::logic_error("pmain_sum: hockey-stick identity failed");
  return sum;
}

}  // namespace unicob
