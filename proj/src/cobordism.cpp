#include "unicob/cobordism.hpp"

#include "unicob/residues.hpp"

namespace unicob {

namespace {

mpz_class binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binom_exact(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

mpz_class to_mpz(const ExactScalar& s) { return s.to_integer(); }

long mod_nonneg(const mpz_class& v, long q) {
  return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(q)));
}

}  // namespace

CobordismClass CobordismClass::of(Variety v, const mpz_class& coefficient) {
  CobordismClass c(v.dim);
  c.accumulate(Term{std::make_shared<const Variety>(std::move(v)), 1}, coefficient);
  return c;
}

void CobordismClass::accumulate(const Term& t, const mpz_class& scale) {
  if (t.variety->dim != degree_) throw DomainError("cobordism class: variety of the wrong dimension");
  const mpz_class add = t.coefficient * scale;
  if (add == 0) return;
  auto [it, inserted] = terms_.try_emplace(t.variety->name, Term{t.variety, 0});
  it->second.coefficient += add;
  if (it->second.coefficient == 0) terms_.erase(it);
}

mpz_class CobordismClass::milnor() const {
  mpz_class s = 0;
  for (const auto& [name, t] : terms_) s += t.coefficient * to_mpz(milnor_number(*t.variety));
  return s;
}

CobordismClass class_negate(const CobordismClass& c) { return class_scale(c, -1); }

CobordismClass class_add(const CobordismClass& a, const CobordismClass& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("class_add: degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  CobordismClass out = a;
  for (const auto& [name, t] : b.terms()) out.accumulate(t, 1);
  return out;
}

CobordismClass class_scale(const CobordismClass& c, const mpz_class& k) {
  CobordismClass out(c.degree());
  for (const auto& [name, t] : c.terms()) out.accumulate(t, k);
  return out;
}

mpz_class a_closed_form(int i, int j) {
  const int n = i + j;
  if (i < 0 || j < i || n < 2) throw DomainError("a_closed_form: need 0 <= i <= j, i + j >= 2");
  if (i == 0) return n + 1;
  const mpz_class b = binom(n, j);
  return (n % 2 ? b : mpz_class(-b)) - binom(n, j + 1);
}

mpz_class a_engine(int i, int j) {
  const int n = i + j;
  if (i < 0 || j < i || n < 2 || (i == 0 && j < 2)) throw DomainError("a_engine: need 0 <= i <= j, i + j >= 2");
  if (i >= 2) return to_mpz(blowup_milnor(x_variety(i, j), y_variety(i, j)));
  const mpz_class s = to_mpz(blowup_milnor(x_variety(1, n - 1), y_variety(1, n - 1)));
  if (n % 2 == 0) return i == 0 ? mpz_class(-s) : s;
  const mpz_class bf = to_mpz(milnor_number(bounded_flag(n)));
  return i == 0 ? mpz_class(s + 2 * bf) : mpz_class(s + bf);
}

RowOneComparison compare_row_one(int n) {
  if (n < 2) throw DomainError("compare_row_one: need n >= 2");
  RowOneComparison c;
  c.n = n;
  c.closed = (n % 2 ? mpz_class(n - 1) : mpz_class(1 - n)) - 2;
  c.engine = to_mpz(blowup_milnor(x_variety(1, n - 1), y_variety(1, n - 1)));
  return c;
}

std::optional<std::pair<std::uint64_t, int>> prime_power_of(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (m % p) ++p;
  int s = 0;
  while (m % p == 0) {
    m /= p;
    ++s;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, s);
}

mpz_class milnor_constant(int n) {
  if (n < 1) throw DomainError("milnor_constant: need n >= 1");
  const auto pp = prime_power_of(static_cast<std::uint64_t>(n) + 1);
  return pp ? mpz_class(static_cast<unsigned long>(pp->first)) : mpz_class(1);
}

DigitCase digit_case_select(int n, int q) {
  if (n < 1 || q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw DomainError("digit_case_select: need n >= 1 and q prime");
  }
  if ((n + 1) % q) throw DomainError("digit_case_select: q does not divide n + 1");
  if (prime_power_of(static_cast<std::uint64_t>(n) + 1)) {
    throw DomainError("digit_case_select: n + 1 is a prime power");
  }
  const auto d = BaseDigits::of(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(q)).digits;
  const std::size_t s = d.size();
  const auto top = static_cast<int>(d[s - 1]);

  // b: length of the trailing (q-1)-block
  std::size_t b = 0;
  while (b < s && d[b] == static_cast<std::uint64_t>(q - 1)) ++b;

  long qpow = 1;
  for (std::size_t i = 0; i + 1 < s; ++i) qpow *= q;

  DigitCase out;
  if (b == s - 1 && top == 1) {
    out.case_id = 1;
    out.j = n - (q - 1);
  } else if (b == s - 1) {
    out.case_id = 2;
    out.leading_digit = top;
    out.j = static_cast<int>(top * qpow - 1);
  } else {
    std::size_t a = b + 1;
    while (d[a] == 0) ++a;  // the leading digit is nonzero
    long low = 0;
    long place = 1;
    for (std::size_t i = 0; i < a; ++i) {
      low += static_cast<long>(d[i]) * place;
      place *= q;
    }
    out.case_id = 3;
    out.j = static_cast<int>(n - low - 1);
  }
  if (!(n - out.j < out.j && out.j <= n - 1)) throw std::logic_error("digit_case_select: bad witness");
  return out;
}

GeneratorReport verify_generator_degree(int n, bool use_engine, int engine_cap) {
  if (n < 2) throw DomainError("verify_generator_degree: degree must be at least 2");
  GeneratorReport rep;
  rep.degree = n;
  rep.m_n = milnor_constant(n);

  const bool engine_here = use_engine && n <= engine_cap;
  for (int i = 0; 2 * i <= n; ++i) {
    const int j = n - i;
    mpz_class v = a_closed_form(i, j);
    if (engine_here) {
      const mpz_class e = a_engine(i, j);
      if (i >= 2) {
        v = e;
      } else {
        rep.engine_diagnostics[{i, j}] = e;
      }
    }
    rep.a_values[{i, j}] = v;
  }
  if (engine_here) rep.row_one = compare_row_one(n);

  mpz_class g = 0;
  for (const auto& [ij, v] : rep.a_values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  rep.gcd = g;
  bool ok = g == rep.m_n;

  const auto pp = prime_power_of(static_cast<std::uint64_t>(n) + 1);
  if (pp && pp->second >= 2 && pp->first > 2) {
    PrimePowerWitness w;
    w.p = pp->first;
    w.s = pp->second;
    std::uint64_t ps1 = 1;
    for (int k = 0; k + 1 < w.s; ++k) ps1 *= w.p;
    w.i = static_cast<int>(ps1);
    w.j = n - w.i;
    w.a_value = rep.a_values.at({w.i, w.j});
    const mpz_class a0 = rep.a_values.at({0, n});
    mpz_gcd(w.gcd.get_mpz_t(), a0.get_mpz_t(), w.a_value.get_mpz_t());
    w.binomial = binom_exact(static_cast<std::uint64_t>(n) + 1, ps1);
    const long p2 = static_cast<long>(w.p * w.p);
    w.residue_mod_p2 = mod_nonneg(w.a_value, p2);
    const bool pm_p = w.residue_mod_p2 == static_cast<long>(w.p) || w.residue_mod_p2 == p2 - static_cast<long>(w.p);
    w.pass = w.gcd == static_cast<unsigned long>(w.p) && abs(w.a_value) == w.binomial && pm_p;
    ok = ok && w.pass;
    rep.prime_power = w;
  } else if (!pp) {
    for (int q = 2; q <= n + 1; ++q) {
      if ((n + 1) % q || !is_prime(static_cast<std::uint64_t>(q))) continue;
      DigitWitness w;
      w.q = q;
      w.choice = digit_case_select(n, q);
      w.a_value = rep.a_values.at({n - w.choice.j, w.choice.j});
      w.residue = mod_nonneg(w.a_value, q);
      auto norm = [q](long v) { return ((v % q) + q) % q; };
      switch (w.choice.case_id) {
        case 1: w.expected = {norm(2)}; break;
        case 2: w.expected = {norm(w.choice.leading_digit - 1), norm(-w.choice.leading_digit - 1)}; break;
        default: w.expected = {norm(-1)}; break;
      }
      bool claim = false;
      for (long e : w.expected) claim = claim || e == w.residue;
      w.pass = w.residue != 0 && claim;
      ok = ok && w.pass;
      rep.digit_cases.push_back(std::move(w));
    }
  }
  rep.pass = ok;
  return rep;
}

}  // namespace unicob
