#include "unicob/variety.hpp"

#include "unicob/char_numbers.hpp"

namespace unicob {

namespace {

std::string pair_name(const char* family, int i, int j) {
  return std::string(family) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

void require_line_class(const RingClass& c, const RingPtr& ring, const char* where) {
  if (c.ring() != ring) throw OwnershipError(std::string(where) + ": line class belongs to another ring");
  if (!c.is_homogeneous(1)) throw DomainError(std::string(where) + ": first Chern class must have weight 1");
}

TangentFactor lift_factor(const TangentFactor& f, const RingPtr& target) {
  return std::visit(
      [&](const auto& x) -> TangentFactor {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwistedBlock>) {
          return TwistedBlock{transport(x.bundle_chern, target), x.rank, transport(x.twist, target)};
        } else {
          return T{transport(x.c1, target)};
        }
      },
      f);
}

RingClass t_class(const RingPtr& ring, int a) {
  if (a == 0) return zero(ring);
  return generator(ring, "t" + std::to_string(a));
}

}  // namespace

int Variety::stable_rank() const {
  int r = 0;
  for (const auto& f : tangent) {
    if (const auto* b = std::get_if<TwistedBlock>(&f)) {
      r += b->rank;
    } else {
      ++r;
    }
  }
  return r;
}

Variety Variety::lifted(const RingPtr& target) const {
  Variety out{name, target, {}, dim};
  out.tangent.reserve(tangent.size());
  for (const auto& f : tangent) out.tangent.push_back(lift_factor(f, target));
  return out;
}

Variety point() { return Variety{"pt", TowerRing::point(), {}, 0}; }

Variety projective_space(int n) {
  if (n < 0) throw DomainError("projective_space: negative dimension");
  const RingPtr base = TowerRing::point();
  auto [ring, y] = extend_by_projectivization(base, one(base), n + 1, "y");
  Variety v{"CP^" + std::to_string(n), ring, {}, n};
  v.tangent.push_back(TwistedBlock{one(ring), n + 1, y});
  return v;
}

Variety bounded_flag(int n) {
  if (n < 0) throw DomainError("bounded_flag: negative dimension");
  const Variety pt = point();
  std::vector<RingClass> lines(static_cast<std::size_t>(n) + 1, zero(pt.ring));
  Variety v = bf_tower(pt, lines, "t", 1).variety;
  v.name = "BF_" + std::to_string(n);
  return v;
}

BfTower bf_tower(const Variety& base, const std::vector<RingClass>& line_c1s, const std::string& stem,
                 int first_index) {
  if (line_c1s.empty()) throw DomainError("bf_bundle: needs at least one line bundle");
  for (const auto& x : line_c1s) require_line_class(x, base.ring, "bf_bundle");

  Variety v = base;
  std::vector<RingClass> xs = line_c1s;
  std::vector<RingClass> ys{-xs[0]};

  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const RingPtr ring = v.ring;
    // zeta_{i+1} + xi_{i+2}: c1(zeta) = -y_{i+1}
    const RingClass bundle = (one(ring) - ys[i]) * (one(ring) + xs[i + 1]);
    auto [next, y] = extend_by_projectivization(ring, bundle, 2, stem + std::to_string(first_index + static_cast<int>(i)));

    v = v.lifted(next);
    for (auto& x : xs) x = transport(x, next);
    for (auto& yy : ys) yy = transport(yy, next);
    v.tangent.push_back(LineClass{y - ys[i]});
    v.tangent.push_back(LineClass{y + xs[i + 1]});
    ys.push_back(y);
    v.dim += 1;
  }
  v.name = "BF(" + base.name + ";" + std::to_string(line_c1s.size()) + ")";
  return BfTower{std::move(v), std::move(ys)};
}

Variety bf_bundle(const Variety& base, const std::vector<RingClass>& line_c1s) {
  return bf_tower(base, line_c1s).variety;
}

Variety projectivize(const Variety& base, const RingClass& bundle_chern, int rank, const std::string& gen) {
  auto [ring, y] = extend_by_projectivization(base.ring, bundle_chern, rank, gen);
  Variety v = base.lifted(ring);
  v.tangent.push_back(TwistedBlock{transport(bundle_chern, ring), rank, y});
  v.dim += rank - 1;
  v.name = "P(" + base.name + ")";
  return v;
}

Variety projectivize_lines(const Variety& base, const std::vector<RingClass>& line_c1s, const std::string& gen) {
  if (line_c1s.empty()) throw DomainError("projectivize_lines: empty bundle");
  RingClass bundle = one(base.ring);
  for (const auto& u : line_c1s) {
    require_line_class(u, base.ring, "projectivize_lines");
    bundle = bundle * (one(base.ring) + u);
  }
  const int rank = static_cast<int>(line_c1s.size());
  auto [ring, y] = extend_by_projectivization(base.ring, bundle, rank, gen);
  Variety v = base.lifted(ring);
  for (const auto& u : line_c1s) v.tangent.push_back(LineClass{transport(u, ring) + y});
  v.dim += rank - 1;
  v.name = "P(" + base.name + ")";
  return v;
}

Variety product(const Variety& left, const Variety& right) {
  const ProductRing prod = product_ring(left.ring, right.ring);
  Variety v{left.name + " x " + right.name, prod.ring, {}, left.dim + right.dim};
  auto embed = [&](const Variety& src, bool is_left) {
    auto e = [&](const RingClass& c) { return is_left ? prod.from_left(c) : prod.from_right(c); };
    for (const auto& f : src.tangent) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TwistedBlock>) {
              v.tangent.push_back(TwistedBlock{e(x.bundle_chern), x.rank, e(x.twist)});
            } else {
              v.tangent.push_back(T{e(x.c1)});
            }
          },
          f);
    }
  };
  embed(left, true);
  embed(right, false);
  return v;
}

Variety x_variety(int i, int j) {
  if (i < 0 || j < i || j < 1) throw DomainError("x_variety: need 0 <= i <= j, j >= 1");
  const Variety base = bounded_flag(i);
  const RingPtr& r = base.ring;
  std::vector<RingClass> lines(static_cast<std::size_t>(j - i), zero(r));
  for (int a = 1; a <= i; ++a) lines.push_back(t_class(r, a - 1) - t_class(r, a));  // conj beta*_a
  lines.push_back(t_class(r, i));                                                    // conj beta_i
  Variety v = bf_bundle(base, lines);
  v.name = pair_name("X", i, j);
  return v;
}

namespace {

BfTower z_tower(int i, int j) {
  const Variety base = bounded_flag(i - 1);
  const RingPtr& r = base.ring;
  std::vector<RingClass> lines(static_cast<std::size_t>(j - i), zero(r));
  for (int a = 1; a <= i - 1; ++a) lines.push_back(t_class(r, a - 1) - t_class(r, a));
  lines.push_back(zero(r));
  BfTower z = bf_tower(base, lines);
  z.variety.name = pair_name("Z", i, j);
  return z;
}

}  // namespace

Variety z_variety(int i, int j) {
  if (i < 1 || j < i) throw DomainError("z_variety: need 1 <= i <= j");
  return z_tower(i, j).variety;
}

Variety y_variety(int i, int j) {
  if (i < 1 || j < i) throw DomainError("y_variety: need 1 <= i <= j");
  const BfTower z = z_tower(i, j);
  const RingPtr& r = z.variety.ring;
  const RingClass x = t_class(r, i - 1);    // c1(conj beta_{i-1})
  const RingClass yj = z.fiber.back();      // c1(conj zeta_j)
  // conj zeta_j conj beta_{i-1} + conj beta_{i-1} + C
  const RingClass bundle = (one(r) + yj + x) * (one(r) + x);
  auto [ring, y] = extend_by_projectivization(r, bundle, 3, "y");

  Variety v = z.variety.lifted(ring);
  const RingClass xl = transport(x, ring);
  const RingClass yjl = transport(yj, ring);
  v.tangent.push_back(LineClass{y + yjl + xl});
  v.tangent.push_back(LineClass{y + xl});
  v.tangent.push_back(NegLineClass{y});
  v.dim += 2;
  v.name = pair_name("Y", i, j);
  return v;
}

Variety h_variety(int i, int j) {
  if (i < 1 || j < i) throw DomainError("h_variety: need 1 <= i <= j");
  const Variety base = projective_space(i);
  const RingPtr& r = base.ring;
  // conj eta*_i has total Chern class (1 + y)^{-1}; the trivial summand adds nothing.
  const RingClass bundle = invert_unit(one(r) + generator(r, "y"));
  Variety v = projectivize(base, bundle, j, "w");
  v.name = pair_name("H", i, j);
  return v;
}

Variety br_variety(int i, int j) {
  if (i < 1 || j < i) throw DomainError("br_variety: need 1 <= i <= j");
  const Variety base = bounded_flag(i);
  const RingPtr& r = base.ring;
  std::vector<RingClass> lines;
  for (int k = 1; k <= i; ++k) lines.push_back(t_class(r, k - 1) - t_class(r, k));
  for (int k = 0; k < j - i; ++k) lines.push_back(zero(r));
  Variety v = projectivize_lines(base, lines, "w");
  v.name = pair_name("BR", i, j);
  return v;
}

Variety l_variety(int i, int j) {
  if (i < 0 || j < 1) throw DomainError("l_variety: need i >= 0, j >= 1");
  const Variety base = projective_space(i);
  const RingPtr& r = base.ring;
  std::vector<RingClass> lines{-generator(r, "y")};  // eta_i
  for (int k = 0; k < j; ++k) lines.push_back(zero(r));
  Variety v = projectivize_lines(base, lines, "w");
  v.name = "L(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return v;
}

ExactScalar dual_hypersurface_milnor(const Variety& x, const RingClass& c1) {
  require_line_class(c1, x.ring, "dual_hypersurface_milnor");
  if (x.dim < 1) throw DomainError("dual_hypersurface_milnor: ambient dimension must be at least 1");
  const unsigned k = static_cast<unsigned>(x.dim - 1);
  RingClass p = k == 0 ? constant(x.ring, ExactScalar(x.stable_rank())) : power_sum(x, static_cast<int>(k));
  return integrate((p - pow(c1, k)) * c1);
}

}  // namespace unicob
