#include "unicob/char_numbers.hpp"
#include "unicob/dsl.hpp"

#include <map>

namespace unicob::dsl {

namespace {

// Keeps a single script from asking for towers with millions of basis
// elements.
constexpr int kMaxDim = 24;

void check_dim(int d, const std::string& what) {
  if (d < 0 || d > kMaxDim) {
    throw DomainError(what + ": dimension " + std::to_string(d) + " outside 0.." + std::to_string(kMaxDim));
  }
}

RingClass eval_poly(const Poly& p, const RingPtr& ring) {
  switch (p.kind) {
    case Poly::Kind::Int: return constant(ring, ExactScalar(p.value));
    case Poly::Kind::Name: {
      if (!ring->find_generator(p.name)) {
        std::string known;
        for (const auto& g : ring->generator_names()) known += (known.empty() ? "" : ", ") + g;
        throw DomainError("'" + p.name + "' is not a generator here (available: " +
                          (known.empty() ? "none" : known) + ")");
      }
      return generator(ring, p.name);
    }
    case Poly::Kind::Neg: return -eval_poly(p.args[0], ring);
    case Poly::Kind::Add: return eval_poly(p.args[0], ring) + eval_poly(p.args[1], ring);
    case Poly::Kind::Sub: return eval_poly(p.args[0], ring) - eval_poly(p.args[1], ring);
    case Poly::Kind::Mul: return eval_poly(p.args[0], ring) * eval_poly(p.args[1], ring);
    case Poly::Kind::Pow: return pow(eval_poly(p.args[0], ring), p.exponent);
  }
  throw std::logic_error("bad class expression");
}

class Evaluator {
 public:
  Variety eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Point: return point();
      case Expr::Kind::CP: check_dim(e.i, "CP"); return projective_space(e.i);
      case Expr::Kind::BF: check_dim(e.i, "BF"); return bounded_flag(e.i);
      case Expr::Kind::Ref: return env_.at(e.name);
      case Expr::Kind::Named: {
        check_dim(e.i + e.j, e.name);
        if (e.name == "X") return x_variety(e.i, e.j);
        if (e.name == "Z") return z_variety(e.i, e.j);
        if (e.name == "Y") return y_variety(e.i, e.j);
        if (e.name == "BR") return br_variety(e.i, e.j);
        if (e.name == "H") return h_variety(e.i, e.j);
        return l_variety(e.i, e.j);
      }
      case Expr::Kind::Product: {
        Variety a = eval(e.operands[0]);
        Variety b = eval(e.operands[1]);
        check_dim(a.dim + b.dim, "product");
        return product(a, b);
      }
      case Expr::Kind::BFBundle: {
        const Variety base = eval(e.operands[0]);
        check_dim(base.dim + static_cast<int>(e.classes.size()) - 1, "BFbundle");
        return bf_bundle(base, classes(e.classes, base.ring));
      }
      case Expr::Kind::Proj: {
        const Variety base = eval(e.operands[0]);
        if (e.bundle == Expr::Bundle::Lines) {
          check_dim(base.dim + static_cast<int>(e.classes.size()) - 1, "proj");
          return projectivize_lines(base, classes(e.classes, base.ring));
        }
        if (e.rank < 1) throw DomainError("proj: rank must be positive");
        check_dim(base.dim + e.rank - 1, "proj");
        return projectivize(base, eval_poly(*e.chern, base.ring), e.rank);
      }
    }
    throw std::logic_error("bad expression");
  }

  ExactScalar run(const Command& c) {
    const Variety v = eval(c.operands[0]);
    switch (c.kind) {
      case Command::Kind::Milnor: return milnor_number(v);
      case Command::Kind::Todd: return todd_genus(v);
      case Command::Kind::ChernNumber: return chern_number(v, Partition(c.partition));
      case Command::Kind::DualMilnor: return dual_hypersurface_milnor(v, eval_poly(*c.poly, v.ring));
      case Command::Kind::BlowupMilnor: return blowup_milnor(v, eval(c.operands[1]));
    }
    throw std::logic_error("bad command");
  }

  void bind(const std::string& name, Variety v) { env_.insert_or_assign(name, std::move(v)); }

 private:
  static std::vector<RingClass> classes(const std::vector<Poly>& polys, const RingPtr& ring) {
    std::vector<RingClass> out;
    for (const auto& p : polys) out.push_back(eval_poly(p, ring));
    return out;
  }

  std::map<std::string, Variety> env_;
};

}  // namespace

std::vector<CommandResult> run(const Script& script) {
  Evaluator ev;
  std::vector<CommandResult> out;
  for (std::size_t k = 0; k < script.statements.size(); ++k) {
    const std::size_t index = k + 1;
    try {
      if (const auto* let = std::get_if<Let>(&script.statements[k])) {
        ev.bind(let->name, ev.eval(let->expr));
        continue;
      }
      const auto& c = std::get<Command>(script.statements[k]);
      CommandResult r;
      r.statement = index;
      r.command = command_name(c.kind);
      for (const auto& e : c.operands) r.args.push_back(print(e));
      if (c.kind == Command::Kind::ChernNumber) {
        std::string s = "[";
        for (std::size_t i = 0; i < c.partition.size(); ++i) s += (i ? "," : "") + std::to_string(c.partition[i]);
        r.args.push_back(s + "]");
      }
      if (c.poly) r.args.push_back(print(*c.poly));
      r.value = ev.run(c);
      out.push_back(std::move(r));
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvalError(index, e.what());
    }
  }
  return out;
}

}  // namespace unicob::dsl
