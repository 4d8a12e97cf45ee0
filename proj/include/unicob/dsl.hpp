#ifndef UNICOB_DSL_HPP
#define UNICOB_DSL_HPP

// The .tow tower-description language.
//
//   let b = BF(2);
//   let c = proj(CP(2), chern(1 + y, 3));   # y is CP(2)'s generator
//   milnor(b);
//   blowup_milnor(X(2,3), Y(2,3));
//
// Positions are 1-based (line, column in code points) and are ignored by
// AST equality.

#include "unicob/scalar.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace unicob::dsl {

struct Pos {
  int line = 1;
  int col = 1;
};

enum class ErrorKind { Lexical, Syntax, Unbound, Arity };

std::string to_string(ErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, Pos pos, const std::string& message);
  ErrorKind kind() const { return kind_; }
  Pos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  Pos pos_;
  std::string message_;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(std::size_t statement, const std::string& message);
  // 1-based index of the statement that failed.
  std::size_t statement() const { return statement_; }

 private:
  std::size_t statement_;
};

// Integer polynomial in generator names.
struct Poly {
  enum class Kind { Int, Name, Neg, Add, Sub, Mul, Pow };
  Kind kind = Kind::Int;
  mpz_class value;       // Int (nonnegative)
  std::string name;      // Name
  unsigned exponent = 0; // Pow
  std::vector<Poly> args;
  Pos pos;

  friend bool operator==(const Poly& a, const Poly& b);
};

struct Expr {
  enum class Kind { Point, CP, BF, BFBundle, Proj, Product, Named, Ref };
  enum class Bundle { None, Lines, Chern };
  Kind kind = Kind::Point;
  std::string name;  // family for Named (X, Z, Y, BR, H, L), variable for Ref
  int i = 0;         // CP(n), BF(n), Named(i, _)
  int j = 0;         // Named(_, j)
  std::vector<Expr> operands;
  Bundle bundle = Bundle::None;
  std::vector<Poly> classes;   // BFbundle lines, lines(...)
  std::optional<Poly> chern;   // chern(poly, rank)
  int rank = 0;
  Pos pos;

  friend bool operator==(const Expr& a, const Expr& b);
};

struct Command {
  enum class Kind { Milnor, Todd, ChernNumber, DualMilnor, BlowupMilnor };
  Kind kind = Kind::Milnor;
  std::vector<Expr> operands;
  std::vector<int> partition;
  std::optional<Poly> poly;
  Pos pos;

  friend bool operator==(const Command& a, const Command& b);
};

std::string command_name(Command::Kind kind);

struct Let {
  std::string name;
  Expr expr;
  Pos pos;

  friend bool operator==(const Let& a, const Let& b) { return a.name == b.name && a.expr == b.expr; }
};

using Statement = std::variant<Let, Command>;

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

Script parse(std::string_view source);

std::string print(const Poly& p);
std::string print(const Expr& e);
std::string print(const Command& c);
std::string print(const Script& s);

struct CommandResult {
  std::size_t statement = 0;  // 1-based
  std::string command;
  std::vector<std::string> args;  // printed operands
  ExactScalar value;
};

std::vector<CommandResult> run(const Script& script);

}  // namespace unicob::dsl

#endif  // UNICOB_DSL_HPP
