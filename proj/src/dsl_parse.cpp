#include "unicob/dsl.hpp"

#include <set>

namespace unicob::dsl {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Lexical: return "lexical";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Unbound: return "unbound-name";
    case ErrorKind::Arity: return "arity";
  }
  return "?";
}

ParseError::ParseError(ErrorKind kind, Pos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + to_string(kind) +
                         " error: " + message),
      kind_(kind),
      pos_(pos),
      message_(message) {}

EvalError::EvalError(std::size_t statement, const std::string& message)
    : std::runtime_error("statement " + std::to_string(statement) + ": " + message), statement_(statement) {}

bool operator==(const Poly& a, const Poly& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.i == b.i && a.j == b.j && a.operands == b.operands &&
         a.bundle == b.bundle && a.classes == b.classes && a.chern == b.chern && a.rank == b.rank;
}

bool operator==(const Command& a, const Command& b) {
  return a.kind == b.kind && a.operands == b.operands && a.partition == b.partition && a.poly == b.poly;
}

std::string command_name(Command::Kind kind) {
  switch (kind) {
    case Command::Kind::Milnor: return "milnor";
    case Command::Kind::Todd: return "todd";
    case Command::Kind::ChernNumber: return "chern_number";
    case Command::Kind::DualMilnor: return "dual_milnor";
    case Command::Kind::BlowupMilnor: return "blowup_milnor";
  }
  return "?";
}

namespace {

struct Token {
  enum class Type { Ident, Int, Punct, End };
  Type type = Type::End;
  std::string text;
  char punct = 0;
  Pos pos;
};

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_rest(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Pos pos;
  std::size_t k = 0;
  auto advance = [&](std::size_t bytes) {
    k += bytes;
    ++pos.col;
  };
  while (k < src.size()) {
    const char c = src[k];
    if (c == '\n') {
      ++k;
      ++pos.line;
      pos.col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < src.size() && src[k] != '\n') {
        // count code points so later columns stay right on this line
        const auto u = static_cast<unsigned char>(src[k]);
        if ((u & 0xC0) != 0x80) ++pos.col;
        ++k;
      }
      continue;
    }
    Token t;
    t.pos = pos;
    if (ident_start(c)) {
      std::size_t e = k;
      while (e < src.size() && ident_rest(src[e])) ++e;
      t.type = Token::Type::Ident;
      t.text = std::string(src.substr(k, e - k));
      pos.col += static_cast<int>(e - k);
      k = e;
    } else if (digit(c)) {
      std::size_t e = k;
      while (e < src.size() && digit(src[e])) ++e;
      if (e < src.size() && ident_start(src[e])) {
        throw ParseError(ErrorKind::Lexical, Pos{pos.line, pos.col + static_cast<int>(e - k)},
                         "identifier cannot start with a digit");
      }
      t.type = Token::Type::Int;
      t.text = std::string(src.substr(k, e - k));
      pos.col += static_cast<int>(e - k);
      k = e;
    } else if (std::string_view("(),;=+-*^[]").find(c) != std::string_view::npos) {
      t.type = Token::Type::Punct;
      t.punct = c;
      advance(1);
    } else if (src.substr(k, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      t.type = Token::Type::Punct;
      t.punct = '-';
      advance(3);
    } else {
      const auto u = static_cast<unsigned char>(c);
      std::string shown = u < 0x80 ? std::string(1, c) : "non-ASCII character";
      throw ParseError(ErrorKind::Lexical, pos, "unexpected character '" + shown + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

const std::set<std::string> kNamedFamilies = {"X", "Z", "Y", "BR", "H", "L"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script script() {
    Script s;
    while (peek().type != Token::Type::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(k_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[k_];
    if (k_ + 1 < toks_.size()) ++k_;
    return t;
  }
  bool is_punct(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.type == Token::Type::Punct && t.punct == c;
  }
  static std::string describe(const Token& t) {
    switch (t.type) {
      case Token::Type::Ident: return "'" + t.text + "'";
      case Token::Type::Int: return "integer " + t.text;
      case Token::Type::Punct: return std::string("'") + t.punct + "'";
      case Token::Type::End: return "end of input";
    }
    return "?";
  }
  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw ParseError(ErrorKind::Syntax, t.pos, "expected " + expected + ", found " + describe(t));
  }
  const Token& expect(char c) {
    if (!is_punct(c)) fail(peek(), std::string("'") + c + "'");
    return next();
  }
  const Token& expect_ident() {
    if (peek().type != Token::Type::Ident) fail(peek(), "identifier");
    return next();
  }

  // Between arguments of a call with a fixed argument count.
  void separator(const std::string& fn, std::size_t expected, std::size_t parsed) {
    if (parsed < expected) {
      if (is_punct(')')) {
        throw ParseError(ErrorKind::Arity, peek().pos,
                         fn + " takes " + std::to_string(expected) + " argument(s), got " + std::to_string(parsed));
      }
      expect(',');
    } else {
      if (is_punct(',')) {
        throw ParseError(ErrorKind::Arity, peek().pos,
                         fn + " takes " + std::to_string(expected) + " argument(s), got more");
      }
      expect(')');
    }
  }

  int small_int(const std::string& what) {
    const Token& t = peek();
    if (t.type != Token::Type::Int) fail(t, what);
    if (t.text.size() > 6) throw ParseError(ErrorKind::Syntax, t.pos, what + " out of range");
    next();
    return std::stoi(t.text);
  }

  Statement statement() {
    const Token& head = peek();
    if (head.type == Token::Type::Ident && head.text == "let") {
      next();
      Let let;
      let.pos = head.pos;
      const Token& name = expect_ident();
      if (bound_.count(name.text)) {
        throw ParseError(ErrorKind::Syntax, name.pos, "'" + name.text + "' is already bound");
      }
      let.name = name.text;
      expect('=');
      let.expr = expr();
      expect(';');
      bound_.insert(let.name);
      return let;
    }
    Command c = command();
    expect(';');
    return c;
  }

  Command command() {
    const Token& head = peek();
    if (head.type != Token::Type::Ident) fail(head, "'let' or a command");
    Command c;
    c.pos = head.pos;
    std::size_t arity = 1;
    if (head.text == "milnor") {
      c.kind = Command::Kind::Milnor;
    } else if (head.text == "todd") {
      c.kind = Command::Kind::Todd;
    } else if (head.text == "chern_number") {
      c.kind = Command::Kind::ChernNumber;
      arity = 2;
    } else if (head.text == "dual_milnor") {
      c.kind = Command::Kind::DualMilnor;
      arity = 2;
    } else if (head.text == "blowup_milnor") {
      c.kind = Command::Kind::BlowupMilnor;
      arity = 2;
    } else {
      throw ParseError(ErrorKind::Unbound, head.pos, "unknown command '" + head.text + "'");
    }
    const std::string fn = head.text;
    next();
    expect('(');
    c.operands.push_back(expr());
    separator(fn, arity, 1);
    if (arity == 2) {
      switch (c.kind) {
        case Command::Kind::ChernNumber: c.partition = partition(); break;
        case Command::Kind::DualMilnor: c.poly = poly(); break;
        default: c.operands.push_back(expr()); break;
      }
      separator(fn, arity, 2);
    }
    return c;
  }

  std::vector<int> partition() {
    expect('[');
    std::vector<int> parts{small_int("partition part")};
    while (is_punct(',')) {
      next();
      parts.push_back(small_int("partition part"));
    }
    expect(']');
    return parts;
  }

  Expr expr() {
    const Token& head = peek();
    if (head.type != Token::Type::Ident) fail(head, "a variety expression");
    Expr e;
    e.pos = head.pos;
    if (!is_punct('(', 1)) {
      if (!bound_.count(head.text)) {
        throw ParseError(ErrorKind::Unbound, head.pos, "'" + head.text + "' is not bound");
      }
      e.kind = Expr::Kind::Ref;
      e.name = head.text;
      next();
      return e;
    }
    const std::string fn = head.text;
    next();
    expect('(');
    if (fn == "point") {
      e.kind = Expr::Kind::Point;
      if (!is_punct(')')) throw ParseError(ErrorKind::Arity, peek().pos, "point takes no arguments");
      next();
    } else if (fn == "CP" || fn == "BF") {
      e.kind = fn == "CP" ? Expr::Kind::CP : Expr::Kind::BF;
      e.i = small_int("dimension");
      separator(fn, 1, 1);
    } else if (kNamedFamilies.count(fn)) {
      e.kind = Expr::Kind::Named;
      e.name = fn;
      e.i = small_int("index");
      separator(fn, 2, 1);
      e.j = small_int("index");
      separator(fn, 2, 2);
    } else if (fn == "product") {
      e.kind = Expr::Kind::Product;
      e.operands.push_back(expr());
      separator(fn, 2, 1);
      e.operands.push_back(expr());
      separator(fn, 2, 2);
    } else if (fn == "BFbundle") {
      e.kind = Expr::Kind::BFBundle;
      e.operands.push_back(expr());
      separator(fn, 2, 1);
      e.classes = class_list();
      expect(')');
    } else if (fn == "proj") {
      e.kind = Expr::Kind::Proj;
      e.operands.push_back(expr());
      separator(fn, 2, 1);
      bundle(e);
      separator(fn, 2, 2);
    } else {
      throw ParseError(ErrorKind::Unbound, e.pos, "unknown constructor '" + fn + "'");
    }
    return e;
  }

  void bundle(Expr& e) {
    const Token& head = peek();
    if (head.type != Token::Type::Ident || !is_punct('(', 1)) fail(head, "'lines(...)' or 'chern(...)'");
    if (head.text == "lines") {
      next();
      next();
      e.bundle = Expr::Bundle::Lines;
      e.classes = class_list();
      expect(')');
    } else if (head.text == "chern") {
      next();
      next();
      e.bundle = Expr::Bundle::Chern;
      e.chern = poly();
      separator("chern", 2, 1);
      e.rank = small_int("rank");
      separator("chern", 2, 2);
    } else {
      throw ParseError(ErrorKind::Unbound, head.pos, "unknown bundle '" + head.text + "'");
    }
  }

  // Either "[p, q, ...]" or a bare "p, q, ..." running up to ')'.
  std::vector<Poly> class_list() {
    std::vector<Poly> out;
    const bool bracketed = is_punct('[');
    if (bracketed) next();
    out.push_back(poly());
    while (is_punct(',')) {
      next();
      out.push_back(poly());
    }
    if (bracketed) expect(']');
    return out;
  }

  Poly poly() {
    Poly left = term();
    while (is_punct('+') || is_punct('-')) {
      const Token& op = next();
      Poly node;
      node.kind = op.punct == '+' ? Poly::Kind::Add : Poly::Kind::Sub;
      node.pos = left.pos;
      node.args.push_back(std::move(left));
      node.args.push_back(term());
      left = std::move(node);
    }
    return left;
  }

  Poly term() {
    Poly left = unary();
    while (is_punct('*')) {
      next();
      Poly node;
      node.kind = Poly::Kind::Mul;
      node.pos = left.pos;
      node.args.push_back(std::move(left));
      node.args.push_back(unary());
      left = std::move(node);
    }
    return left;
  }

  Poly unary() {
    if (is_punct('-')) {
      Poly node;
      node.kind = Poly::Kind::Neg;
      node.pos = next().pos;
      node.args.push_back(unary());
      return node;
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!is_punct('^')) return base;
    next();
    Poly node;
    node.kind = Poly::Kind::Pow;
    node.pos = base.pos;
    node.exponent = static_cast<unsigned>(small_int("exponent"));
    node.args.push_back(std::move(base));
    return node;
  }

  Poly atom() {
    const Token& t = peek();
    Poly p;
    p.pos = t.pos;
    if (t.type == Token::Type::Int) {
      p.kind = Poly::Kind::Int;
      p.value = mpz_class(t.text);
      next();
    } else if (t.type == Token::Type::Ident) {
      p.kind = Poly::Kind::Name;
      p.name = t.text;
      next();
    } else if (is_punct('(')) {
      next();
      p = poly();
      expect(')');
    } else {
      fail(t, "a class expression");
    }
    return p;
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  std::set<std::string> bound_;
};

// Binding strength used to decide where parentheses are needed.
int precedence(const Poly& p) {
  switch (p.kind) {
    case Poly::Kind::Add:
    case Poly::Kind::Sub: return 1;
    case Poly::Kind::Mul: return 2;
    case Poly::Kind::Neg: return 3;
    case Poly::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Poly& p, int min_prec) {
  std::string s = print(p);
  return precedence(p) < min_prec ? "(" + s + ")" : s;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ", ";
    out += parts[k];
  }
  return out;
}

std::string print_classes(const std::vector<Poly>& classes) {
  std::vector<std::string> parts;
  for (const auto& c : classes) parts.push_back(print(c));
  return join(parts);
}

}  // namespace

Script parse(std::string_view source) { return Parser(lex(source)).script(); }

std::string print(const Poly& p) {
  switch (p.kind) {
    case Poly::Kind::Int: return p.value.get_str();
    case Poly::Kind::Name: return p.name;
    case Poly::Kind::Neg: return "-" + wrap(p.args[0], 3);
    case Poly::Kind::Add: return wrap(p.args[0], 1) + " + " + wrap(p.args[1], 2);
    case Poly::Kind::Sub: return wrap(p.args[0], 1) + " - " + wrap(p.args[1], 2);
    case Poly::Kind::Mul: return wrap(p.args[0], 2) + "*" + wrap(p.args[1], 3);
    case Poly::Kind::Pow: return wrap(p.args[0], 5) + "^" + std::to_string(p.exponent);
  }
  return "?";
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Point: return "point()";
    case Expr::Kind::CP: return "CP(" + std::to_string(e.i) + ")";
    case Expr::Kind::BF: return "BF(" + std::to_string(e.i) + ")";
    case Expr::Kind::Named: return e.name + "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
    case Expr::Kind::Ref: return e.name;
    case Expr::Kind::Product: return "product(" + print(e.operands[0]) + ", " + print(e.operands[1]) + ")";
    case Expr::Kind::BFBundle: return "BFbundle(" + print(e.operands[0]) + ", [" + print_classes(e.classes) + "])";
    case Expr::Kind::Proj: {
      std::string b = e.bundle == Expr::Bundle::Lines
                          ? "lines(" + print_classes(e.classes) + ")"
                          : "chern(" + print(*e.chern) + ", " + std::to_string(e.rank) + ")";
      return "proj(" + print(e.operands[0]) + ", " + b + ")";
    }
  }
  return "?";
}

std::string print(const Command& c) {
  std::vector<std::string> args;
  args.push_back(print(c.operands[0]));
  switch (c.kind) {
    case Command::Kind::ChernNumber: {
      std::vector<std::string> parts;
      for (int k : c.partition) parts.push_back(std::to_string(k));
      std::string s = "[";
      for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + parts[k];
      args.push_back(s + "]");
      break;
    }
    case Command::Kind::DualMilnor: args.push_back(print(*c.poly)); break;
    case Command::Kind::BlowupMilnor: args.push_back(print(c.operands[1])); break;
    default: break;
  }
  return command_name(c.kind) + "(" + join(args) + ")";
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (const auto* let = std::get_if<Let>(&st)) {
      out += "let " + let->name + " = " + print(let->expr) + ";\n";
    } else {
      out += print(std::get<Command>(st)) + ";\n";
    }
  }
  return out;
}

}  // namespace unicob::dsl
