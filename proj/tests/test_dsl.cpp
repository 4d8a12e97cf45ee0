#include "dsl_gen.hpp"
#include "unicob/dsl.hpp"
#include "unicob/report.hpp"

#include <gtest/gtest.h>

using namespace unicob;
using namespace unicob::dsl;
using testgen::kCases;
using testgen::ScriptGen;

namespace {

ParseError parse_error(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << src;
  return ParseError(ErrorKind::Syntax, {}, "");
}

std::string value_of(const std::string& src) {
  const auto rs = run(parse(src));
  return rs.empty() ? "" : rs.back().value.to_string();
}

std::string report_text(const Script& s) {
  Json rs = Json::array();
  for (const auto& r : run(s)) rs.push_back(to_json(r));
  return dump_report(make_report("run", Json::object(), rs, std::nullopt));
}

}  // namespace

TEST(DslParse, Examples) {
  const Script s = parse("let b = BF(2); milnor(b);");
  ASSERT_EQ(s.statements.size(), 2u);
  EXPECT_EQ(std::get<Let>(s.statements[0]).name, "b");
  EXPECT_EQ(std::get<Command>(s.statements[1]).kind, Command::Kind::Milnor);

  const Script c = parse("let c = proj(CP(2), chern(1 + y, 3)); milnor(c);");
  EXPECT_EQ(parse(print(c)), c);
  const auto& e = std::get<Let>(c.statements[0]).expr;
  EXPECT_EQ(e.kind, Expr::Kind::Proj);
  EXPECT_EQ(e.rank, 3);
  EXPECT_EQ(print(*e.chern), "1 + y");
}

TEST(DslParse, CommentsUnicodeMinusAndBareLists) {
  const Script a = parse("# comment\nmilnor(proj(BF(2), lines(t1 − t2, 0))); # trailing\n");
  const Script b = parse("milnor(proj(BF(2), lines([t1 - t2, 0])));");
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse("milnor(BFbundle(BF(1), 0, t1, 0));"), parse("milnor(BFbundle(BF(1), [0, t1, 0]));"));
}

TEST(DslParse, PrinterPrecedence) {
  const auto poly_of = [](const std::string& text) {
    return *std::get<Command>(parse("dual_milnor(CP(1), " + text + ");").statements[0]).poly;
  };
  EXPECT_EQ(print(poly_of("(a + b) * c")), "(a + b)*c");
  EXPECT_EQ(print(poly_of("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(print(poly_of("a - b - c")), "a - b - c");
  EXPECT_EQ(print(poly_of("-(x^2)")), "-x^2");
  EXPECT_EQ(print(poly_of("(-x)^2")), "(-x)^2");
  EXPECT_EQ(print(poly_of("(x^2)^3")), "(x^2)^3");
}

TEST(DslErrors, KindsAndPositions) {
  auto e = parse_error("let x = X(2,3); let y = Y(2,3); blowup_milnup(x,y);");
  EXPECT_EQ(e.kind(), ErrorKind::Unbound);
  EXPECT_EQ(e.pos().line, 1);
  EXPECT_EQ(e.pos().col, 33);
  EXPECT_STREQ(e.what(), "1:33: unbound-name error: unknown command 'blowup_milnup'");

  e = parse_error("milnor(X(2));");
  EXPECT_EQ(e.kind(), ErrorKind::Arity);
  EXPECT_EQ(e.pos().col, 11);

  e = parse_error("milnor(b);");
  EXPECT_EQ(e.kind(), ErrorKind::Unbound);
  EXPECT_EQ(e.pos().col, 8);

  e = parse_error("let a = CP(1);\nlet a = CP(2);");
  EXPECT_EQ(e.kind(), ErrorKind::Syntax);
  EXPECT_EQ(e.pos().line, 2);
  EXPECT_EQ(e.pos().col, 5);

  e = parse_error("milnor(CP(1)) $");
  EXPECT_EQ(e.kind(), ErrorKind::Lexical);
  EXPECT_EQ(e.pos().col, 15);

  e = parse_error("milnor(CP(1))");
  EXPECT_EQ(e.kind(), ErrorKind::Syntax);

  e = parse_error("milnor(frob(1));");
  EXPECT_EQ(e.kind(), ErrorKind::Unbound);

  e = parse_error("milnor(proj(CP(1), chern(1 + y)));");
  EXPECT_EQ(e.kind(), ErrorKind::Arity);

  EXPECT_EQ(to_string(ErrorKind::Lexical), "lexical");
  EXPECT_EQ(to_string(ErrorKind::Arity), "arity");
}

TEST(DslRun, Examples) {
  EXPECT_EQ(value_of("milnor(BF(3));"), "2");
  EXPECT_EQ(value_of("todd(X(2,2));"), "1");
  EXPECT_EQ(value_of("blowup_milnor(X(2,2), Y(2,2));"), "-10");
  EXPECT_EQ(value_of("chern_number(CP(2), [1,1]);"), "9");
  EXPECT_EQ(value_of("dual_milnor(product(CP(2), CP(3)), y + y');"), "-10");
  EXPECT_EQ(value_of("let c = proj(CP(2), chern(1 + y, 3)); milnor(c);"),
            value_of("milnor(proj(CP(2), lines(y, 0, 0)));"));
}

TEST(DslRun, ResultsCarryStatementIndexAndArgs) {
  const auto rs = run(parse("let b = BF(3);\nmilnor(b);\nchern_number(CP(2), [2]);\n"));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].statement, 2u);
  EXPECT_EQ(rs[0].command, "milnor");
  EXPECT_EQ(rs[0].args, (std::vector<std::string>{"b"}));
  EXPECT_EQ(rs[1].args, (std::vector<std::string>{"CP(2)", "[2]"}));
  EXPECT_EQ(rs[1].value, ExactScalar(3));
}

TEST(DslRun, EvalErrors) {
  try {
    run(parse("milnor(CP(1));\nmilnor(proj(CP(2), lines(q, 0)));"));
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.statement(), 2u);
    EXPECT_NE(std::string(e.what()).find("available: y"), std::string::npos) << e.what();
  }
  EXPECT_THROW(run(parse("milnor(X(3,2));")), EvalError);
  EXPECT_THROW(run(parse("milnor(CP(25));")), EvalError);
  EXPECT_THROW(run(parse("chern_number(CP(2), [1]);")), EvalError);
  EXPECT_THROW(run(parse("blowup_milnor(CP(2), CP(3));")), EvalError);
}

TEST(DslProperties, ParsePrintRoundTrip) {
  ScriptGen g(909);
  for (int c = 0; c < kCases; ++c) {
    const Script s = g.syntactic();
    const std::string text = print(s);
    Script back;
    ASSERT_NO_THROW(back = parse(text)) << c << "\n" << text;
    ASSERT_EQ(back, s) << c << "\n" << text;
    ASSERT_EQ(print(back), text) << c;
  }
}

TEST(DslProperties, ReportsAreDeterministic) {
  ScriptGen g(1010);
  for (int c = 0; c < kCases; ++c) {
    const Script s = g.valuable();
    const std::string first = report_text(s);
    ASSERT_EQ(report_text(s), first) << c;
    ASSERT_EQ(report_text(parse(print(s))), first) << c << "\n" << print(s);
  }
}
