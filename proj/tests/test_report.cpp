#include "unicob/report.hpp"

#include <gtest/gtest.h>

using namespace unicob;

TEST(Report, Envelope) {
  const Json r = make_report("selftest", Json{{"k", 1}}, Json::array(), std::nullopt);
  EXPECT_EQ(r["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(r["command"], "selftest");
  EXPECT_TRUE(r["timing_ms"].is_null());
  EXPECT_EQ(make_report("x", {}, {}, 12)["timing_ms"], 12);
  const std::string text = dump_report(r);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"command\""), text.find("\"inputs\""));
}

TEST(Report, AllPassIsRecursive) {
  Json r = make_report("x", {}, Json::array({Json{{"pass", true}}, Json{{"w", Json{{"pass", true}}}}}), std::nullopt);
  EXPECT_TRUE(all_pass(r));
  r["results"][1]["w"]["pass"] = false;
  EXPECT_FALSE(all_pass(r));
}

TEST(Report, ExactNumbersAreStrings) {
  const Json g = to_json(verify_generator_degree(8, false));
  EXPECT_EQ(g["gcd"], "3");
  EXPECT_EQ(g["m_n"], "3");
  EXPECT_EQ(g["witness"]["prime_power"]["a"], "-84");
  EXPECT_TRUE(g["pass"].get<bool>());
  EXPECT_EQ(to_json(ExactScalar(mpz_class(1), mpz_class(-3))), "-1/3");
}

TEST(Report, UnsupportedLemmaHasNoVerdict) {
  const Json rec = to_json(verify_lemma(LemmaId::Lm32, {.p = 2, .s = 2}));
  EXPECT_FALSE(rec.contains("pass"));
  EXPECT_FALSE(rec["supported"].get<bool>());
  EXPECT_TRUE(all_pass(rec));
  const Json ok = to_json(verify_lemma(LemmaId::PMain, {.p = 3, .s = 2}));
  EXPECT_TRUE(ok["pass"].get<bool>());
  EXPECT_EQ(ok["lhs"], "3");
  EXPECT_EQ(ok["modulus"], 9);
}

TEST(Report, TableTsv) {
  const auto rows = a_table(3, 0, Exec::Serial);
  EXPECT_EQ(table_tsv(rows), "i\tj\ta_closed\ta_engine\n0\t2\t3\t\n1\t1\t-3\t\n0\t3\t4\t\n1\t2\t2\t\n");
  const Json row = to_json(a_table(4, 4, Exec::Serial).back());
  EXPECT_TRUE(row.contains("agree"));
  EXPECT_FALSE(row.contains("pass"));
}
