// unicob: characteristic numbers of tower varieties and generator checks.

#include "unicob/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using unicob::Json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Options {
  std::string out;
  std::string format = "json";
  bool no_timing = false;
  int threads = 0;
  int max_degree = 0;
  int engine_cap = 12;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  int max_s = 3;
  std::string file;
};

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + opt.out);
  f << text;
}

std::optional<long long> timing(const Options& opt, const Stopwatch& sw) {
  if (opt.no_timing) return std::nullopt;
  return sw.ms();
}

int finish(const Options& opt, const Json& report) {
  emit(opt, unicob::dump_report(report));
  return unicob::all_pass(report) ? 0 : kExitFail;
}

int cmd_run(const Options& opt) {
  std::ifstream in(opt.file, std::ios::binary);
  if (!in) {
    std::cerr << "unicob: cannot read " << opt.file << "\n";
    return kExitError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Stopwatch sw;
  try {
    const auto script = unicob::dsl::parse(buf.str());
    const auto results = unicob::dsl::run(script);
    Json rs = Json::array();
    for (const auto& r : results) rs.push_back(unicob::to_json(r));
    Json inputs{{"file", opt.file}, {"statements", script.statements.size()}};
    return finish(opt, unicob::make_report("run", inputs, rs, timing(opt, sw)));
  } catch (const unicob::dsl::ParseError& e) {
    std::cerr << opt.file << ":" << e.what() << "\n";
  } catch (const unicob::dsl::EvalError& e) {
    std::cerr << opt.file << ": " << e.what() << "\n";
  }
  return kExitError;
}

int cmd_table(const Options& opt) {
  const int max_degree = opt.max_degree > 0 ? opt.max_degree : 12;
  Stopwatch sw;
  const auto rows = unicob::a_table(max_degree, opt.engine_cap, unicob::Exec::Parallel);
  if (opt.format == "tsv") {
    emit(opt, unicob::table_tsv(rows));
    return 0;
  }
  Json rs = Json::array();
  for (const auto& r : rows) rs.push_back(unicob::to_json(r));
  Json inputs{{"max_degree", max_degree}, {"engine_cap", opt.engine_cap}};
  return finish(opt, unicob::make_report("table", inputs, rs, timing(opt, sw)));
}

int cmd_verify_generators(const Options& opt) {
  const int max_degree = opt.max_degree > 0 ? opt.max_degree : 30;
  if (max_degree < 2) {
    std::cerr << "unicob: --max-degree must be at least 2\n";
    return kExitError;
  }
  Stopwatch sw;
  const auto reports =
      unicob::verify_generators(2, max_degree, opt.engine_cap > 0, opt.engine_cap, unicob::Exec::Parallel);
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(unicob::to_json(r));
  Json inputs{{"max_degree", max_degree}, {"engine_cap", opt.engine_cap}};
  return finish(opt, unicob::make_report("verify-generators", inputs, rs, timing(opt, sw)));
}

int cmd_verify_congruences(const Options& opt) {
  Stopwatch sw;
  const auto jobs = unicob::congruence_jobs(opt.primes, opt.max_s);
  const auto records = unicob::run_congruences(jobs, unicob::Exec::Parallel);
  Json rs = Json::array();
  for (const auto& r : records) rs.push_back(unicob::to_json(r));
  Json inputs{{"primes", opt.primes}, {"max_s", opt.max_s}};
  return finish(opt, unicob::make_report("verify-congruences", inputs, rs, timing(opt, sw)));
}

Json check(const std::string& name, const std::string& expected, const std::string& actual) {
  return {{"check", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}};
}

int cmd_selftest(const Options& opt) {
  using namespace unicob;
  Stopwatch sw;
  Json rs = Json::array();
  rs.push_back(check("milnor BF(3)", "2", milnor_number(bounded_flag(3)).to_string()));
  rs.push_back(check("milnor X(2,3)", "20", milnor_number(x_variety(2, 3)).to_string()));
  rs.push_back(check("milnor CP(4)", "5", milnor_number(projective_space(4)).to_string()));
  rs.push_back(check("todd X(2,2)", "1", todd_genus(x_variety(2, 2)).to_string()));
  rs.push_back(check("blowup_milnor X(2,2) Y(2,2)", "-10",
                     blowup_milnor(x_variety(2, 2), y_variety(2, 2)).to_string()));
  rs.push_back(check("a_closed_form(3,5)", "-84", a_closed_form(3, 5).get_str()));
  rs.push_back(check("gcd of degree 8 family", "3", verify_generator_degree(8, false).gcd.get_str()));
  rs.push_back(check("pmain_sum(3,2)", "84", pmain_sum(3, 2).get_str()));
  rs.push_back(check("granville binom(8,5) mod 9", "2", std::to_string(granville_residue(8, 5, 3, 2).value())));

  const std::string src = "let c = proj(CP(2), chern(1 + y, 3));\nmilnor(c);\n";
  const auto script = dsl::parse(src);
  rs.push_back(check("parse/print round trip", "true", dsl::parse(dsl::print(script)) == script ? "true" : "false"));
  const bool grids_match = milnor_grid_x(7, Exec::Serial) == milnor_grid_x(7, Exec::Parallel);
  rs.push_back(check("serial and parallel grids agree", "true", grids_match ? "true" : "false"));
  return finish(opt, make_report("selftest", Json::object(), rs, timing(opt, sw)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic numbers of tower varieties, cobordism generator checks and binomial congruences"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--out", opt.out, "Write the report to this file instead of stdout");
  app.add_option("--format", opt.format, "Output format (tsv only applies to table)")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--no-timing", opt.no_timing, "Emit timing_ms as null so reports are byte-reproducible");
  app.add_option("--threads", opt.threads, "OpenMP threads (default: runtime default)")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Evaluate a .tow script");
  run->add_option("file", opt.file, "Script path")->required();

  auto* table = app.add_subcommand("table", "Print the a_{i,j} table");
  auto* gens = app.add_subcommand("verify-generators", "Check the generator gcd in each degree");
  auto* congr = app.add_subcommand("verify-congruences", "Check the binomial congruence lemmas");
  auto* self = app.add_subcommand("selftest", "Quick internal consistency checks");

  for (auto* sub : {table, gens}) {
    sub->add_option("--max-degree", opt.max_degree, "Largest degree n = i + j")->check(CLI::PositiveNumber);
    sub->add_option("--engine-cap", opt.engine_cap, "Use the engine for i + j up to this (0 disables)")
        ->check(CLI::NonNegativeNumber);
  }
  congr->add_option("--primes", opt.primes, "Comma-separated primes")->delimiter(',');
  congr->add_option("--max-s", opt.max_s, "Largest exponent s")->check(CLI::Range(2, 8));

  for (auto* sub : {run, table, gens, congr, self}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  unicob::set_thread_count(opt.threads);

  try {
    if (*run) return cmd_run(opt);
    if (*table) return cmd_table(opt);
    if (*gens) return cmd_verify_generators(opt);
    if (*congr) return cmd_verify_congruences(opt);
    if (*self) return cmd_selftest(opt);
  } catch (const std::exception& e) {
    std::cerr << "unicob: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
