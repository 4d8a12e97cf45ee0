#include "unicob/report.hpp"

namespace unicob {

Json to_json(const ExactScalar& v) { return v.to_string(); }
Json to_json(const mpz_class& v) { return v.get_str(); }

Json to_json(const GeneratorReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["m_n"] = to_json(r.m_n);
  j["gcd"] = to_json(r.gcd);
  j["pass"] = r.pass;
  Json values = Json::array();
  for (const auto& [ij, v] : r.a_values) values.push_back({{"i", ij.first}, {"j", ij.second}, {"a", to_json(v)}});
  j["a_values"] = values;

  Json diag = Json::object();
  if (!r.engine_diagnostics.empty()) {
    Json eng = Json::array();
    for (const auto& [ij, v] : r.engine_diagnostics) {
      eng.push_back({{"i", ij.first}, {"j", ij.second}, {"a_engine", to_json(v)}});
    }
    diag["engine_family_entries"] = eng;
  }
  if (r.row_one) {
    diag["row_one"] = {{"n", r.row_one->n},
                       {"closed_form", to_json(r.row_one->closed)},
                       {"engine", to_json(r.row_one->engine)},
                       {"agree", r.row_one->agree()}};
  }
  j["diagnostics"] = diag;

  Json witness = Json::object();
  if (r.prime_power) {
    const auto& w = *r.prime_power;
    witness["prime_power"] = {{"p", w.p},
                              {"s", w.s},
                              {"i", w.i},
                              {"j", w.j},
                              {"a", to_json(w.a_value)},
                              {"gcd_with_a0", to_json(w.gcd)},
                              {"binomial", to_json(w.binomial)},
                              {"a_mod_p2", w.residue_mod_p2},
                              {"pass", w.pass}};
  }
  if (!r.digit_cases.empty()) {
    Json cases = Json::array();
    for (const auto& w : r.digit_cases) {
      cases.push_back({{"q", w.q},
                       {"case", w.choice.case_id},
                       {"j", w.choice.j},
                       {"a", to_json(w.a_value)},
                       {"residue", w.residue},
                       {"expected_residues", w.expected},
                       {"pass", w.pass}});
    }
    witness["digit_cases"] = cases;
  }
  j["witness"] = witness;
  return j;
}

Json to_json(const LemmaRecord& r) {
  Json j;
  j["lemma"] = lemma_name(r.id);
  Json params;
  params["p"] = r.params.p;
  if (r.params.r) params["r"] = *r.params.r;
  if (r.params.a) params["a"] = *r.params.a;
  if (r.params.s) params["s"] = *r.params.s;
  j["params"] = params;
  j["modulus"] = r.lhs ? Json(r.lhs->modulus()) : Json(nullptr);
  j["lhs"] = r.lhs ? Json(std::to_string(r.lhs->value())) : Json(nullptr);
  j["rhs"] = r.rhs ? Json(std::to_string(r.rhs->value())) : Json(nullptr);
  j["holds"] = r.holds;
  j["supported"] = r.supported;
  if (!r.note.empty()) j["note"] = r.note;
  // Out-of-domain records carry no verdict.
  if (r.supported) j["pass"] = r.pass();
  return j;
}

Json to_json(const TableRow& r) {
  Json j;
  j["i"] = r.i;
  j["j"] = r.j;
  j["a_closed"] = to_json(r.closed);
  j["a_engine"] = r.engine ? to_json(*r.engine) : Json(nullptr);
  if (r.engine) j["agree"] = *r.engine == r.closed;
  return j;
}

Json to_json(const dsl::CommandResult& r) {
  return {{"statement", r.statement}, {"command", r.command}, {"args", r.args}, {"value", to_json(r.value)}};
}

Json make_report(const std::string& command, Json inputs, Json results, std::optional<long long> timing_ms) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["timing_ms"] = timing_ms ? Json(*timing_ms) : Json(nullptr);
  return j;
}

bool all_pass(const Json& report) {
  if (report.is_object()) {
    for (const auto& [key, value] : report.items()) {
      if (key == "pass" && value.is_boolean() && !value.get<bool>()) return false;
      if (!all_pass(value)) return false;
    }
  } else if (report.is_array()) {
    for (const auto& v : report) {
      if (!all_pass(v)) return false;
    }
  }
  return true;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::string out = "i\tj\ta_closed\ta_engine\n";
  for (const auto& r : rows) {
    out += std::to_string(r.i) + "\t" + std::to_string(r.j) + "\t" + r.closed.get_str() + "\t" +
           (r.engine ? r.engine->get_str() : "") + "\n";
  }
  return out;
}

}  // namespace unicob
