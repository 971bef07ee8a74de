// Copyright 2026 The grm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// grm: command-line front end for the grm library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grm/arrange.hpp"
#include "grm/errors.hpp"
#include "grm/groebner.hpp"
#include "grm/grmcode.hpp"
#include "grm/lemma.hpp"
#include "grm/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kBudget = 3, kIterationCap = 4 };

struct Global {
  std::string format = "json";
  std::string out;
  std::uint64_t budget = grm::kDefaultBudget;
  std::uint64_t seed = 42;
  bool timing = false;
};

int exit_for(grm::ErrorCode code) {
  switch (code) {
    case grm::ErrorCode::kBudgetExceeded: return kBudget;
    case grm::ErrorCode::kIterationCapExceeded: return kIterationCap;
    default: return kInvalid;
  }
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Flattens nested objects into prefix_key columns; arrays join with ';'.
void flatten(const json& obj, const std::string& prefix, std::vector<std::string>& keys,
             std::vector<std::string>& values) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "_" + it.key();
    if (it->is_object()) {
      flatten(*it, key, keys, values);
    } else if (it->is_array()) {
      std::string joined;
      for (const auto& e : *it) joined += (joined.empty() ? "" : ";") + scalar(e);
      keys.push_back(key);
      values.push_back(joined);
    } else {
      keys.push_back(key);
      values.push_back(scalar(*it));
    }
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const std::vector<json>& rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> keys;
    std::vector<std::string> values;
    flatten(rows[r], "", keys, values);
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
      out += '\n';
    };
    if (r == 0) line(keys);
    line(values);
  }
  return out;
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw grm::Error(grm::ErrorCode::kParameterOutOfRange, "cannot write " + g.out);
  f << text;
}

// A single JSON document, or CSV with one row per entry of `rows`.
void emit_rows(const Global& g, json doc, const std::vector<json>& rows) {
  emit(g, g.format == "csv" ? to_csv(rows) : doc.dump(2) + "\n");
}

void emit_object(const Global& g, const json& doc) { emit_rows(g, doc, {doc}); }

std::vector<grm::MultiPoly> read_poly_file(const std::string& path, int n,
                                           const grm::FieldPtr& field) {
  std::ifstream in(path);
  if (!in) throw grm::Error(grm::ErrorCode::kSyntaxError, "cannot open " + path);
  std::vector<grm::MultiPoly> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(grm::parse_poly(line, n, field));
    } catch (const grm::Error& e) {
      throw grm::Error(e.code(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw grm::Error(grm::ErrorCode::kSyntaxError, path + ": no polynomials");
  return out;
}

json w2_json(int q, int n, int d, json& regime) {
  try {
    const grm::SecondWeightResult w2 = grm::second_weight(q, n, d);
    regime = std::string(grm::regime_tag(w2.regime));
    if (w2.exact) return {{"kind", "exact"}, {"value", w2.value()}};
    return {{"kind", "interval"}, {"lo", w2.lo}, {"hi", w2.hi}};
  } catch (const grm::Error& e) {
    if (e.code() != grm::ErrorCode::kRegimeNotCovered) throw;
    regime = "not-covered";
    return nullptr;
  }
}

int cmd_params(const Global& g, int q, int n, int d) {
  const grm::GrmParams p = grm::grm_params(q, n, d);
  json regime;
  json w2 = w2_json(q, n, d, regime);
  json doc = {{"q", p.q}, {"n", p.n}, {"d", p.d},   {"a", p.a},   {"b", p.b},
              {"m", p.m}, {"k", p.k}, {"w1", p.w1}, {"w2", w2}, {"regime", regime}};
  // CSV keeps the same columns whatever the regime.
  json row = doc;
  row.erase("regime");
  const bool exact = !w2.is_null() && w2["kind"] == "exact";
  row["w2"] = {{"kind", w2.is_null() ? json(nullptr) : w2["kind"]},
               {"value", exact ? w2["value"] : json(nullptr)},
               {"lo", w2.is_null() ? json(nullptr) : (exact ? w2["value"] : w2["lo"])},
               {"hi", w2.is_null() ? json(nullptr) : (exact ? w2["value"] : w2["hi"])}};
  row["regime"] = regime;
  emit_rows(g, doc, {row});
  return kOk;
}

int cmd_arrangements(const Global& g, int q, int n, std::optional<int> d,
                     const std::vector<int>& blocks, bool search, bool verify) {
  if (verify) {
    json rows = json::array();
    std::vector<json> csv_rows;
    bool ok = true;
    for (const grm::ArrangementType& t : grm::enumerate_types(q, n, n * (q - 1))) {
      const auto grid = static_cast<std::int64_t>(grm::n_points_grid(grm::realize(t), g.budget));
      const std::int64_t formula = grm::n_points_type(t);
      ok &= grid == formula;
      json row = {{"type", t.to_string()},
                  {"n_points", formula},
                  {"n_points_grid", grid},
                  {"pass", grid == formula}};
      rows.push_back(row);
      csv_rows.push_back(row);
    }
    emit_rows(g, {{"q", q}, {"n", n}, {"passed", ok}, {"types", rows}}, csv_rows);
    return ok ? kOk : kCheckFailed;
  }
  if (search) {
    if (!d) throw grm::Error(grm::ErrorCode::kParameterOutOfRange, "--search needs -d");
    const grm::BestNonMaximal best = grm::best_nonmaximal_type(q, n, *d);
    const grm::N2PrimeClosedForm cf = grm::n2prime_closed_form(q, n, *d);
    emit_object(g, {{"q", q},
                    {"n", n},
                    {"d", *d},
                    {"maximal_type", grm::maximal_type(q, n, *d).to_string()},
                    {"type", best.type.to_string()},
                    {"shape", best.shape ? json(grm::exchange_name(*best.shape)) : json(nullptr)},
                    {"n2prime", best.n2prime},
                    {"w2prime", best.w2prime},
                    {"closed_form_n2prime", cf.n2prime},
                    {"attained_by", grm::exchange_name(cf.attained_by)}});
    return best.n2prime == cf.n2prime ? kOk : kCheckFailed;
  }
  if (blocks.empty()) {
    throw grm::Error(grm::ErrorCode::kParameterOutOfRange,
                     "one of --blocks, --search or --verify is required");
  }
  const grm::ArrangementType t(q, n, blocks);
  const std::int64_t formula = grm::n_points_type(t);
  const auto grid = static_cast<std::int64_t>(grm::n_points_grid(grm::realize(t), g.budget));
  emit_object(g, {{"q", q},
                  {"n", n},
                  {"type", t.to_string()},
                  {"hyperplanes", t.hyperplanes()},
                  {"n_points", formula},
                  {"n_points_grid", grid},
                  {"weight", grm::ipow(q, n) - formula}});
  return grid == formula ? kOk : kCheckFailed;
}

int cmd_groebner(const Global& g, const std::string& path, int q, int n,
                 const std::string& action) {
  const grm::FieldPtr field = grm::make_field_ptr(q);
  const grm::PolyBasis input(read_poly_file(path, n, field));
  json doc = {{"q", q}, {"n", n}, {"action", action}};
  if (action == "points") {
    doc["points"] = grm::rational_points(input, g.budget);
    emit_object(g, doc);
    return kOk;
  }
  const grm::VarietyFootprint vf = grm::variety_footprint(input, {}, g.budget);
  if (action == "basis") {
    json basis = json::array();
    json lms = json::array();
    for (const grm::MultiPoly& f : vf.groebner_basis.polys()) {
      basis.push_back(f.to_string());
      lms.push_back(f.leading_monomial().to_string());
    }
    doc["basis"] = basis;
    doc["leading_monomials"] = lms;
    emit_object(g, doc);
    return kOk;
  }
  const bool equal = vf.footprint.delta_size == vf.points;
  doc["delta"] = vf.footprint.delta_size;
  doc["points"] = vf.points;
  doc["equal"] = equal;
  emit_object(g, doc);
  return equal ? kOk : kCheckFailed;
}

int cmd_poly(const Global& g, const std::string& path, int q, int n) {
  const grm::FieldPtr field = grm::make_field_ptr(q);
  json rows = json::array();
  std::vector<json> csv_rows;
  for (const grm::MultiPoly& f : read_poly_file(path, n, field)) {
    const grm::MultiPoly r = grm::reduce_poly(f);
    const grm::HypersurfaceCount c = grm::count_points(f, g.budget);
    json row = {{"poly", f.to_string()},
                {"reduced", r.to_string()},
                {"degree", r.degree() ? json(*r.degree()) : json(nullptr)},
                {"zeros", c.zeros},
                {"weight", c.weight}};
    rows.push_back(row);
    csv_rows.push_back(row);
  }
  emit_rows(g, {{"q", q}, {"n", n}, {"polys", rows}}, csv_rows);
  return kOk;
}

int cmd_lemma(const Global& g, int q, int n, int d) {
  const grm::LemmaInstance inst = grm::make_lemma_instance(q, n, d);
  const grm::BruteForceMin bf = grm::brute_force_min(inst, g.budget);
  const std::int64_t table = grm::closed_form_mu(inst);
  json shape;
  json witness;
  try {
    const grm::MinimizerStructure s = grm::check_minimizer_structure(inst, g.budget);
    shape = s.shape;
    witness = grm::format_alpha(s.witness);
  } catch (const grm::Error& e) {
    if (e.code() != grm::ErrorCode::kStructureMismatch) throw;
    std::cerr << e.what() << "\n";
  }
  emit_object(g, {{"q", q},
                  {"n", n},
                  {"d", d},
                  {"a", inst.a},
                  {"b", inst.b},
                  {"budget", inst.budget},
                  {"v_size", bf.v_size},
                  {"mu", bf.mu},
                  {"closed_form_mu", table},
                  {"minimizers", bf.minimizers.size()},
                  {"truncated", bf.truncated},
                  {"first_minimizer", grm::format_alpha(bf.minimizers.front())},
                  {"shape", shape},
                  {"witness", witness},
                  {"pass", bf.mu == table && !shape.is_null()}});
  return bf.mu == table && !shape.is_null() ? kOk : kCheckFailed;
}

// Lines "q n d mu"; '#' starts a comment. Cells not listed use the closed form.
std::function<std::int64_t(const grm::LemmaInstance&)> load_mu_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw grm::Error(grm::ErrorCode::kSyntaxError, "cannot open " + path);
  std::map<std::tuple<int, int, int>, std::int64_t> table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int q = 0;
    int n = 0;
    int d = 0;
    std::int64_t mu = 0;
    if (!(fields >> q >> n >> d >> mu)) {
      throw grm::Error(grm::ErrorCode::kSyntaxError,
                       path + ":" + std::to_string(lineno) + ": expected 'q n d mu'");
    }
    table[{q, n, d}] = mu;
  }
  return [table](const grm::LemmaInstance& inst) {
    const auto it = table.find({inst.q, inst.n, inst.d});
    return it == table.end() ? grm::closed_form_mu(inst) : it->second;
  };
}

int cmd_verify(const Global& g, const std::string& suite, const std::vector<int>& qs,
               const std::vector<int>& ns, const std::vector<int>& ds,
               std::optional<std::size_t> samples, const std::string& mu_table) {
  grm::SweepConfig config;
  if (!qs.empty()) config.qs = qs;
  if (!ns.empty()) config.ns = ns;
  if (!ds.empty()) config.ds = ds;
  config.seed = g.seed;
  config.budget = g.budget;
  config.samples = samples;
  if (!mu_table.empty()) config.mu_table = load_mu_table(mu_table);

  const auto start = std::chrono::steady_clock::now();
  const grm::SuiteResult result = grm::run_suite(suite, config);
  std::optional<std::int64_t> elapsed;
  if (g.timing) {
    elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  }
  emit(g, g.format == "csv" ? grm::to_csv(result) : grm::to_json(result, elapsed));
  for (const grm::CheckRecord& r : result.records) {
    if (r.pass) continue;
    std::cerr << "FAIL " << r.suite << " " << r.task << " q=" << r.q << " n=" << r.n
              << (r.d ? " d=" + std::to_string(*r.d) : "") << ": " << r.computed
              << " != " << r.oracle << "\n";
  }
  std::cerr << result.records.size() << " checks, " << result.failures() << " failed\n";
  return result.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Reed-Muller code parameters, arrangements and footprints"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--budget", g.budget, "Maximum grid size for direct enumeration");
  app.add_option("--seed", g.seed, "Seed for sampling suites");
  app.add_flag("--timing", g.timing, "Include elapsed time in verify reports");

  int q = 0;
  int n = 0;
  int d = 0;
  std::optional<int> opt_d;

  auto* params = app.add_subcommand("params", "Code parameters and second weight");
  params->add_option("-q,--q", q, "Field size")->required();
  params->add_option("-n,--n", n, "Number of variables")->required();
  params->add_option("-d,--d", d, "Degree")->required();

  std::vector<int> blocks;
  bool search = false;
  bool verify = false;
  auto* arr = app.add_subcommand("arrangements", "Hyperplane arrangement point counts");
  arr->add_option("-q,--q", q, "Field size")->required();
  arr->add_option("-n,--n", n, "Number of variables")->required();
  arr->add_option("-d,--d", opt_d, "Degree (for --search)");
  arr->add_option("--blocks", blocks, "Block sizes, comma separated")->delimiter(',');
  arr->add_flag("--search", search, "Best non-maximal type for degree d");
  arr->add_flag("--verify", verify, "Formula against grid for every type");

  std::string path;
  std::string action = "footprint";
  auto* gb = app.add_subcommand("groebner", "Groebner basis, footprint and points of a file");
  gb->add_option("file", path, "Polynomial file")->required();
  gb->add_option("-q,--q", q, "Field size")->required();
  gb->add_option("-n,--n", n, "Number of variables")->required();
  gb->add_option("--action", action, "basis, footprint or points")
      ->check(CLI::IsMember({"basis", "footprint", "points"}));

  auto* poly = app.add_subcommand("poly", "Zero count and weight of each polynomial in a file");
  poly->add_option("file", path, "Polynomial file")->required();
  poly->add_option("-q,--q", q, "Field size")->required();
  poly->add_option("-n,--n", n, "Number of variables")->required();

  auto* lemma = app.add_subcommand("lemma", "Brute-force and closed-form mu for one instance");
  lemma->add_option("-q,--q", q, "Field size")->required();
  lemma->add_option("-n,--n", n, "Number of variables")->required();
  lemma->add_option("-d,--d", d, "Degree")->required();

  std::string suite = "all";
  std::vector<int> qs;
  std::vector<int> ns;
  std::vector<int> ds;
  std::optional<std::size_t> samples;
  std::string mu_table;
  auto* ver = app.add_subcommand("verify", "Run a verification suite over a sweep grid");
  ver->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"lemma", "arrangements", "dimension", "footprint", "sampling",
                             "all"}));
  ver->add_option("-q,--q", qs, "Field sizes")->delimiter(',');
  ver->add_option("-n,--n", ns, "Variable counts")->delimiter(',');
  ver->add_option("-d,--d", ds, "Degrees (default: every valid degree)")->delimiter(',');
  ver->add_option("--samples", samples, "Samples per cell");
  ver->add_option("--mu-table", mu_table, "File of 'q n d mu' lines overriding the mu table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*params) return cmd_params(g, q, n, d);
    if (*arr) return cmd_arrangements(g, q, n, opt_d, blocks, search, verify);
    if (*gb) return cmd_groebner(g, path, q, n, action);
    if (*poly) return cmd_poly(g, path, q, n);
    if (*lemma) return cmd_lemma(g, q, n, d);
    if (*ver) return cmd_verify(g, suite, qs, ns, ds, samples, mu_table);
  } catch (const grm::Error& e) {
    std::cerr << "grm: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "grm: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
