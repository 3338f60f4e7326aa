#pragma once

// Command-line campaigns: verify, bounds, lambda, search.
// Exit codes: 0 all checks as expected, 2 a mismatch or violation, 1 usage or
// runtime error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectra/bounds.hpp"
#include "spectra/search.hpp"
#include "spectra/verify.hpp"

namespace spectra::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CampaignConfig {
  std::string command;
  std::string family;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<int> params;
  std::string objective = "lambda1";
  std::optional<double> tol;
  int seeds = 1;
  long budget = 100000;
  std::string out_path;
  std::string format = "json";
  std::set<int> expect_mismatch;
  std::optional<int> cap;
  bool timing = true;

  json to_json() const {
    json j;
    j["command"] = command;
    j["family"] = family;
    j["n_range"] = {n_lo, n_hi};
    if (!params.empty()) j["params"] = params;
    j["objective"] = objective;
    if (tol) j["tol"] = *tol;
    j["seeds"] = seeds;
    j["budget"] = budget;
    j["format"] = format;
    j["expect_mismatch"] = std::vector<int>(expect_mismatch.begin(), expect_mismatch.end());
    if (cap) j["cap"] = *cap;
    return j;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid integer for " + what + ": '" + s + "'");
  }
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_int(item, what));
  }
  return out;
}

// "A..B" or "K".
inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int k = parse_int(trim(s), "--n");
    return {k, k};
  }
  const int a = parse_int(trim(s.substr(0, dots)), "--n");
  const int b = parse_int(trim(s.substr(dots + 2)), "--n");
  if (a > b) throw UsageError("empty range --n " + s);
  return {a, b};
}

inline std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

inline void apply_setting(CampaignConfig& c, const std::string& key, const std::string& value) {
  if (key == "command") c.command = value;
  else if (key == "family") c.family = value;
  else if (key == "n") std::tie(c.n_lo, c.n_hi) = parse_range(value);
  else if (key == "params") c.params = parse_int_list(value, "params");
  else if (key == "objective") c.objective = value;
  else if (key == "tol") {
    try {
      c.tol = std::stod(value);
    } catch (const std::exception&) {
      throw UsageError("invalid tol: " + value);
    }
  } else if (key == "seeds") c.seeds = parse_int(value, "seeds");
  else if (key == "budget") c.budget = parse_int(value, "budget");
  else if (key == "out") c.out_path = value;
  else if (key == "format") c.format = value;
  else if (key == "expect_mismatch" || key == "expect-mismatch") {
    auto v = parse_int_list(value, "expect-mismatch");
    c.expect_mismatch = {v.begin(), v.end()};
  } else if (key == "cap") c.cap = parse_int(value, "cap");
  else if (key == "timing") c.timing = value != "false" && value != "0" && value != "off";
  else throw UsageError("unknown config key: " + key);
}

}  // namespace detail

inline void validate(const CampaignConfig& c) {
  static const std::set<std::string> commands{"verify", "bounds", "lambda", "search"};
  if (!commands.count(c.command)) throw UsageError("unknown command '" + c.command + "'");
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  objective_from_string(c.objective);
  if (c.command == "verify") {
    const auto conj = conjecture_from_string(c.family);
    const int cap = c.cap.value_or(default_cap(conj));
    if (c.n_lo < min_vertices(conj) || c.n_hi > cap)
      throw UsageError("verify " + c.family + ": --n must lie in " + std::to_string(min_vertices(conj)) + ".." +
                       std::to_string(cap));
  } else if (c.command == "bounds") {
    const int cap = c.cap.value_or(kDefaultGenCap);
    if (c.n_lo < 1 || c.n_hi > cap) throw UsageError("bounds: --n must lie in 1.." + std::to_string(cap));
  } else if (c.command == "lambda") {
    FamilySpec{family_kind_from_string(c.family), c.params}.validate();
  } else {
    search_family_from_string(c.family);
    if (c.seeds < 1) throw UsageError("search: --seeds must be >= 1");
    if (c.budget < 1) throw UsageError("search: --budget must be >= 1");
    if (c.n_lo < 3) throw UsageError("search: --n must be >= 3");
  }
}

// Parses argv. Settings from --config are applied first and then overridden
// by any flag given explicitly on the command line.
inline CampaignConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Extremal spectral graph theory verification toolkit", "spectra"};
  std::string command, family_pos, family_flag, n, params, objective, tol, seeds, budget, out, format, expect, config,
      cap;
  bool no_timing = false;
  app.add_option("command", command, "verify | bounds | lambda | search")->required();
  app.add_option("target", family_pos, "family tag (alternative to --family)");
  app.add_option("--family", family_flag, "family tag");
  app.add_option("--n", n, "vertex count K or inclusive range A..B");
  app.add_option("--params", params, "comma-separated family parameters");
  app.add_option("--objective", objective, "lambda1 | irregularity");
  app.add_option("--tol", tol, "tolerance");
  app.add_option("--seeds", seeds, "number of search seeds");
  app.add_option("--budget", budget, "exact evaluations per search trajectory");
  app.add_option("--out", out, "output file (stdout when omitted)");
  app.add_option("--format", format, "json | csv");
  app.add_option("--expect-mismatch", expect, "comma-separated n values where a mismatch is expected");
  app.add_option("--config", config, "key=value configuration file");
  app.add_option("--cap", cap, "override the enumeration size cap");
  app.add_flag("--no-timing", no_timing, "report runtime_ms as 0 for byte-stable output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (!family_pos.empty() && !family_flag.empty() && family_pos != family_flag)
    throw UsageError("conflicting family '" + family_pos + "' and --family '" + family_flag + "'");

  CampaignConfig c;
  if (!config.empty())
    for (const auto& [k, v] : detail::read_config_file(config)) detail::apply_setting(c, k, v);
  c.command = command;
  auto set = [&](const char* key, const std::string& v) {
    if (!v.empty()) detail::apply_setting(c, key, v);
  };
  set("family", family_pos.empty() ? family_flag : family_pos);
  set("n", n);
  set("params", params);
  set("objective", objective);
  set("tol", tol);
  set("seeds", seeds);
  set("budget", budget);
  set("out", out);
  set("format", format);
  set("expect_mismatch", expect);
  set("cap", cap);
  if (no_timing) c.timing = false;
  if (c.command == "lambda" && c.params.empty() && c.n_lo > 0 && c.n_lo == c.n_hi) c.params = {c.n_lo};
  if (c.command != "lambda" && c.n_lo == 0) throw UsageError(c.command + ": --n is required");
  validate(c);
  return c;
}

namespace detail {

inline json graph6_list(const std::vector<Graph>& graphs) {
  json a = json::array();
  for (const auto& g : graphs) a.push_back(graph6_encode(g));
  return a;
}

inline json edge_list(const std::vector<Edge>& edges) {
  json a = json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

struct Outcome {
  json results = json::array();
  bool mismatch = false;
};

inline Outcome run_verify(const CampaignConfig& c) {
  Outcome o;
  const auto conj = conjecture_from_string(c.family);
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = verify(conj, n, c.tol.value_or(kTieTol), c.cap);
    const auto& r = res.report;
    const bool expected_mismatch = c.expect_mismatch.count(n) > 0;
    json j;
    j["n"] = n;
    j["family"] = r.family;
    j["count"] = r.count;
    j["best_value"] = r.best_value;
    j["argmax_graph6"] = graph6_list(r.argmax_graphs);
    json forms = json::array();
    for (const auto& f : r.argmax) forms.push_back(f.bytes);
    j["argmax_canonical"] = forms;
    j["conjectured_graph6"] = canonical_form(conjectured_graph(conj, n)).bytes;
    j["matches_conjecture"] = r.matches_conjecture;
    j["expected_mismatch"] = expected_mismatch;
    j["escalated"] = r.escalated;
    bool as_expected = r.matches_conjecture != expected_mismatch;
    if (res.pineapple) {
      const auto& p = *res.pineapple;
      j["is_pineapple"] = p.is_pineapple;
      j["clique_size"] = p.clique_size;
      j["expected_clique_size"] = p.expected_clique;
      j["clique_matches_expected"] = p.is_pineapple && p.clique_size == p.expected_clique;
      j["m_star"] = p.m_star;
      j["best_pineapple_value"] = p.best_pineapple_value;
      j["dominates_pineapples"] = p.dominates_pineapples;
      as_expected = as_expected && p.dominates_pineapples;
    }
    j["as_expected"] = as_expected;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    j["runtime_ms"] = c.timing ? ms.count() : 0;
    o.mismatch = o.mismatch || !as_expected;
    o.results.push_back(std::move(j));
  }
  return o;
}

inline Outcome run_bounds(const CampaignConfig& c) {
  Outcome o;
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    GenOptions gen;
    gen.cap = c.cap.value_or(kDefaultGenCap);
    const auto graphs = gen_all(n, [](const Graph& g) { return is_connected(g); }, gen);
    std::vector<BoundReport> reports(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) { reports[i] = check_all(graphs[i]); });
    std::map<std::string, long> violations;
    json examples = json::object();
    long stanley_eq = 0, mantel_ext = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      stanley_eq += reports[i].stanley_equality;
      mantel_ext += reports[i].mantel_extremal;
      for (const auto& v : reports[i].violations) {
        if (violations[v]++ == 0) examples[v] = graph6_encode(graphs[i]);
      }
    }
    json j;
    j["n"] = n;
    j["family"] = "connected";
    j["count"] = static_cast<long>(graphs.size());
    json vj = json::object();
    for (const auto& [k, v] : violations) vj[k] = v;
    j["violations"] = vj;
    j["violation_examples"] = examples;
    j["stanley_equality_cases"] = stanley_eq;
    j["mantel_extremal_cases"] = mantel_ext;
    j["ok"] = violations.empty();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    j["runtime_ms"] = c.timing ? ms.count() : 0;
    o.mismatch = o.mismatch || !violations.empty();
    o.results.push_back(std::move(j));
  }
  return o;
}

inline Outcome run_lambda(const CampaignConfig& c) {
  Outcome o;
  const FamilySpec spec{family_kind_from_string(c.family), c.params};
  const Graph g = build(spec);
  const double tol = c.tol.value_or(1e-9);
  json j;
  j["family"] = c.family;
  j["params"] = c.params;
  j["n"] = g.n();
  j["m"] = g.m();
  const double eig = spectral_radius(g);
  try {
    const double closed = lambda1_closed(spec);
    j["closed_form"] = closed;
    j["eigensolved"] = eig;
    j["abs_diff"] = std::abs(closed - eig);
    j["agree"] = std::abs(closed - eig) <= tol;
    o.mismatch = std::abs(closed - eig) > tol;
  } catch (const NoClosedForm&) {
    j["closed_form"] = nullptr;
    j["eigensolved"] = eig;
  }
  o.results.push_back(std::move(j));
  return o;
}

inline Outcome run_search(const CampaignConfig& c) {
  Outcome o;
  const auto family = search_family_from_string(c.family);
  const auto objective = objective_from_string(c.objective);
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    std::vector<SearchTrace> traces(c.seeds);
    std::vector<long> ms(c.seeds);
    parallel_for(static_cast<std::size_t>(c.seeds), [&](std::size_t s) {
      const auto t0 = std::chrono::steady_clock::now();
      traces[s] = hill_climb(random_start(family, n, s), family, objective, c.budget, s);
      ms[s] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    });
    for (std::size_t s = 0; s < traces.size(); ++s) {
      const auto& t = traces[s];
      json j;
      j["n"] = n;
      j["family"] = c.family;
      j["objective"] = c.objective;
      j["seed"] = t.seed;
      j["start"] = t.start.bytes;
      json moves = json::array();
      for (const auto& rec : t.moves) {
        json mj;
        mj["kind"] = std::string(to_string(rec.move.kind));
        mj["removed"] = edge_list(rec.move.removed);
        mj["added"] = edge_list(rec.move.added);
        mj["estimate"] = rec.move.estimate;
        mj["before"] = rec.before;
        mj["after"] = rec.after;
        moves.push_back(std::move(mj));
      }
      j["moves"] = moves;
      j["final"] = t.final_form.bytes;
      j["final_graph6"] = graph6_encode(t.final_graph);
      j["final_value"] = t.final_value;
      j["evaluations"] = t.evaluations;
      j["budget_exhausted"] = t.budget_exhausted;
      j["runtime_ms"] = c.timing ? ms[s] : 0;
      o.results.push_back(std::move(j));
    }
  }
  return o;
}

inline std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
  } else s = v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

inline std::string to_csv(const json& results) {
  std::vector<std::string> columns;
  for (const auto& r : results)
    for (const auto& [k, v] : r.items())
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& r : results) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (r.contains(columns[i])) out += csv_cell(r.at(columns[i]));
    }
    out += '\n';
  }
  return out;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

}  // namespace detail

// Runs the campaign and writes the report to config.out_path, or to `out`
// when no path is set.
inline int run(const CampaignConfig& c, std::ostream& out = std::cout) {
  validate(c);
  detail::Outcome o;
  if (c.command == "verify") o = detail::run_verify(c);
  else if (c.command == "bounds") o = detail::run_bounds(c);
  else if (c.command == "lambda") o = detail::run_lambda(c);
  else o = detail::run_search(c);

  std::string text;
  if (c.format == "csv") {
    text = detail::to_csv(o.results);
  } else {
    json doc;
    doc["command"] = c.command;
    doc["config"] = c.to_json();
    doc["results"] = o.results;
    doc["timestamp"] = detail::utc_timestamp();
    text = doc.dump(2) + "\n";
  }
  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path);
    if (!f || !(f << text)) throw std::runtime_error("cannot write output file " + c.out_path);
  }
  return o.mismatch ? kExitMismatch : kExitOk;
}

// Entry point used by the spectra executable.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    return run(parse_args(argc, argv), out);
  } catch (const CLI::CallForHelp&) {
    out << "usage: spectra <verify|bounds|lambda|search> [family] [--n A..B] [--family F] [--params a,b]\n"
           "               [--objective lambda1|irregularity] [--seeds S] [--budget B] [--tol T]\n"
           "               [--out PATH] [--format json|csv] [--expect-mismatch n1,n2] [--config FILE]\n"
           "               [--cap N] [--no-timing]\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "spectra: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace spectra::cli
