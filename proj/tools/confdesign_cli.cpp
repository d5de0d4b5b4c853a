// confdesign: command-line front end.
//
// Exit codes: 0 all checks pass, 1 mismatch, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "commands.hpp"

#ifndef CONFDESIGN_GOLDEN_DIR
#define CONFDESIGN_GOLDEN_DIR "golden"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace confdesign::cli;

namespace {

struct Invocation {
  std::string command;
  std::vector<std::string> canonical;  // subcommand tokens in declaration order
  RunConfig cfg;
  Args args;
  std::string config_path;
  std::string format = "json";
  CLI::Option* truncation_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* ambient_opt = nullptr;
};

void build_app(CLI::App& app, Invocation& inv) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", inv.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  inv.format_opt = app.add_option("--format", inv.format, "json, csv or md")
                       ->check(CLI::IsMember({"json", "csv", "md"}));
  inv.out_opt = app.add_option("--out", inv.cfg.out_dir, "write output files to this directory");
  inv.threads_opt = app.add_option("--threads", inv.cfg.threads, "worker threads");
  app.add_flag("--bless", inv.cfg.bless, "overwrite the golden file of this invocation");
  inv.truncation_opt = app.add_option("--truncation", inv.cfg.truncation, "q-series coefficients");
  inv.ambient_opt = app.add_option("--ambient-degree", inv.cfg.ambient_degree, "validity range of zero modes");

  Args& a = inv.args;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  sub("kacdet", "factored Kac determinant of the vacuum module")->add_option("--degree", a.degree);
  auto* hw = sub("hwvectors", "highest weight vectors of V_e (x) V_{c-e}");
  hw->add_option("--degree", a.degree);
  hw->add_flag("--half", a.half, "e = 1/2 quotient module");
  auto* tr = sub("trace", "trace of o(v) on a module or on V_2");
  tr->add_option("--vector", a.vector, "v2, v4, v6a, v8b, ...");
  tr->add_option("--target", a.target)->check(CLI::IsMember({"module", "V2"}));
  tr->add_flag("--half", a.half);
  tr->add_flag("--words", a.words, "include the zero-mode expansion");
  sub("classify6", "strength-6 conditions")->add_flag("--half", a.half);
  sub("classify8", "strength-8 conditions")->add_flag("--half", a.half);
  sub("diophant", "central charges with integral dim V_2");
  sub("table1", "possible central charges, dim V_2 and h");
  sub("extremal-char", "extremal VOA characters")->add_option("--c", a.central_charges);
  sub("design-strength", "design strength of extremal VOAs")->add_option("--c", a.central_charges);
  auto* rs = sub("rootsums", "root-system sums of zonal harmonics");
  rs->add_option("--type", a.root_type, "A B C D E F G");
  rs->add_option("--rank", a.rank);
  rs->add_option("--levels", a.levels);
  auto* ld = sub("lattice-design", "spherical design strength of a lattice shell");
  ld->add_option("--lattice", a.lattice, "bundled name or Gram file");
  ld->add_option("--norm", a.norm);
  ld->add_option("--t-max", a.t_max);
  sub("a1-check", "A1 lattice character identity");
  sub("regress-all", "acceptance suite plus golden comparison");
  sub("golden", "list golden jobs; with --bless regenerate all of them");
}

void finish_parse(const CLI::App& app, Invocation& inv) {
  const CLI::App* s = app.get_subcommands().front();
  inv.command = s->get_name();
  inv.canonical = {inv.command};
  for (const CLI::Option* o : s->get_options()) {
    if (o->count() == 0 || o->get_name() == "--help") continue;
    inv.canonical.push_back(o->get_name());
    if (o->get_items_expected_max() > 0)
      for (const auto& r : o->results()) inv.canonical.push_back(r);
  }
}

void apply_config(Invocation& inv) {
  RunConfig& cfg = inv.cfg;
  if (!inv.config_path.empty()) {
    std::ifstream in(inv.config_path);
    if (!in) throw std::runtime_error("cannot read config " + inv.config_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError("config " + inv.config_path + ": " + e.what());
    }
    static const std::set<std::string> known = {"truncation", "ambient_degree", "out", "format",
                                                "threads",    "cache_dir",      "golden_dir"};
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!known.count(it.key())) throw UsageError("config " + inv.config_path + ": unknown key " + it.key());
    try {
      // Command-line flags win over the file.
      if (j.contains("truncation") && !inv.truncation_opt->count()) cfg.truncation = j["truncation"];
      if (j.contains("ambient_degree") && !inv.ambient_opt->count()) cfg.ambient_degree = j["ambient_degree"];
      if (j.contains("out") && !inv.out_opt->count()) cfg.out_dir = j["out"];
      if (j.contains("format") && !inv.format_opt->count()) inv.format = j["format"];
      if (j.contains("threads") && !inv.threads_opt->count()) cfg.threads = j["threads"];
      if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"];
      if (j.contains("golden_dir")) cfg.golden_dir = j["golden_dir"];
    } catch (const json::exception& e) {
      throw UsageError("config " + inv.config_path + ": " + e.what());
    }
  }
  if (const char* env = std::getenv("CONFDESIGN_CACHE_DIR")) cfg.cache_dir = env;
  if (cfg.golden_dir.empty()) cfg.golden_dir = CONFDESIGN_GOLDEN_DIR;
  if (inv.format == "json") cfg.format = Format::json;
  else if (inv.format == "csv") cfg.format = Format::csv;
  else if (inv.format == "md") cfg.format = Format::md;
  else throw UsageError("--format must be json, csv or md");
}

json result_to_json(const Result& r) {
  return {{"json", r.json}, {"header", r.table.header}, {"rows", r.table.rows},
          {"ok", r.ok},     {"text", r.text},           {"markdown", r.markdown}};
}

Result result_from_json(const json& j) {
  Result r;
  r.json = j.at("json");
  r.table.header = j.at("header").get<std::vector<std::string>>();
  r.table.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  r.ok = j.at("ok");
  r.text = j.at("text");
  r.markdown = j.at("markdown");
  return r;
}

void write_file(const fs::path& p, const std::string& content) {
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out || !(out << content)) throw std::runtime_error("cannot write " + p.string());
}

// Results depend on the command tokens and the truncation settings only,
// never on the thread count.
Result run_cached(const Invocation& inv) {
  const Command& cmd = commands().at(inv.command);
  if (inv.cfg.cache_dir.empty() || inv.cfg.bless) return cmd(inv.cfg, inv.args);
  const fs::path p = fs::path(inv.cfg.cache_dir) / ("t" + std::to_string(inv.cfg.truncation) + "_a" +
                                                    std::to_string(inv.cfg.ambient_degree) + "_" +
                                                    golden_name(inv.canonical));
  if (std::ifstream in(p); in) {
    try {
      json j;
      in >> j;
      return result_from_json(j);
    } catch (const std::exception&) {
      // Stale or corrupt entry; recompute below.
    }
  }
  Result r = cmd(inv.cfg, inv.args);
  write_file(p, result_to_json(r).dump() + "\n");
  return r;
}

bool is_golden_job(const std::vector<std::string>& tokens) {
  const auto& jobs = golden_jobs();
  return std::find(jobs.begin(), jobs.end(), tokens) != jobs.end();
}

void bless(const RunConfig& cfg, const std::vector<std::string>& tokens, const Result& r) {
  const RunConfig defaults;
  if (cfg.truncation != defaults.truncation || cfg.ambient_degree != defaults.ambient_degree)
    throw UsageError("--bless requires the default --truncation and --ambient-degree");
  const fs::path p = fs::path(cfg.golden_dir) / golden_name(tokens);
  write_file(p, r.json.dump(2) + "\n");
  std::cerr << "blessed " << p.string() << '\n';
}

// Parses tokens into a fresh invocation; CLI11 expects them reversed.
Invocation parse_job(const std::vector<std::string>& tokens) {
  CLI::App app;
  Invocation inv;
  build_app(app, inv);
  std::vector<std::string> rev(tokens.rbegin(), tokens.rend());
  app.parse(rev);
  finish_parse(app, inv);
  return inv;
}

Result run_job(const RunConfig& outer, const std::vector<std::string>& tokens) {
  Invocation inv = parse_job(tokens);
  RunConfig cfg;  // golden jobs use the default truncations
  cfg.threads = outer.threads;
  return commands().at(inv.command)(cfg, inv.args);
}

int execute(Invocation& inv) {
  apply_config(inv);
  RunConfig& cfg = inv.cfg;
  cfg.validate(inv.command == "regress-all");

  Result r;
  if (inv.command == "regress-all") {
    if (cfg.bless) throw UsageError("regress-all never writes golden files; use 'golden --bless'");
    r = regress_all(cfg, [&](const std::vector<std::string>& t) { return run_job(cfg, t); });
  } else if (inv.command == "golden") {
    r.table.header = {"file", "command"};
    json arr = json::array();
    for (const auto& job : golden_jobs()) {
      std::string cmdline;
      for (const auto& t : job) cmdline += (cmdline.empty() ? "" : " ") + t;
      if (cfg.bless) bless(cfg, job, run_job(cfg, job));
      arr.push_back({{"file", golden_name(job)}, {"command", cmdline}});
      r.table.rows.push_back({golden_name(job), cmdline});
    }
    r.json = {{"golden_dir", cfg.golden_dir}, {"jobs", arr}};
  } else {
    r = run_cached(inv);
    if (cfg.bless) {
      if (!is_golden_job(inv.canonical)) throw UsageError("not a golden job; see 'confdesign golden'");
      bless(cfg, inv.canonical, r);
    }
  }

  std::cerr << r.text;
  const std::string body = render(r, cfg.format);
  if (cfg.out_dir.empty()) {
    std::cout << body;
  } else {
    const char* ext = cfg.format == Format::json ? ".json" : cfg.format == Format::csv ? ".csv" : ".md";
    std::string stem = golden_name(inv.canonical);
    stem.resize(stem.size() - 5);
    const fs::path p = fs::path(cfg.out_dir) / (stem + ext);
    write_file(p, body);
    std::cerr << "wrote " << p.string() << '\n';
  }
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of conformal design computations"};
  Invocation inv;
  build_app(app, inv);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    finish_parse(app, inv);
    return execute(inv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    std::cerr << "consistency check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
