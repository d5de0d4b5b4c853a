#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "confdesign/classify/classify.hpp"
#include "confdesign/lattice/lattice.hpp"
#include "confdesign/qforms/qseries.hpp"
#include "confdesign/rootsys/rootsys.hpp"
#include "confdesign/trace/trace.hpp"
#include "confdesign/virasoro/tensor.hpp"
#include "confdesign/virasoro/verma.hpp"
#include "criteria.hpp"

#ifndef CONFDESIGN_DATA_DIR
#define CONFDESIGN_DATA_DIR "data"
#endif

namespace confdesign::cli {

namespace fs = std::filesystem;
using nlohmann::json;

void RunConfig::validate(bool regression) const {
  if (threads < 1) throw UsageError("--threads must be at least 1");
  if (ambient_degree < 0) throw UsageError("ambient degree must be nonnegative");
  if (truncation < 1) throw UsageError("--truncation must be at least 1");
  if (regression && truncation < 8) throw UsageError("regress-all needs --truncation >= 8");
}

namespace {

std::string S(const Rat& x) { return to_string(x); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Decimal approximation of (a + sign sqrt(disc)) / b; only used for the
// marked approximation column.
std::string approx_root(const QuadraticRoots& r, int sign) {
  if (!r.is_real()) return "complex";
  const double v = (r.a.get_d() + sign * std::sqrt(r.disc.get_d())) / r.b.get_d();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

json rats(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(S(x));
  return a;
}

// ---- subcommands -----------------------------------------------------------

Result cmd_kacdet(const RunConfig&, const Args& a) {
  const int n = a.degree ? a.degree : 8;
  if (n < 1) throw UsageError("--degree must be positive");
  const FactoredPoly f = kac_det_vacuum(n);
  Result r;
  r.table.header = {"factor", "multiplicity"};
  json factors = json::array();
  for (const auto& uf : f.factors) {
    const std::string p = uf.factor.to_string("c");
    factors.push_back({{"factor", p}, {"multiplicity", uf.multiplicity}});
    r.table.rows.push_back({p, std::to_string(uf.multiplicity)});
  }
  r.json = {{"degree", n}, {"content", S(f.content)}, {"factors", factors}};
  return r;
}

TensorModule module_for(bool half) {
  const RatFunc c = RatFunc::var(Var::c);
  return half ? TensorModule::half_case(c) : TensorModule::vacuum_pair(c, RatFunc::var(Var::e));
}

Result cmd_hwvectors(const RunConfig&, const Args& a) {
  const int n = a.degree ? a.degree : 4;
  if (n < 1 || n > 8) throw UsageError("--degree must be in 1..8");
  const auto vs = hw_solve(module_for(a.half), n);
  Result r;
  r.table.header = {"index", "vector"};
  json arr = json::array();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    arr.push_back(vs[i].to_string());
    r.table.rows.push_back({std::to_string(i), vs[i].to_string()});
  }
  r.json = {{"degree", n}, {"half_case", a.half}, {"count", vs.size()}, {"vectors", arr}};
  return r;
}

// "v4" -> first hw vector of degree 4, "v8b" -> second of degree 8.
TensorVector named_vector(const std::string& name, bool half) {
  std::size_t pos = 1;
  int n = 0;
  try {
    if (name.size() < 2 || name[0] != 'v') throw std::invalid_argument(name);
    n = std::stoi(name.substr(1), &pos);
  } catch (const std::exception&) {
    throw UsageError("--vector must look like v4 or v8b, got '" + name + "'");
  }
  const std::string suffix = name.substr(1 + pos);
  if (suffix.size() > 1 || (suffix.size() == 1 && (suffix[0] < 'a' || suffix[0] > 'z')))
    throw UsageError("bad vector suffix in '" + name + "'");
  const std::size_t idx = suffix.empty() ? 0 : static_cast<std::size_t>(suffix[0] - 'a');
  if (n < 1 || n > 8) throw UsageError("vector degree must be in 1..8");
  const auto vs = hw_solve(module_for(half), n);
  if (idx >= vs.size())
    throw UsageError("degree " + std::to_string(n) + " has " + std::to_string(vs.size()) + " highest weight vectors");
  return vs[idx];
}

Result cmd_trace(const RunConfig& cfg, const Args& a) {
  const TensorVector v = named_vector(a.vector, a.half);
  Charges ch;
  if (a.half) ch.e = RatFunc(frac(1, 2));
  TraceExpr t;
  if (a.target == "module") t = trace_lowest(v, RatFunc::var(Var::h), ch);
  else if (a.target == "V2") t = trace_V2(v, ch);
  else throw UsageError("--target must be module or V2");
  Result r;
  r.json = t.to_json();
  r.table.header = {"term", "coefficient"};
  r.table.rows.push_back({"beta", t.beta.to_string()});
  for (const auto& [i, x] : t.alpha) r.table.rows.push_back({"alpha" + std::to_string(i), x.to_string()});
  if (a.words) {
    json w = json::array();
    for (const auto& m : omode_expand(v, cfg.ambient_degree)) w.push_back(m.to_string());
    r.json["words"] = w;
    r.json["ambient_degree"] = cfg.ambient_degree;
  }
  return r;
}

void add_check(Result& r, const std::string& name, bool ok) {
  r.table.rows.push_back({name, ok ? "match" : "MISMATCH"});
  r.json["checks"][name] = ok;
  r.ok = r.ok && ok;
}

Result cmd_classify6(const RunConfig&, const Args& a) {
  Result r;
  r.table.header = {"quantity", "value"};
  if (!a.half) {
    const auto m = cond6_module();
    const RatFunc d = cond6_V2();
    r.json = {{"module_condition", m.condition.to_string()}, {"dim_V2", d.to_string()}};
    r.table.rows = {{"module_condition", m.condition.to_string()}, {"dim_V2", d.to_string()}};
    add_check(r, "module_condition", proportional(RatFunc(m.condition), RatFunc(mod6_condition())));
    add_check(r, "dim_V2", d == d6_formula());
    return r;
  }
  const auto m = cond6_module_half();
  const auto s = cond6_V2_half();
  json counts = json::array();
  for (const auto& x : s.counts) counts.push_back(x.to_string());
  r.json = {{"module_condition", m.condition.to_string()}, {"dim_V2", s.d.to_string()}, {"counts", counts}};
  r.table.rows = {{"module_condition", m.condition.to_string()}, {"dim_V2", s.d.to_string()}};
  const char* labels[] = {"d_0", "d_1/2", "d_1/16"};
  for (std::size_t i = 0; i < s.counts.size() && i < 3; ++i) r.table.rows.push_back({labels[i], s.counts[i].to_string()});
  add_check(r, "module_condition", proportional(RatFunc(m.condition), RatFunc(mod6_condition())));
  add_check(r, "dim_V2", s.d == d6_formula());
  return r;
}

Result cmd_classify8(const RunConfig&, const Args& a) {
  Result r;
  r.table.header = {"quantity", "value"};
  if (a.half) {
    const auto m = cond8_module_half();
    const RatFunc d = cond8_V2_half();
    r.json = {{"module_condition", m.condition.to_string()}, {"dim_V2", d.to_string()}};
    r.table.rows = {{"module_condition", m.condition.to_string()}, {"dim_V2", d.to_string()}};
    add_check(r, "module_condition", proportional(RatFunc(m.condition), RatFunc(mod8_half_condition())));
    add_check(r, "dim_V2", d == d8_half_formula());
    return r;
  }
  const auto m = cond8_module();
  const RatFunc d = cond8_V2();
  std::vector<std::string> meet;
  for (const auto& c : d6_d8_intersection()) meet.push_back(S(c));
  const Rat c36 = c36_exclusion();
  r.json = {{"module_condition", m.condition.to_string()},
            {"dim_V2", d.to_string()},
            {"d6_equals_d8_at", meet},
            {"dim_V2_at_c36", S(c36)}};
  r.table.rows = {{"module_condition", m.condition.to_string()},
                  {"dim_V2", d.to_string()},
                  {"d6_equals_d8_at", join(meet, " ")},
                  {"dim_V2_at_c36", S(c36)}};
  add_check(r, "module_condition", proportional(RatFunc(m.condition), RatFunc(mod8_condition())));
  add_check(r, "dim_V2", d == d8_formula());
  return r;
}

void candidate_rows(Result& r, const std::vector<CandidateRow>& rows) {
  r.table.header = {"c", "dim_V2", "h_low", "h_high", "h_approx"};
  json arr = json::array();
  for (const auto& row : rows) {
    const auto q = solve_h6(row.c);
    std::string lo = "-", hi = "-", approx;
    if (auto rr = q.rational()) {
      lo = S(rr->first);
      hi = S(rr->second);
    } else {
      approx = approx_root(q, -1) + " " + approx_root(q, 1);
    }
    json j = {{"c", S(row.c)}, {"dim_V2", row.d.get_str()}, {"h", q.to_string()}};
    if (q.rational()) j["h_rational"] = {lo, hi};
    arr.push_back(j);
    r.table.rows.push_back({S(row.c), row.d.get_str(), lo, hi, approx});
  }
  r.json = {{"count", rows.size()}, {"rows", arr}};
}

Result cmd_diophant(const RunConfig& cfg, const Args&) {
  Result r;
  candidate_rows(r, diophant_scan(cfg.threads));
  return r;
}

Result cmd_table1(const RunConfig& cfg, const Args&) {
  const auto rows = table1(cfg.threads);
  Result r;
  r.table.header = {"c", "dim_V2", "h"};
  json arr = json::array();
  std::vector<std::string> cs, ds, hs;
  for (const auto& row : rows) {
    const std::string h = row.h ? S(row.h->first) + "," + S(row.h->second) : "-";
    arr.push_back({{"c", S(row.c)}, {"dim_V2", row.d.get_str()}, {"h", h}});
    r.table.rows.push_back({S(row.c), row.d.get_str(), h});
    cs.push_back(S(row.c));
    ds.push_back(row.d.get_str());
    hs.push_back(h);
  }
  r.json = {{"rows", arr}};
  // Transposed layout: one column per central charge.
  std::string md = "| central charge c | " + join(cs, " | ") + " |\n|---|";
  for (std::size_t i = 0; i < cs.size(); ++i) md += "---|";
  md += "\n| dim V_2 | " + join(ds, " | ") + " |\n| conformal weight h | " + join(hs, " | ") + " |\n";
  r.markdown = md;
  return r;
}

std::vector<int> charges_or(const Args& a, std::vector<int> fallback) {
  return a.central_charges.empty() ? fallback : a.central_charges;
}

Result cmd_extremal_char(const RunConfig& cfg, const Args& a) {
  Result r;
  r.table.header = {"c", "k", "dim_V2", "A_k+1", "A_k+2", "lead48", "coefficients"};
  json arr = json::array();
  for (int c : charges_or(a, {24, 32, 40, 48})) {
    ExtremalChar x;
    try {
      x = extremal_character(c, cfg.truncation);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::vector<std::string> cs;
    for (const auto& v : x.series.coeffs) cs.push_back(S(v));
    arr.push_back({{"c", c},
                   {"k", x.k},
                   {"lambdas", rats(x.lambdas)},
                   {"lead48", x.series.lead48},
                   {"coeffs", rats(x.series.coeffs)},
                   {"A_k+1", S(x.A1)},
                   {"A_k+2", S(x.A2)}});
    r.table.rows.push_back({std::to_string(c), std::to_string(x.k), S(x.dim_V2()), S(x.A1), S(x.A2),
                            std::to_string(x.series.lead48), join(cs, " ")});
  }
  r.json = {{"truncation", cfg.truncation}, {"characters", arr}};
  return r;
}

Result cmd_design_strength(const RunConfig&, const Args& a) {
  Result r;
  r.table.header = {"c", "t", "extra", "minimal_weight"};
  json arr = json::array();
  for (int c : charges_or(a, {8, 16, 24, 32, 40, 48})) {
    if (c <= 0 || c % 8) throw UsageError("c must be a positive multiple of 8, got " + std::to_string(c));
    const auto d = extremal_design_strength(c);
    std::vector<std::string> extra;
    for (int s : d.extra) extra.push_back(std::to_string(s));
    arr.push_back({{"c", c}, {"t", d.t}, {"extra", d.extra}, {"minimal_weight", d.minimal_weight}});
    r.table.rows.push_back({std::to_string(c), std::to_string(d.t), join(extra, " "), std::to_string(d.minimal_weight)});
  }
  r.json = {{"strengths", arr}};
  return r;
}

Family family_of(const std::string& type) {
  if (type == "A") return Family::A;
  if (type == "B") return Family::B;
  if (type == "C") return Family::C;
  return Family::D;
}

Result cmd_rootsums(const RunConfig&, const Args& a) {
  std::vector<RootSystem> systems;
  try {
    if (!a.root_type.empty()) {
      systems.push_back(build_roots(a.root_type, a.rank));
    } else {
      for (const char* t : {"A", "B", "C", "D"})
        for (int n = 2; n <= 12; ++n) systems.push_back(build_roots(t, n));
      systems.push_back(build_roots("E", 6));
      systems.push_back(build_roots("E", 7));
      systems.push_back(build_roots("E", 8));
      systems.push_back(build_roots("F", 4));
      systems.push_back(build_roots("G", 2));
    }
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const std::vector<int> levels = a.levels.empty() ? std::vector<int>{4, 6} : a.levels;
  Result r;
  r.table.header = {"system", "l", "sum_R_l"};
  json arr = json::array();
  for (const auto& phi : systems) {
    for (int l : levels) {
      if (l < 1) throw UsageError("levels must be positive");
      const bool family = phi.type == "A" || phi.type == "B" || phi.type == "C" || phi.type == "D";
      // Family values go through the closed forms, which cross-check
      // against the direct sum.
      const Rat v = family && (l == 4 || l == 6) ? closed_form_sum(l, family_of(phi.type), phi.rank)
                                                 : root_sum_R(l, phi);
      arr.push_back({{"system", phi.name()}, {"l", l}, {"sum", S(v)}});
      r.table.rows.push_back({phi.name(), std::to_string(l), S(v)});
    }
  }
  r.json = {{"sums", arr}};
  return r;
}

std::string lattice_path(const std::string& name) {
  if (fs::exists(name)) return name;
  const fs::path p = fs::path(CONFDESIGN_DATA_DIR) / "lattices" / (name + ".gram");
  if (!fs::exists(p)) throw std::runtime_error("cannot open lattice '" + name + "' (tried " + p.string() + ")");
  return p.string();
}

Result cmd_lattice_design(const RunConfig& cfg, const Args& a) {
  const Lattice l = load_lattice(lattice_path(a.lattice));
  Rat norm;
  try {
    norm = parse_rat(a.norm);
  } catch (const std::exception&) {
    throw UsageError("--norm must be a rational number, got '" + a.norm + "'");
  }
  const int t_max = a.t_max ? a.t_max : 11;
  const Shell s = shell_enum(l, norm, cfg.threads);
  if (s.vectors.empty()) throw UsageError("the shell of norm " + S(norm) + " is empty");
  const DesignReport d = design_report(s, t_max);
  json pole = json::array();
  std::string pole_s;
  for (long x : d.witness_pole) {
    pole.push_back(x);
    pole_s += (pole_s.empty() ? "" : " ") + std::to_string(x);
  }
  Result r;
  r.json = {{"lattice", l.name},   {"norm", S(norm)},          {"size", s.vectors.size()},
            {"t", d.t},            {"t_max", t_max},           {"failed_degree", d.failed_degree},
            {"witness_pole", pole}, {"witness_sum", S(d.witness_sum)}};
  r.table.header = {"lattice", "norm", "size", "t", "failed_degree", "witness_pole", "witness_sum"};
  r.table.rows.push_back({l.name, S(norm), std::to_string(s.vectors.size()), std::to_string(d.t),
                          std::to_string(d.failed_degree), pole_s, S(d.witness_sum)});
  return r;
}

Result cmd_a1_check(const RunConfig& cfg, const Args&) {
  const int n = static_cast<int>(cfg.truncation);
  const A1Report rep = a1_identity_check(n);
  Result r;
  r.ok = rep.ok;
  r.json = {{"truncation", n},
            {"ok", rep.ok},
            {"failed_order", rep.failed_order},
            {"trivial", rats(rep.trivial)},
            {"expected", rats(rep.expected)}};
  r.table.header = {"order", "trivial_multiplicity", "partitions_parts_ge_2"};
  for (std::size_t i = 0; i < rep.trivial.size(); ++i)
    r.table.rows.push_back({std::to_string(i), S(rep.trivial[i]), i < rep.expected.size() ? S(rep.expected[i]) : "-"});
  return r;
}

void diff_into(const json& g, const json& x, const std::string& path, std::vector<std::string>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (g.type() == x.type() && g.is_object()) {
    for (auto it = g.begin(); it != g.end(); ++it) {
      if (x.contains(it.key())) diff_into(it.value(), x.at(it.key()), path + "/" + it.key(), out, limit);
      else out.push_back(path + "/" + it.key() + ": golden " + it.value().dump() + ", got nothing");
    }
    for (auto it = x.begin(); it != x.end(); ++it)
      if (!g.contains(it.key())) out.push_back(path + "/" + it.key() + ": golden nothing, got " + it.value().dump());
    return;
  }
  if (g.type() == x.type() && g.is_array() && g.size() == x.size()) {
    for (std::size_t i = 0; i < g.size(); ++i) diff_into(g[i], x[i], path + "/" + std::to_string(i), out, limit);
    return;
  }
  if (g != x) out.push_back((path.empty() ? "/" : path) + ": golden " + g.dump() + ", got " + x.dump());
}

}  // namespace

std::string Table::csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string Table::markdown() const {
  std::ostringstream os;
  os << "| " << join(header, " | ") << " |\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : rows) os << "| " << join(r, " | ") << " |\n";
  return os.str();
}

std::string render(const Result& r, Format f) {
  switch (f) {
    case Format::json:
      return r.json.dump(2) + "\n";
    case Format::csv:
      return r.table.csv();
    case Format::md:
      return r.markdown.empty() ? r.table.markdown() : r.markdown;
  }
  return {};
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> m = {
      {"kacdet", cmd_kacdet},
      {"hwvectors", cmd_hwvectors},
      {"trace", cmd_trace},
      {"classify6", cmd_classify6},
      {"classify8", cmd_classify8},
      {"diophant", cmd_diophant},
      {"table1", cmd_table1},
      {"extremal-char", cmd_extremal_char},
      {"design-strength", cmd_design_strength},
      {"rootsums", cmd_rootsums},
      {"lattice-design", cmd_lattice_design},
      {"a1-check", cmd_a1_check},
  };
  return m;
}

const std::vector<std::vector<std::string>>& golden_jobs() {
  static const std::vector<std::vector<std::string>> jobs = {
      {"kacdet", "--degree", "8"},
      {"hwvectors", "--degree", "4"},
      {"trace", "--vector", "v4", "--target", "module"},
      {"trace", "--vector", "v4", "--target", "V2"},
      {"classify6"},
      {"classify6", "--half"},
      {"classify8"},
      {"diophant"},
      {"table1"},
      {"extremal-char"},
      {"design-strength"},
      {"rootsums"},
      {"lattice-design", "--lattice", "e8", "--norm", "2"},
      {"a1-check"},
  };
  return jobs;
}

std::string golden_name(const std::vector<std::string>& argv) {
  std::string out;
  for (const auto& tok : argv) {
    std::string t = tok;
    while (!t.empty() && t[0] == '-') t.erase(0, 1);
    for (char& ch : t)
      if (ch == '/' || ch == ' ') ch = '_';
    out += (out.empty() ? "" : "_") + t;
  }
  return out + ".json";
}

std::vector<std::string> json_diff(const json& golden, const json& got, std::size_t limit) {
  std::vector<std::string> out;
  diff_into(golden, got, "", out, limit);
  return out;
}

Result regress_all(const RunConfig& cfg, const JobRunner& run_job) {
  Result r;
  r.table.header = {"check", "status", "diff"};
  std::ostringstream text;
  json crit = json::array();
  for (const auto& c : acceptance::criteria()) {
    const auto o = acceptance::run(c, cfg.threads);
    std::string diff = o.diff();
    crit.push_back({{"id", o.id}, {"title", o.title}, {"pass", o.pass()}, {"diff", diff}});
    text << (o.pass() ? "[PASS] " : "[FAIL] ") << o.id << ' ' << o.title << '\n' << diff;
    while (!diff.empty() && diff.back() == '\n') diff.pop_back();
    r.table.rows.push_back({"criterion " + std::to_string(o.id), o.pass() ? "PASS" : "FAIL", diff});
    r.ok = r.ok && o.pass();
  }
  json gold = json::array();
  for (const auto& job : golden_jobs()) {
    const std::string name = golden_name(job);
    const fs::path path = fs::path(cfg.golden_dir) / name;
    std::vector<std::string> diff;
    std::ifstream in(path);
    if (!in) {
      diff.push_back("missing golden file " + path.string() + " (regenerate with --bless)");
    } else {
      json g;
      try {
        in >> g;
        diff = json_diff(g, run_job(job).json);
      } catch (const json::exception& e) {
        diff.push_back("unreadable golden file " + path.string() + ": " + e.what());
      }
    }
    const bool ok = diff.empty();
    gold.push_back({{"file", name}, {"pass", ok}, {"diff", diff}});
    text << (ok ? "[PASS] " : "[FAIL] ") << "golden " << name << '\n';
    for (const auto& d : diff) text << "  " << d << '\n';
    r.table.rows.push_back({"golden " + name, ok ? "PASS" : "FAIL", join(diff, "; ")});
    r.ok = r.ok && ok;
  }
  r.json = {{"criteria", crit}, {"golden", gold}, {"ok", r.ok}};
  r.text = text.str();
  return r;
}

}  // namespace confdesign::cli
