#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace confdesign::cli {

enum class Format { json, csv, md };

struct RunConfig {
  std::size_t truncation = 10;  // q-series coefficients
  int ambient_degree = 2;       // validity range of expanded zero modes
  std::string out_dir;          // empty: stdout
  Format format = Format::json;
  unsigned threads = 1;
  std::string cache_dir;  // empty: no cache
  std::string golden_dir;
  bool bless = false;

  /// Throws UsageError on violated invariants.
  void validate(bool regression) const;
};

/// Bad flags or values; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const;
  std::string markdown() const;
};

/// Output of one subcommand. `ok` is false when a check inside the command
/// failed (exit code 1).
struct Result {
  nlohmann::json json;
  Table table;
  bool ok = true;
  std::string text;      // human-readable report, printed to stderr
  std::string markdown;  // replaces the default table layout for --format md
};

std::string render(const Result& r, Format f);

/// Per-subcommand options, filled by the argument parser.
struct Args {
  int degree = 0;
  bool half = false;
  std::string vector = "v4";
  std::string target = "module";
  bool words = false;
  std::vector<int> central_charges;
  std::string root_type;
  int rank = 0;
  std::vector<int> levels;
  std::string lattice = "e8";
  std::string norm = "2";
  int t_max = 0;
};

using Command = std::function<Result(const RunConfig&, const Args&)>;

/// Subcommand name -> implementation (regress-all excluded).
const std::map<std::string, Command>& commands();

/// Runs one golden invocation (tokens as on the command line).
using JobRunner = std::function<Result(const std::vector<std::string>& argv)>;

/// Acceptance criteria plus golden comparison. Never writes golden files.
Result regress_all(const RunConfig& cfg, const JobRunner& run_job);

/// Fixed invocations whose JSON output is stored under the golden directory.
const std::vector<std::vector<std::string>>& golden_jobs();
/// File name for an invocation: its tokens joined with '_' plus ".json".
std::string golden_name(const std::vector<std::string>& argv);

/// Recursive JSON comparison; one "path: golden X, got Y" line per
/// difference, at most `limit` lines.
std::vector<std::string> json_diff(const nlohmann::json& golden, const nlohmann::json& got, std::size_t limit = 20);

}  // namespace confdesign::cli
