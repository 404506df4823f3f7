#pragma once

#include <optional>
#include <string>

#include "c4lab/report.hpp"

namespace c4lab {

// One parsed invocation, all user-facing values still in text form so every
// validation failure funnels through the same input-error report. Optional
// fields are read only by the subcommands that document them.
struct RunConfig {
  std::string op;
  std::string input;            // graph path; the report path for report-audit
  std::string out;              // gen writes the graph here
  std::string format = "json";  // json | text

  std::optional<std::string> epsilon, alpha, gamma, delta, p;  // rational text
  std::optional<std::string> const_c, const_d;
  std::optional<long long> seed;
  std::optional<int> exact_cap, r, k, f, edits, trials, n;

  std::optional<std::string> x, y;   // comma-separated vertex lists
  std::optional<std::string> blocks; // semicolon-separated vertex lists
  std::string family;                // per-subcommand vocabulary, see README
  bool strong = false;
  std::string model = "gnp";
};

struct RunOutput {
  Json report;
  int exit_code = 0;  // 0 certified, 2 structured failure, 1 input error
};

// Dispatches one subcommand and assembles the report envelope {"schema":1,
// "config", "outcome", "certificates", "counts", "invariant_checks",
// "timing_ms"}; input errors add an "error" key and exit 1, structured
// pipeline failures keep their payload and exit 2. Reports for equal configs
// and seeds are byte-identical apart from timing_ms.
RunOutput run(const RunConfig& cfg);

// json: indented dump. text: one line per envelope entry.
std::string render_report(const Json& report, const std::string& format);

// Writes through a sibling temp file and a rename, so a reader never sees a
// partial report.
void write_file_atomic(const std::string& path, const std::string& content);

// Corpus models: gnp (n, p), split (clique on the first ceil(n/2) vertices,
// cross edges with probability p), blowup (k, f). Shared with the report
// audit so generation is reproducible from the config echo alone.
Graph generate_graph(const std::string& model, int n, const Rational& p, int k, int f, Rng& rng);

}  // namespace c4lab
