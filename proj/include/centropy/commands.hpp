#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace centropy::cli {

struct GlobalOptions {
  std::string format = "json";  // "json" or "csv"
  double tol = 1e-10;
  std::uint64_t seed = 42;
};

// One executed command, ready for deterministic rendering. `results` and
// `inputs` preserve insertion order so reruns are byte-identical.
struct CommandResult {
  int exit_code = 0;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, double>> results;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> deltas;  // table1 only
  std::optional<std::string> csv_override;  // table1 ships its own table
  std::string error;  // non-empty => print to stderr, exit nonzero
};

CommandResult run_entropy(const GlobalOptions& g, const std::string& dist_text,
                          const std::string& measures);
CommandResult run_series(const GlobalOptions& g, const std::string& dist_text,
                         const std::string& measure, const std::string& m_text,
                         double width, std::size_t m_max,
                         const std::string& terms_out);
CommandResult run_bounds(const GlobalOptions& g, const std::string& dist_text);
CommandResult run_table1(const GlobalOptions& g);
CommandResult run_harter(const GlobalOptions& g, std::size_t m);
CommandResult run_oracle(const GlobalOptions& g, const std::string& dist_text,
                         const std::string& which, std::size_t n, int order,
                         std::size_t samples, unsigned threads);
CommandResult run_ingest(const GlobalOptions& g, const std::string& path,
                         const std::string& measures);

// JSON (ordered keys, 12 significant digits) or CSV (header row + one data
// row; table1 substitutes its fixed row,cdf,... layout).
std::string render(const CommandResult& r, const std::string& format);

// Quantize to 12 significant digits; the shortest-round-trip printed form
// parses back to exactly this value.
double quantize(double v);
std::string format_significant(double v);

}  // namespace centropy::cli
