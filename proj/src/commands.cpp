#include "centropy/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <charconv>
#include <string>
#include <vector>

#include <json.hpp>

#include "centropy/bounds.hpp"
#include "centropy/distribution.hpp"
#include "centropy/entropy.hpp"
#include "centropy/errors.hpp"
#include "centropy/order_statistics.hpp"
#include "centropy/reference_table.hpp"
#include "centropy/series.hpp"

namespace centropy::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kUsageError = 2;

quad::Tolerance tolerance_of(const GlobalOptions& g) {
  quad::Tolerance t;
  t.abs_tol = g.tol;
  t.rel_tol = g.tol;
  return t;
}

// "cre,wce" or "all" -> validated list in request order, duplicates dropped.
std::vector<std::string> parse_measures(const std::string& text) {
  if (text == "all" || text.empty()) return {"cre", "ce", "wcre", "wce"};
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string name = text.substr(start, comma - start);
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (!name.empty()) {
      if (!entropy_kind_from_string(name).has_value()) {
        throw DomainError("unknown measure '" + name +
                          "' (expected cre, ce, wcre, wce, or all)");
      }
      bool seen = false;
      for (const std::string& s : out) seen = seen || s == name;
      if (!seen) out.push_back(name);
    }
    start = comma + 1;
  }
  if (out.empty()) throw DomainError("no measures requested");
  return out;
}

void push_input(CommandResult* r, const std::string& k, const std::string& v) {
  r->inputs.emplace_back(k, v);
}

void push_result(CommandResult* r, const std::string& k, double v) {
  r->results.emplace_back(k, v);
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) line += ',';
    line += cells[i];
  }
  return line;
}

}  // namespace

std::string format_significant(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double quantize(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_significant(v).c_str(), nullptr);
}

CommandResult run_entropy(const GlobalOptions& g, const std::string& dist_text,
                          const std::string& measures) {
  CommandResult r;
  r.command = "entropy";
  try {
    const std::vector<std::string> names = parse_measures(measures);
    const Distribution d = parse_spec(dist_text);
    push_input(&r, "dist", dist_text);
    push_input(&r, "distribution", d.key());
    push_input(&r, "cdf", d.cdf_formula());
    push_input(&r, "tol", format_significant(g.tol));
    for (const std::string& name : names) {
      const EntropyKind kind = *entropy_kind_from_string(name);
      try {
        const EntropyValue v =
            entropy_measure(d, kind, tolerance_of(g), &r.warnings);
        push_result(&r, name, v.value);
      } catch (const ConvergenceError& e) {
        r.warnings.push_back(name + ": " + e.what());
        r.exit_code = 1;
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

CommandResult run_series(const GlobalOptions& g, const std::string& dist_text,
                         const std::string& measure, const std::string& m_text,
                         double width, std::size_t m_max,
                         const std::string& terms_out) {
  CommandResult r;
  r.command = "series";
  try {
    const std::optional<SeriesKind> kind = series_kind_from_string(measure);
    if (!kind.has_value()) {
      r.error = "unknown measure '" + measure +
                "' (expected cre, ce, wcre, wce, or sum)";
      r.exit_code = kUsageError;
      return r;
    }
    const Distribution d = parse_spec(dist_text);
    push_input(&r, "dist", dist_text);
    push_input(&r, "distribution", d.key());
    push_input(&r, "measure", to_string(*kind));
    push_input(&r, "m", m_text);

    SeriesApproximation ap;
    if (m_text == "auto") {
      if (!(width > 0.0)) {
        r.error = "auto mode needs a positive --width";
        r.exit_code = kUsageError;
        return r;
      }
      push_input(&r, "width", format_significant(width));
      ap = converge(d, *kind, width, m_max);
    } else {
      std::size_t m = 0;
      const char* begin = m_text.data();
      const char* end = begin + m_text.size();
      auto [ptr, ec] = std::from_chars(begin, end, m);
      if (ec != std::errc() || ptr != end || m == 0) {
        r.error = "m must be a positive integer or \"auto\"";
        r.exit_code = kUsageError;
        return r;
      }
      ap = series_truncation(d, *kind, m);
    }

    push_result(&r, "m_used", static_cast<double>(ap.m));
    push_result(&r, "partial_sum", ap.partial_sum);
    push_result(&r, "point_estimate", ap.point_estimate);
    if (std::isfinite(ap.lower)) {
      push_result(&r, "lower", ap.lower);
    } else {
      r.warnings.push_back("lower bound not certified; omitted");
    }
    if (std::isfinite(ap.upper)) {
      push_result(&r, "upper", ap.upper);
    } else {
      r.warnings.push_back(
          "upper bound not certified (no finite fourth moment); omitted");
    }
    push_result(&r, "lower_certified", ap.lower_certified ? 1.0 : 0.0);
    push_result(&r, "upper_certified", ap.upper_certified ? 1.0 : 0.0);
    push_result(&r, "converged", ap.converged ? 1.0 : 0.0);
    if (ap.degenerate) {
      r.warnings.push_back(
          "distribution has zero variance; series is identically zero");
    }

    if (!terms_out.empty()) {
      std::FILE* f = std::fopen(terms_out.c_str(), "w");
      if (f == nullptr) {
        r.error = "cannot write terms file: " + terms_out;
        r.exit_code = 1;
        return r;
      }
      std::fputs("n,moment,coefficient,term\n", f);
      for (const SeriesTerm& t : ap.terms) {
        std::fprintf(f, "%zu,%s,%s,%s\n", t.n,
                     format_significant(t.moment).c_str(),
                     format_significant(t.coefficient).c_str(),
                     format_significant(t.term).c_str());
      }
      std::fclose(f);
      push_input(&r, "terms_out", terms_out);
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

CommandResult run_bounds(const GlobalOptions& g, const std::string& dist_text) {
  CommandResult r;
  r.command = "bounds";
  try {
    const Distribution d = parse_spec(dist_text);
    const BoundReport report = check_all(d, tolerance_of(g), &r.warnings);
    push_input(&r, "dist", dist_text);
    push_input(&r, "distribution", report.distribution);
    push_input(&r, "cdf", d.cdf_formula());
    push_input(&r, "tol", format_significant(g.tol));
    push_result(&r, "mean", report.mean);
    push_result(&r, "sigma", report.sigma);
    push_result(&r, "cre", report.cre);
    push_result(&r, "ce", report.ce);
    push_result(&r, "sum", report.sum);
    for (const BoundEntry& e : report.entries) {
      push_result(&r, e.name, e.bound_value);
      if (e.applicable) {
        push_result(&r, e.name + "_slack", e.slack);
        if (!e.satisfied) {
          r.warnings.push_back("bound " + e.name + " violated (slack " +
                               format_significant(e.slack) + ")");
        }
      } else {
        r.warnings.push_back("entry " + e.name + " skipped: " + e.reason);
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

CommandResult run_table1(const GlobalOptions& g) {
  CommandResult r;
  r.command = "table1";
  try {
    const std::vector<ReferenceRow> rows =
        evaluate_reference_table(tolerance_of(g), &r.warnings);
    push_input(&r, "tol", format_significant(g.tol));

    std::string csv = "row,cdf,cre,cre_bound,sum,sum_bound,delta_max\n";
    bool all_ok = true;
    for (const ReferenceRow& row : rows) {
      const std::pair<std::string, const ReferenceCell*> cells[] = {
          {"cre", &row.cre},
          {"cre_bound", &row.cre_bound},
          {"sum", &row.sum},
          {"sum_bound", &row.sum_bound},
      };
      for (const auto& [col, cell] : cells) {
        push_result(&r, row.label + "." + col, cell->computed);
        r.deltas.emplace_back(row.label + "." + col, cell->delta);
        if (!cell->within) {
          all_ok = false;
          r.warnings.push_back(row.label + "." + col + " delta " +
                               format_significant(cell->delta) +
                               " exceeds tolerance " +
                               format_significant(cell->tolerance));
        }
      }
      csv += join_csv({row.label, row.cdf_formula,
                       format_significant(row.cre.computed),
                       format_significant(row.cre_bound.computed),
                       format_significant(row.sum.computed),
                       format_significant(row.sum_bound.computed),
                       format_significant(row.delta_max)});
      csv += '\n';
    }
    r.csv_override = csv;
    if (!all_ok) r.exit_code = 1;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

CommandResult run_harter(const GlobalOptions& g, std::size_t m) {
  CommandResult r;
  r.command = "harter";
  (void)g;
  if (m == 0) {
    r.error = "m must be at least 1";
    r.exit_code = kUsageError;
    return r;
  }
  try {
    const HarterComparison h = harter_comparison(m);
    push_input(&r, "m", std::to_string(m));
    push_result(&r, "series_sum", h.left);
    push_result(&r, "bound_sum", h.right);
    push_result(&r, "strictly_less", h.strictly_less ? 1.0 : 0.0);
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

CommandResult run_oracle(const GlobalOptions& g, const std::string& dist_text,
                         const std::string& which, std::size_t n, int order,
                         std::size_t samples, unsigned threads) {
  CommandResult r;
  r.command = "oracle";
  Extreme extreme = Extreme::Largest;
  if (which == "smallest") {
    extreme = Extreme::Smallest;
  } else if (which != "largest") {
    r.error = "which must be 'largest' or 'smallest'";
    r.exit_code = kUsageError;
    return r;
  }
  if (n == 0 || samples == 0 || (order != 1 && order != 2)) {
    r.error = "need n >= 1, samples >= 1, and order in {1,2}";
    r.exit_code = kUsageError;
    return r;
  }
  try {
    const Distribution d = parse_spec(dist_text);
    push_input(&r, "dist", dist_text);
    push_input(&r, "distribution", d.key());
    push_input(&r, "which", which);
    push_input(&r, "seed", std::to_string(g.seed));
    push_input(&r, "threads", std::to_string(threads));
    const McEstimate mc =
        mc_extreme_moment(d, extreme, n, order, samples, g.seed, threads);
    const MomentRecord ref =
        extreme_moment(d, extreme, n, order, tolerance_of(g));
    push_result(&r, "n", static_cast<double>(n));
    push_result(&r, "order", static_cast<double>(order));
    push_result(&r, "samples", static_cast<double>(mc.samples));
    push_result(&r, "estimate", mc.estimate);
    push_result(&r, "standard_error", mc.standard_error);
    push_result(&r, "reference", ref.value);
    const double z = mc.standard_error > 0.0
                         ? (mc.estimate - ref.value) / mc.standard_error
                         : 0.0;
    push_result(&r, "z_score", z);
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

CommandResult run_ingest(const GlobalOptions& g, const std::string& path,
                         const std::string& measures) {
  CommandResult r;
  r.command = "ingest";
  (void)g;
  try {
    const std::vector<std::string> names = parse_measures(measures);
    const Distribution d = Distribution::empirical(load_sample_file(path));
    push_input(&r, "path", path);
    push_input(&r, "distribution", d.key());
    push_result(&r, "samples", static_cast<double>(d.sample_count()));
    push_result(&r, "distinct", static_cast<double>(d.distinct_values().size()));
    for (const std::string& name : names) {
      const EntropyKind kind = *entropy_kind_from_string(name);
      const EntropyValue v = empirical_plugin(d, kind, &r.warnings);
      push_result(&r, name, v.value);
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 1;
  }
  return r;
}

std::string render(const CommandResult& r, const std::string& format) {
  if (format == "csv") {
    if (r.csv_override.has_value()) return *r.csv_override;
    std::vector<std::string> header;
    std::vector<std::string> values;
    header.reserve(r.results.size());
    values.reserve(r.results.size());
    for (const auto& [key, value] : r.results) {
      header.push_back(key);
      values.push_back(format_significant(value));
    }
    return join_csv(header) + "\n" + join_csv(values) + "\n";
  }

  ordered_json j;
  j["command"] = r.command;
  ordered_json inputs = ordered_json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  ordered_json results = ordered_json::object();
  for (const auto& [key, value] : r.results) results[key] = quantize(value);
  j["results"] = results;
  j["warnings"] = r.warnings;
  if (!r.deltas.empty()) {
    ordered_json deltas = ordered_json::object();
    for (const auto& [key, value] : r.deltas) deltas[key] = quantize(value);
    j["deltas"] = deltas;
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump(2) + "\n";
}

}  // namespace centropy::cli
