#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centropy/quadrature.hpp"

namespace centropy {

struct SupportInterval {
  double lower = 0.0;
  double upper = 0.0;  // may be +infinity
};

// An absolutely continuous law (or an empirical sample standing in for one),
// carrying the metadata the bound machinery gates on. All catalog members
// except the standard normal live on a non-negative support.
class Distribution {
 public:
  enum class Family {
    Exponential,       // F(x) = 1 - exp(-lambda x) on (0, inf)
    Uniform,           // F(x) = x / a on (0, a)
    PowerLaw,          // F(x) = x^k on (0, 1)
    StandardNormal,    // Phi(x) on (-inf, inf)
    TableRow3,         // F(x) = x^-2 exp(2(1 - 1/x)) on (0, 1)
    Lomax,             // F(x) = 1 - (1 + x)^-3 on (0, inf)
    TableRow6,         // F(x) = exp(-1/(e^x - 1)) on (0, inf)
    Empirical,         // step cdf of a sorted sample
  };

  static Distribution exponential(double lambda);
  static Distribution uniform(double a);
  static Distribution power_law(double k);
  static Distribution standard_normal();
  static Distribution table_row(int row);  // 1..6; rows 1, 2, 5 alias exp/uniform/power defaults
  static Distribution empirical(std::vector<double> samples);

  Family family() const { return family_; }

  double cdf(double x) const;
  double survival(double x) const;
  double pdf(double x) const;          // CapabilityError for empirical
  double quantile(double p) const;     // p in (0,1), generalized inverse
  double log_cdf(double x) const;      // accurate where cdf is near 0 or 1
  double log_survival(double x) const;

  double mean() const { return mean_; }
  double second_moment() const { return second_moment_; }
  double variance() const;
  std::optional<double> fourth_moment() const { return fourth_moment_; }

  SupportInterval support() const { return support_; }
  bool bounded_support() const { return bounded_; }
  std::optional<double> symmetric_about() const { return symmetric_about_; }
  std::optional<bool> decreasing_failure_rate() const { return dfr_; }
  bool has_pdf() const { return family_ != Family::Empirical; }
  bool is_empirical() const { return family_ == Family::Empirical; }

  // Empirical accessors: distinct sorted values with multiplicities.
  std::size_t sample_count() const { return sample_count_; }
  const std::vector<double>& distinct_values() const { return values_; }
  const std::vector<std::size_t>& cumulative_counts() const { return counts_; }

  // Canonical specification string (round-trips through parse_spec for
  // non-empirical families) and a short cdf formula for reports.
  const std::string& key() const { return key_; }
  const std::string& cdf_formula() const { return formula_; }

 private:
  Distribution() = default;

  Family family_ = Family::Exponential;
  double param_ = 1.0;  // lambda / a / k, unused otherwise
  std::vector<double> values_;        // empirical: distinct sorted values
  std::vector<std::size_t> counts_;   // empirical: counts of samples <= value
  std::size_t sample_count_ = 0;

  SupportInterval support_;
  bool bounded_ = false;
  std::optional<double> symmetric_about_;
  std::optional<bool> dfr_;
  double mean_ = 0.0;
  double second_moment_ = 0.0;
  std::optional<double> fourth_moment_;
  std::string key_;
  std::string formula_;

  void finalize_metadata();
};

// Parses "kind" or "kind(name=value, ...)". Accepted kinds are the catalog
// keys; see catalog_keys(). Unknown kinds, unknown or duplicate parameter
// names, malformed numbers, and empty parameter lists ("exp()") raise
// ParseError with a 1-based character position.
Distribution parse_spec(const std::string& text);

// Catalog keys understood by parse_spec.
std::vector<std::string> catalog_keys();

// Reads one sample per line; blank lines and lines starting with '#' are
// skipped. Raises ParseError (with the line number) for malformed or
// negative entries, and DomainError for unreadable or empty files.
std::vector<double> load_sample_file(const std::string& path);

// Deterministic inverse-transform sampling; draw i uses only (seed, i).
std::vector<double> sample_inverse_transform(const Distribution& d,
                                             std::size_t count,
                                             std::uint64_t seed);

}  // namespace centropy
