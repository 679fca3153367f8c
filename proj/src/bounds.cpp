#include "centropy/bounds.hpp"

#include <cmath>
#include <limits>

#include "centropy/detail/coefficient_sums.hpp"
#include "centropy/entropy.hpp"
#include "centropy/errors.hpp"

namespace centropy {
namespace {

constexpr double kSlackFloor = -1e-9;  // numerical forgiveness when judging

BoundEntry make_entry(const std::string& name, bool is_lower) {
  BoundEntry e;
  e.name = name;
  e.is_lower = is_lower;
  return e;
}

void evaluate_entry(BoundEntry* e, bool applicable, const std::string& reason,
                    double bound, double measured, bool measured_ok) {
  e->bound_value = bound;
  e->measured_value = measured;
  if (!applicable) {
    e->applicable = false;
    e->reason = reason;
    e->satisfied = true;  // vacuous
    e->slack = 0.0;
    return;
  }
  if (!measured_ok) {
    e->applicable = false;
    e->reason = "measurement unavailable";
    e->satisfied = true;
    e->slack = 0.0;
    return;
  }
  e->applicable = true;
  e->slack = e->is_lower ? measured - bound : bound - measured;
  e->satisfied = e->slack >= kSlackFloor;
}

}  // namespace

double hdg_extreme_bound(std::size_t n, double mu, double sigma) {
  if (n == 0) throw DomainError("sample size n must be at least 1");
  const double dn = static_cast<double>(n);
  return mu + sigma * (dn - 1.0) / std::sqrt(2.0 * dn - 1.0);
}

double cre_upper_hdg(double sigma) {
  return sigma * hdg_series_constant();
}

double hdg_series_constant() { return detail::hdg_coefficient_sum(); }

double ce_lower_dfr(double mean, double second_moment) {
  const double pi2_6 = M_PI * M_PI / 6.0;
  return mean - std::sqrt(second_moment) / std::sqrt(2.0) * (2.0 - pi2_6);
}

double c_of_n(std::size_t n) {
  if (n == 0) throw DomainError("c(n) requires n >= 1");
  return detail::c_of_n_impl(n);
}

double complete_beta(std::size_t n) {
  if (n == 0) throw DomainError("complete beta requires n >= 1");
  return detail::complete_beta_impl(n);
}

double cre_upper_symmetric_bounded(double sigma) {
  return 0.5 * sigma * dn_series_constant();
}

double dn_series_constant() { return detail::dn_coefficient_sum(); }

double cre_upper_symmetric(double sigma) {
  return sigma / std::sqrt(2.0) * symmetric_series_constant();
}

double symmetric_series_constant() {
  return detail::symmetric_coefficient_sum();
}

double symmetric_series_partial(std::size_t m) {
  return detail::symmetric_coefficient_partial(m);
}

double range_bound(std::size_t sample_size, double sigma) {
  if (sample_size == 0) throw DomainError("sample size must be at least 1");
  return sigma * std::sqrt(2.0 * static_cast<double>(sample_size));
}

double sum_upper(double sigma) { return sigma * range_series_constant(); }

double range_series_constant() { return detail::range_coefficient_sum(); }

double sum_upper_symmetric(double sigma) {
  return 2.0 * cre_upper_symmetric(sigma);
}

double rychlik_delta(std::size_t j, std::size_t n) {
  if (n == 0 || j == 0 || j > n) {
    throw DomainError("rychlik_delta requires 1 <= j <= n");
  }
  double s = 0.0;
  for (std::size_t k = 1; k <= j; ++k) {
    s += 1.0 / static_cast<double>(n + 1 - k);
  }
  return s;
}

BoundReport check_all(const Distribution& d, const quad::Tolerance& tol,
                      std::vector<std::string>* warnings) {
  if (d.support().lower < 0.0) {
    throw DomainError(
        "bound report requires a non-negative support; " + d.key() +
        " extends below zero");
  }

  BoundReport report;
  report.distribution = d.key();
  report.mean = d.mean();
  report.sigma = std::sqrt(d.variance());

  // Measure once; a convergence failure disables dependent entries only.
  bool cre_ok = false;
  bool ce_ok = false;
  try {
    report.cre = entropy_measure(d, EntropyKind::CRE, tol, warnings).value;
    cre_ok = true;
  } catch (const ConvergenceError& e) {
    report.cre = e.best_estimate;
    if (warnings != nullptr) warnings->push_back(e.what());
  }
  try {
    report.ce = entropy_measure(d, EntropyKind::CE, tol, warnings).value;
    ce_ok = true;
  } catch (const ConvergenceError& e) {
    report.ce = e.best_estimate;
    if (warnings != nullptr) warnings->push_back(e.what());
  }
  report.sum = report.cre + report.ce;
  const bool sum_ok = cre_ok && ce_ok;

  const bool symmetric = d.symmetric_about().has_value();
  const bool bounded = d.bounded_support();
  const bool dfr = d.decreasing_failure_rate().value_or(false);
  const std::string dfr_reason =
      d.decreasing_failure_rate().has_value()
          ? "requires a decreasing failure rate"
          : "failure-rate monotonicity unknown";

  BoundEntry e1 = make_entry("cre_upper_hdg", false);
  evaluate_entry(&e1, true, "", cre_upper_hdg(report.sigma), report.cre,
                 cre_ok);
  report.entries.push_back(e1);

  BoundEntry e2 = make_entry("ce_lower_dfr", true);
  evaluate_entry(&e2, dfr, dfr_reason,
                 ce_lower_dfr(report.mean, d.second_moment()), report.ce,
                 ce_ok);
  report.entries.push_back(e2);

  BoundEntry e3 = make_entry("cre_upper_symmetric_bounded", false);
  evaluate_entry(&e3, symmetric && bounded,
                 symmetric ? "requires a bounded support"
                           : "requires a symmetric distribution",
                 cre_upper_symmetric_bounded(report.sigma), report.cre,
                 cre_ok);
  report.entries.push_back(e3);

  BoundEntry e4 = make_entry("cre_upper_symmetric", false);
  evaluate_entry(&e4, symmetric, "requires a symmetric distribution",
                 cre_upper_symmetric(report.sigma), report.cre, cre_ok);
  report.entries.push_back(e4);

  BoundEntry e5 = make_entry("sum_upper", false);
  evaluate_entry(&e5, true, "", sum_upper(report.sigma), report.sum, sum_ok);
  report.entries.push_back(e5);

  BoundEntry e6 = make_entry("sum_upper_symmetric", false);
  evaluate_entry(&e6, symmetric, "requires a symmetric distribution",
                 sum_upper_symmetric(report.sigma), report.sum, sum_ok);
  report.entries.push_back(e6);

  return report;
}

}  // namespace centropy
