#include "centropy/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "centropy/detail/neumaier.hpp"
#include "centropy/errors.hpp"

namespace centropy {
namespace {

struct KindTraits {
  bool residual;  // integrand uses the survival function
  bool weighted;  // integrand carries a factor x
};

KindTraits traits(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::CRE:
      return {true, false};
    case EntropyKind::CE:
      return {false, false};
    case EntropyKind::WCRE:
      return {true, true};
    case EntropyKind::WCE:
      return {false, true};
  }
  return {true, false};
}

void append_warning(std::vector<std::string>* warnings,
                    const std::string& message) {
  if (warnings != nullptr) warnings->push_back(message);
}

// For infinite supports the defining integrals assume the boundary products
// x S log S (resp. x^2 for the weighted kinds) vanish at infinity. Probe
// deep in the tail and surface slow decay as a warning, never an error.
void check_boundary_product(const Distribution& d, EntropyKind kind,
                            std::vector<std::string>* warnings) {
  if (warnings == nullptr) return;
  if (!std::isinf(d.support().upper)) return;
  const KindTraits t = traits(kind);
  const double x = d.quantile(1.0 - 1e-13);
  const double u = t.residual ? d.survival(x) : d.cdf(x);
  const double product =
      (t.weighted ? x * x : x) * quad::xlogx(std::min(1.0, std::max(0.0, u)));
  if (std::abs(product) > 1e-6) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%s boundary product %.3g at x = %.6g decays slowly; the "
                  "vanishing-limit hypothesis could not be certified",
                  to_string(kind).c_str(), product, x);
    append_warning(warnings, buf);
  }
}

EntropyValue measure_by_quadrature(const Distribution& d, EntropyKind kind,
                                   const quad::Tolerance& tol,
                                   std::vector<std::string>* warnings) {
  if (d.support().lower < 0.0) {
    throw DomainError("cumulative measures require a non-negative support; " +
                      d.key() + " extends below zero");
  }
  if (d.is_empirical()) {
    return empirical_plugin(d, kind, warnings);
  }

  const KindTraits t = traits(kind);
  auto integrand = [&d, t](double x) {
    const double u = t.residual ? d.survival(x) : d.cdf(x);
    const double core = -quad::xlogx(u);
    return t.weighted ? x * core : core;
  };

  const quad::IntegralResult r =
      quad::integrate(integrand, d.support().lower, d.support().upper, tol);
  if (!r.converged) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%s quadrature exhausted %zu evaluations (error estimate "
                  "%.3g); best estimate %.12g",
                  to_string(kind).c_str(), r.evaluations,
                  r.abs_error_estimate, r.value);
    throw ConvergenceError(buf, r.value);
  }
  check_boundary_product(d, kind, warnings);

  EntropyValue v;
  v.kind = kind;
  v.value = r.value;
  v.method = EntropyMethod::Quadrature;
  v.error_estimate = r.abs_error_estimate;
  return v;
}

}  // namespace

EntropyValue cumulative_residual_entropy(const Distribution& d,
                                         const quad::Tolerance& tol,
                                         std::vector<std::string>* warnings) {
  return entropy_measure(d, EntropyKind::CRE, tol, warnings);
}

EntropyValue cumulative_entropy(const Distribution& d,
                                const quad::Tolerance& tol,
                                std::vector<std::string>* warnings) {
  return entropy_measure(d, EntropyKind::CE, tol, warnings);
}

EntropyValue weighted_cumulative_residual_entropy(
    const Distribution& d, const quad::Tolerance& tol,
    std::vector<std::string>* warnings) {
  return entropy_measure(d, EntropyKind::WCRE, tol, warnings);
}

EntropyValue weighted_cumulative_entropy(const Distribution& d,
                                         const quad::Tolerance& tol,
                                         std::vector<std::string>* warnings) {
  return entropy_measure(d, EntropyKind::WCE, tol, warnings);
}

EntropyValue entropy_measure(const Distribution& d, EntropyKind kind,
                             const quad::Tolerance& tol,
                             std::vector<std::string>* warnings) {
  return measure_by_quadrature(d, kind, tol, warnings);
}

EntropyValue empirical_plugin(const Distribution& d, EntropyKind kind,
                              std::vector<std::string>* warnings) {
  if (!d.is_empirical()) {
    throw DomainError("empirical_plugin requires an empirical distribution");
  }

  EntropyValue v;
  v.kind = kind;
  v.method = EntropyMethod::ExactSum;
  v.error_estimate = 0.0;

  const auto& xs = d.distinct_values();
  if (xs.size() < 2) {
    append_warning(warnings,
                   "fewer than two distinct sample values; plug-in measure "
                   "is zero");
    v.value = 0.0;
    return v;
  }

  // The step cdf is constant between consecutive distinct values, so each
  // measure is a finite sum of exact segment contributions.
  const KindTraits t = traits(kind);
  const auto& cum = d.cumulative_counts();
  const double total = static_cast<double>(d.sample_count());
  detail::NeumaierSum acc;
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    const double f = static_cast<double>(cum[j]) / total;
    const double u = t.residual ? 1.0 - f : f;
    const double seg =
        t.weighted ? 0.5 * (xs[j + 1] * xs[j + 1] - xs[j] * xs[j])
                   : xs[j + 1] - xs[j];
    acc.add(-quad::xlogx(u) * seg);
  }
  v.value = acc.value();
  return v;
}

std::optional<EntropyKind> entropy_kind_from_string(std::string_view name) {
  if (name == "cre") return EntropyKind::CRE;
  if (name == "ce") return EntropyKind::CE;
  if (name == "wcre") return EntropyKind::WCRE;
  if (name == "wce") return EntropyKind::WCE;
  return std::nullopt;
}

std::string to_string(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::CRE:
      return "cre";
    case EntropyKind::CE:
      return "ce";
    case EntropyKind::WCRE:
      return "wcre";
    case EntropyKind::WCE:
      return "wce";
  }
  return "cre";
}

std::string to_string(EntropyMethod method) {
  switch (method) {
    case EntropyMethod::Quadrature:
      return "quadrature";
    case EntropyMethod::Series:
      return "series";
    case EntropyMethod::ExactSum:
      return "exact";
  }
  return "quadrature";
}

}  // namespace centropy
