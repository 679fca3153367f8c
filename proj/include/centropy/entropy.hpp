#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centropy/distribution.hpp"
#include "centropy/quadrature.hpp"

namespace centropy {

enum class EntropyKind { CRE, CE, WCRE, WCE };

enum class EntropyMethod { Quadrature, Series, ExactSum };

struct EntropyValue {
  EntropyKind kind = EntropyKind::CRE;
  double value = 0.0;
  EntropyMethod method = EntropyMethod::Quadrature;
  double error_estimate = 0.0;
};

// The four cumulative information measures of a non-negative law:
//   CRE  = -integral S log S dx          CE  = -integral F log F dx
//   WCRE = -integral x S log S dx        WCE = -integral x F log F dx
// with S = 1 - F. Computed by adaptive quadrature; empirical samples are
// delegated to empirical_plugin (their step cdf makes exact sums both
// faster and exact). DomainError when the support extends below zero;
// ConvergenceError (with the best estimate) when the budget runs out.
// For infinite supports, a vanishing-boundary-product probe appends a
// warning when the tail decays too slowly for the probe to certify.
EntropyValue cumulative_residual_entropy(const Distribution& d,
                                         const quad::Tolerance& tol = {},
                                         std::vector<std::string>* warnings = nullptr);
EntropyValue cumulative_entropy(const Distribution& d,
                                const quad::Tolerance& tol = {},
                                std::vector<std::string>* warnings = nullptr);
EntropyValue weighted_cumulative_residual_entropy(const Distribution& d,
                                                  const quad::Tolerance& tol = {},
                                                  std::vector<std::string>* warnings = nullptr);
EntropyValue weighted_cumulative_entropy(const Distribution& d,
                                         const quad::Tolerance& tol = {},
                                         std::vector<std::string>* warnings = nullptr);

EntropyValue entropy_measure(const Distribution& d, EntropyKind kind,
                             const quad::Tolerance& tol = {},
                             std::vector<std::string>* warnings = nullptr);

// Plug-in estimate from the empirical step cdf: exact finite gap sums, no
// quadrature. Fewer than two distinct values yields 0 with a warning.
EntropyValue empirical_plugin(const Distribution& d, EntropyKind kind,
                              std::vector<std::string>* warnings = nullptr);

std::optional<EntropyKind> entropy_kind_from_string(std::string_view name);
std::string to_string(EntropyKind kind);
std::string to_string(EntropyMethod method);

}  // namespace centropy
