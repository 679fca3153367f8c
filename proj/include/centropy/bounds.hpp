#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "centropy/distribution.hpp"
#include "centropy/quadrature.hpp"

namespace centropy {

struct BoundEntry {
  std::string name;
  bool applicable = false;
  std::string reason;        // why not applicable; empty otherwise
  bool is_lower = false;     // true: bound <= measured is the claim
  double bound_value = 0.0;
  double measured_value = 0.0;
  bool satisfied = true;     // vacuously true when not applicable
  double slack = 0.0;        // bound - measured (upper) or measured - bound (lower)
};

struct BoundReport {
  std::string distribution;
  double mean = 0.0;
  double sigma = 0.0;
  double cre = 0.0;
  double ce = 0.0;
  double sum = 0.0;  // cre + ce
  std::vector<BoundEntry> entries;
};

// Hartley-David-Gumbel bound on the expected maximum of n i.i.d. draws:
// E[max_n] <= mu + sigma (n-1) / sqrt(2n-1).
double hdg_extreme_bound(std::size_t n, double mu, double sigma);

// CRE <= sigma * sum_{n>=1} 1/((n+1) sqrt(2n+1)).
double cre_upper_hdg(double sigma);
double hdg_series_constant();  // ~ 1.2107897

// For decreasing failure rate laws:
// CE >= mean - sqrt(E X^2 / 2) (2 - pi^2/6), with equality at exponential.
double ce_lower_dfr(double mean, double second_moment);

// c(n) = sqrt(2 (1 - 1/binom(2n-2, n-1)) / (2n-1)); c(1) = 0.
// Log-space binomials keep n > 30 finite.
double c_of_n(std::size_t n);

// B(n, n) = Gamma(n)^2 / Gamma(2n).
double complete_beta(std::size_t n);

// Symmetric + bounded support: CRE <= (sigma/2) sum_{n>=1} c(n+1)/n.
double cre_upper_symmetric_bounded(double sigma);
double dn_series_constant();  // ~ 2.0813298

// Symmetric support: CRE <= (sigma/sqrt(2)) sum_{n>=1} (1/n) sqrt(1/(2n+1) - B(n+1, n+1)).
double cre_upper_symmetric(double sigma);
double symmetric_series_constant();            // ~ 1.4717224
double symmetric_series_partial(std::size_t m);

// E[range of a sample of size n] <= sigma sqrt(2 n); feeds the sum bound.
double range_bound(std::size_t sample_size, double sigma);

// CRE + CE <= sigma * sum_{n>=1} sqrt(2(n+1)) / (n(n+1)).
double sum_upper(double sigma);
double range_series_constant();  // ~ 3.0886558

// Symmetric case: CRE + CE <= 2 * cre_upper_symmetric(sigma), exactly twice.
double sum_upper_symmetric(double sigma);

// delta_j = sum_{k=1}^{j} 1/(n+1-k) for 1 <= j <= n; the quantile-transform
// representation is valid when every delta_j <= 2. delta_1 = 1/n always
// qualifies; delta_n = H_n exceeds 2 from n = 4 on.
double rychlik_delta(std::size_t j, std::size_t n);

// Evaluates every bound against quadrature measurements, gating each on the
// distribution's metadata. The report always carries six entries:
// cre_upper_hdg, ce_lower_dfr, cre_upper_symmetric_bounded,
// cre_upper_symmetric, sum_upper, sum_upper_symmetric.
// DomainError for supports extending below zero; a convergence failure in
// one measurement disables the dependent entries without aborting the rest.
BoundReport check_all(const Distribution& d, const quad::Tolerance& tol = {},
                      std::vector<std::string>* warnings = nullptr);

}  // namespace centropy
