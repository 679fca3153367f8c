#pragma once

#include <cstddef>
#include <cstdint>

#include "centropy/distribution.hpp"
#include "centropy/quadrature.hpp"

namespace centropy {

enum class Extreme { Smallest, Largest };

enum class MomentMethod { ClosedForm, Quadrature, MonteCarlo };

struct MomentRecord {
  std::size_t k = 1;      // index of the order statistic: 1 or n
  std::size_t n = 1;      // sample size
  int order = 1;          // moment order, 1 or 2
  double value = 0.0;
  MomentMethod method = MomentMethod::ClosedForm;
};

struct StandardizedMoment {
  std::size_t n = 1;
  double value = 0.0;  // (E max_n - mean) / sigma
};

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

struct HarterComparison {
  std::size_t m = 0;
  double left = 0.0;   // sum_{n=1}^{m} E[max of n+1 standard normals] / (n(n+1))
  double right = 0.0;  // matching truncated coefficient bound
  bool strictly_less = false;
};

// E[(extreme of an i.i.d. sample of size n)^order], order in {1, 2}.
// Closed forms for exponential and uniform, exact gap sums for empirical
// samples, probability-domain quadrature for the standard normal, and
// survival-form quadrature otherwise. Results are memoized (see below).
MomentRecord extreme_moment(const Distribution& d, Extreme which,
                            std::size_t n, int order,
                            const quad::Tolerance& tol = {});

double mean_largest(const Distribution& d, std::size_t n);
double mean_smallest(const Distribution& d, std::size_t n);
double second_moment_extreme(const Distribution& d, Extreme which,
                             std::size_t n);

// (E[max_n] - mean) / sigma; DomainError when the variance is zero.
StandardizedMoment standardized_mean_largest(const Distribution& d,
                                             std::size_t n);

// Monte Carlo oracle for the same quantity, deliberately independent of the
// quadrature path: simulates `samples` draws of the extreme of n inverse-
// transform variates. The counter-based generator and fixed-size block
// reduction make the result bitwise identical for any thread count.
McEstimate mc_extreme_moment(const Distribution& d, Extreme which,
                             std::size_t n, int order, std::size_t samples,
                             std::uint64_t seed, unsigned threads = 1);

// Truncated expected-maxima series for the standard normal against the
// symmetric coefficient bound; both sides share the truncation point m.
HarterComparison harter_comparison(std::size_t m = 99);

// Process-wide moment memo cache.
void set_moment_cache_enabled(bool enabled);
void clear_moment_cache();
std::size_t moment_cache_size();

}  // namespace centropy
