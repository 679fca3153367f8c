#include "centropy/detail/coefficient_sums.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <vector>

#include "centropy/detail/neumaier.hpp"

namespace centropy::detail {
namespace {

// Closed-form integral remainders for the coefficient series. Each bounds
// sum_{n>N} g(n) from above because g is decreasing.
//
// integral_{N}^{inf} dn / ((n+1) sqrt(2n+1)) = pi - 2 atan(sqrt(2N+1))
double hdg_integral_tail(double n0) {
  return M_PI - 2.0 * std::atan(std::sqrt(2.0 * n0 + 1.0));
}

// integral_{N}^{inf} sqrt(2) dn / (n sqrt(n+1)) = sqrt(2) ln((u+1)/(u-1)),
// u = sqrt(N+1)
double range_integral_tail(double n0) {
  const double u = std::sqrt(n0 + 1.0);
  return std::sqrt(2.0) * std::log((u + 1.0) / (u - 1.0));
}

// integral_{N}^{inf} dn / (n sqrt(2n+1)) = ln((u+1)/(u-1)), u = sqrt(2N+1)
double central_integral_tail(double n0) {
  const double u = std::sqrt(2.0 * n0 + 1.0);
  return std::log((u + 1.0) / (u - 1.0));
}

double hdg_term(std::size_t n) {
  const double dn = static_cast<double>(n);
  return 1.0 / ((dn + 1.0) * std::sqrt(2.0 * dn + 1.0));
}

double range_term(std::size_t n) {
  const double dn = static_cast<double>(n);
  return std::sqrt(2.0) / (dn * std::sqrt(dn + 1.0));
}

double symmetric_term(std::size_t n) {
  const double dn = static_cast<double>(n);
  const double gap = 1.0 / (2.0 * dn + 1.0) - complete_beta_impl(n + 1);
  return std::sqrt(std::max(0.0, gap)) / dn;
}

double dn_term(std::size_t n) { return c_of_n_impl(n + 1) / static_cast<double>(n); }

// Thread-safe growable prefix sums P[m] = sum_{n=1}^{m} g(n).
class PrefixTable {
 public:
  explicit PrefixTable(double (*g)(std::size_t)) : g_(g) {}

  double prefix(std::size_t m) {
    std::lock_guard<std::mutex> lock(mu_);
    while (prefix_.size() <= m) {
      acc_.add(g_(prefix_.size()));
      prefix_.push_back(acc_.value());
    }
    return prefix_[m];
  }

 private:
  double (*g_)(std::size_t);
  std::mutex mu_;
  std::vector<double> prefix_{0.0};
  NeumaierSum acc_;
};

double summed_constant(double (*g)(std::size_t), std::size_t n_terms,
                       double (*integral_tail)(double)) {
  NeumaierSum s;
  for (std::size_t n = 1; n <= n_terms; ++n) s.add(g(n));
  return s.value() + integral_tail(static_cast<double>(n_terms));
}

}  // namespace

double complete_beta_impl(std::size_t n) {
  const double dn = static_cast<double>(n);
  return std::exp(2.0 * std::lgamma(dn) - std::lgamma(2.0 * dn));
}

double c_of_n_impl(std::size_t n) {
  if (n == 1) return 0.0;
  double inv_binom;
  if (n <= 30) {
    double b = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
      b *= static_cast<double>(n - 1 + i) / static_cast<double>(i);
    }
    inv_binom = 1.0 / b;
  } else {
    const double dn = static_cast<double>(n);
    const double lb =
        std::lgamma(2.0 * dn - 1.0) - 2.0 * std::lgamma(dn);
    inv_binom = lb < 700.0 ? std::exp(-lb) : 0.0;
  }
  const double dn = static_cast<double>(n);
  return std::sqrt(2.0 * (1.0 - inv_binom) / (2.0 * dn - 1.0));
}

double hdg_coefficient_sum() {
  static const double v = summed_constant(hdg_term, 2'000'000, hdg_integral_tail);
  return v;
}

double hdg_coefficient_tail(std::size_t m) {
  if (m == 0) return hdg_coefficient_sum();
  static PrefixTable table(hdg_term);
  return std::max(0.0, hdg_coefficient_sum() - table.prefix(m));
}

double range_coefficient_sum() {
  static const double v =
      summed_constant(range_term, 2'000'000, range_integral_tail);
  return v;
}

double range_coefficient_tail(std::size_t m) {
  if (m == 0) return range_coefficient_sum();
  static PrefixTable table(range_term);
  return std::max(0.0, range_coefficient_sum() - table.prefix(m));
}

double symmetric_coefficient_partial(std::size_t m) {
  static PrefixTable table(symmetric_term);
  return table.prefix(m);
}

double symmetric_coefficient_sum() {
  // The beta term underflows long before n = 100000; the remainder of the
  // dominating 1/(n sqrt(2n+1)) series bounds the discarded tail.
  static const double v =
      summed_constant(symmetric_term, 100'000, central_integral_tail);
  return v;
}

double dn_coefficient_sum() {
  static const double v = [] {
    NeumaierSum s;
    for (std::size_t n = 1; n <= 100'000; ++n) s.add(dn_term(n));
    // c(n+1) <= sqrt(2/(2n+1)) gives the same dominating series as above,
    // scaled by sqrt(2).
    return s.value() + std::sqrt(2.0) * central_integral_tail(100'000.0);
  }();
  return v;
}

}  // namespace centropy::detail
