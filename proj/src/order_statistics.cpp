#include "centropy/order_statistics.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "centropy/detail/coefficient_sums.hpp"
#include "centropy/detail/counter_rng.hpp"
#include "centropy/detail/neumaier.hpp"
#include "centropy/errors.hpp"

namespace centropy {
namespace {

std::atomic<bool> g_cache_enabled{true};
std::mutex g_cache_mutex;
std::unordered_map<std::string, double>& cache_map() {
  static std::unordered_map<std::string, double> m;
  return m;
}

std::string cache_key(const Distribution& d, Extreme which, std::size_t n,
                      int order) {
  std::string key = d.key();
  key += which == Extreme::Largest ? "|L|" : "|S|";
  key += std::to_string(n);
  key += '|';
  key += std::to_string(order);
  return key;
}

// Growable harmonic sums H_n and H^{(2)}_n for the exponential closed forms;
// rebuilding them per call would make series truncations quadratic.
void harmonic_numbers(std::size_t n, double* h1, double* h2) {
  static std::mutex mu;
  static std::vector<double> hs{0.0};
  static std::vector<double> h2s{0.0};
  std::lock_guard<std::mutex> lock(mu);
  while (hs.size() <= n) {
    const double k = static_cast<double>(hs.size());
    hs.push_back(hs.back() + 1.0 / k);
    h2s.push_back(h2s.back() + 1.0 / (k * k));
  }
  *h1 = hs[n];
  *h2 = h2s[n];
}

bool has_closed_form(Distribution::Family f) {
  return f == Distribution::Family::Exponential ||
         f == Distribution::Family::Uniform ||
         f == Distribution::Family::Empirical;
}

double closed_form_moment(const Distribution& d, Extreme which, std::size_t n,
                          int order) {
  const double dn = static_cast<double>(n);
  switch (d.family()) {
    case Distribution::Family::Exponential: {
      const double lambda = 1.0 / d.mean();
      if (which == Extreme::Smallest) {
        return order == 1 ? 1.0 / (dn * lambda)
                          : 2.0 / (dn * dn * lambda * lambda);
      }
      double h1 = 0.0;
      double h2 = 0.0;
      harmonic_numbers(n, &h1, &h2);
      return order == 1 ? h1 / lambda : (h1 * h1 + h2) / (lambda * lambda);
    }
    case Distribution::Family::Uniform: {
      const double a = 2.0 * d.mean();
      if (which == Extreme::Largest) {
        return order == 1 ? a * dn / (dn + 1.0) : a * a * dn / (dn + 2.0);
      }
      return order == 1 ? a / (dn + 1.0)
                        : 2.0 * a * a / ((dn + 1.0) * (dn + 2.0));
    }
    case Distribution::Family::Empirical: {
      // E[extreme^order] = integral order*x^{order-1} P(extreme > x) dx,
      // exact over the step cdf's constancy intervals.
      const auto& xs = d.distinct_values();
      const auto& cum = d.cumulative_counts();
      const double total = static_cast<double>(d.sample_count());
      detail::NeumaierSum acc;
      double prev_x = 0.0;
      double prev_cdf = 0.0;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        double p_exceed;
        if (which == Extreme::Largest) {
          p_exceed = prev_cdf == 0.0
                         ? 1.0
                         : -std::expm1(dn * std::log(prev_cdf));
        } else {
          p_exceed = std::pow(1.0 - prev_cdf, dn);
        }
        const double seg = order == 1 ? xs[j] - prev_x
                                      : xs[j] * xs[j] - prev_x * prev_x;
        acc.add(p_exceed * seg);
        prev_x = xs[j];
        prev_cdf = cum[j] / total;
      }
      return acc.value();
    }
    default:
      break;
  }
  throw Error("closed_form_moment: unsupported family");
}

double quadrature_moment(const Distribution& d, Extreme which, std::size_t n,
                         int order, const quad::Tolerance& tol) {
  const double dn = static_cast<double>(n);

  if (d.family() == Distribution::Family::StandardNormal) {
    // Probability-domain form: E[max^o] = int_0^1 n p^{n-1} Q(p)^o dp;
    // the minimum follows by the symmetry of Q about p = 1/2.
    const bool smallest = which == Extreme::Smallest;
    auto integrand = [&d, dn, order](double p) {
      const double q = d.quantile(p);
      const double weight = dn * std::exp((dn - 1.0) * std::log(p));
      return weight * (order == 1 ? q : q * q);
    };
    const double value = quad::integrate(integrand, 0.0, 1.0, tol).value;
    if (!smallest) return value;
    return order == 1 ? -value : value;
  }

  // Survival form on a non-negative support.
  const double hi = d.support().upper;
  auto exceed = [&d, dn, which](double x) {
    if (which == Extreme::Largest) {
      const double lc = d.log_cdf(x);
      return -std::expm1(dn * lc);
    }
    const double ls = d.log_survival(x);
    return std::exp(dn * ls);
  };
  auto integrand = [order, &exceed](double x) {
    const double p = exceed(x);
    if (p == 0.0) return 0.0;
    return order == 1 ? p : 2.0 * x * p;
  };
  quad::IntegralResult r = quad::integrate(integrand, 0.0, hi, tol);
  if (!r.converged) {
    throw ConvergenceError(
        "extreme moment quadrature did not converge for " + d.key(), r.value);
  }
  return r.value;
}

}  // namespace

MomentRecord extreme_moment(const Distribution& d, Extreme which,
                            std::size_t n, int order,
                            const quad::Tolerance& tol) {
  if (n == 0) throw DomainError("sample size n must be at least 1");
  if (order != 1 && order != 2) {
    throw DomainError("moment order must be 1 or 2");
  }

  MomentRecord rec;
  rec.k = which == Extreme::Largest ? n : 1;
  rec.n = n;
  rec.order = order;
  rec.method = has_closed_form(d.family()) ? MomentMethod::ClosedForm
                                           : MomentMethod::Quadrature;

  if (n == 1) {
    rec.value = order == 1 ? d.mean() : d.second_moment();
    return rec;
  }

  const bool use_cache = g_cache_enabled.load(std::memory_order_relaxed);
  std::string key;
  if (use_cache) {
    key = cache_key(d, which, n, order);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache_map().find(key);
    if (it != cache_map().end()) {
      rec.value = it->second;
      return rec;
    }
  }

  rec.value = has_closed_form(d.family())
                  ? closed_form_moment(d, which, n, order)
                  : quadrature_moment(d, which, n, order, tol);

  if (use_cache) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache_map().emplace(std::move(key), rec.value);
  }
  return rec;
}

double mean_largest(const Distribution& d, std::size_t n) {
  return extreme_moment(d, Extreme::Largest, n, 1).value;
}

double mean_smallest(const Distribution& d, std::size_t n) {
  return extreme_moment(d, Extreme::Smallest, n, 1).value;
}

double second_moment_extreme(const Distribution& d, Extreme which,
                             std::size_t n) {
  return extreme_moment(d, which, n, 2).value;
}

StandardizedMoment standardized_mean_largest(const Distribution& d,
                                             std::size_t n) {
  const double var = d.variance();
  if (var <= 0.0) {
    throw DomainError("standardized moment undefined: variance is zero");
  }
  StandardizedMoment s;
  s.n = n;
  s.value = (mean_largest(d, n) - d.mean()) / std::sqrt(var);
  return s;
}

McEstimate mc_extreme_moment(const Distribution& d, Extreme which,
                             std::size_t n, int order, std::size_t samples,
                             std::uint64_t seed, unsigned threads) {
  if (n == 0) throw DomainError("sample size n must be at least 1");
  if (order != 1 && order != 2) {
    throw DomainError("moment order must be 1 or 2");
  }
  if (samples == 0) throw DomainError("sample count must be at least 1");

  constexpr std::size_t kBlock = 65536;
  const std::size_t n_blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::pair<double, double>> block_sums(n_blocks);

  auto run_block = [&](std::size_t b) {
    const std::size_t begin = b * kBlock;
    const std::size_t end = std::min(samples, begin + kBlock);
    detail::NeumaierSum s1, s2;
    for (std::size_t i = begin; i < end; ++i) {
      double extreme = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double u = detail::counter_uniform01(
            seed, static_cast<std::uint64_t>(i) * n + j);
        const double x = d.quantile(u);
        if (j == 0) {
          extreme = x;
        } else if (which == Extreme::Largest) {
          extreme = std::max(extreme, x);
        } else {
          extreme = std::min(extreme, x);
        }
      }
      const double v = order == 1 ? extreme : extreme * extreme;
      s1.add(v);
      s2.add(v * v);
    }
    block_sums[b] = {s1.value(), s2.value()};
  };

  const unsigned workers =
      std::min<unsigned>(threads == 0 ? 1 : threads,
                         static_cast<unsigned>(n_blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
          if (b >= n_blocks) return;
          run_block(b);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // Blocks are combined in index order regardless of which thread ran them.
  detail::NeumaierSum total1, total2;
  for (const auto& [a, b] : block_sums) {
    total1.add(a);
    total2.add(b);
  }
  const double count = static_cast<double>(samples);
  McEstimate out;
  out.samples = samples;
  out.estimate = total1.value() / count;
  const double var =
      std::max(0.0, total2.value() / count - out.estimate * out.estimate);
  out.standard_error = std::sqrt(var / count);
  return out;
}

HarterComparison harter_comparison(std::size_t m) {
  if (m == 0) throw DomainError("truncation point m must be at least 1");
  const Distribution normal = Distribution::standard_normal();
  detail::NeumaierSum left;
  for (std::size_t n = 1; n <= m; ++n) {
    const double dn = static_cast<double>(n);
    left.add(mean_largest(normal, n + 1) / (dn * (dn + 1.0)));
  }
  HarterComparison h;
  h.m = m;
  h.left = left.value();
  h.right = detail::symmetric_coefficient_partial(m) / std::sqrt(2.0);
  h.strictly_less = h.left < h.right;
  return h;
}

void set_moment_cache_enabled(bool enabled) {
  g_cache_enabled.store(enabled, std::memory_order_relaxed);
}

void clear_moment_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  cache_map().clear();
}

std::size_t moment_cache_size() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cache_map().size();
}

}  // namespace centropy
