#include "centropy/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "centropy/detail/coefficient_sums.hpp"
#include "centropy/detail/neumaier.hpp"
#include "centropy/errors.hpp"
#include "centropy/order_statistics.hpp"

namespace centropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Moments {
  double mean = 0.0;
  double second = 0.0;
  double sigma = 0.0;
  bool has_fourth = false;
  double sigma_of_square = 0.0;  // std dev of X^2, needs E X^4
};

Moments collect_moments(const Distribution& d) {
  Moments m;
  m.mean = d.mean();
  m.second = d.second_moment();
  m.sigma = std::sqrt(d.variance());
  if (d.fourth_moment().has_value()) {
    const double var_sq = *d.fourth_moment() - m.second * m.second;
    m.has_fourth = true;
    m.sigma_of_square = std::sqrt(std::max(0.0, var_sq));
  }
  return m;
}

// Certified bound on everything the truncation at m discards; infinity when
// the needed moment is missing. The maxima tails use the extreme-value
// moment bound (applied to X^2 for the weighted kind, which is where the
// fourth moment enters); the minima tails use 0 <= E[min^k] <= E[X^k].
double discarded_tail(SeriesKind kind, const Moments& mo, std::size_t m) {
  const double dm = static_cast<double>(m);
  switch (kind) {
    case SeriesKind::CRE:
      return mo.sigma * detail::hdg_coefficient_tail(m) + mo.mean / (dm + 1.0);
    case SeriesKind::CE:
      return mo.mean / (dm + 1.0);
    case SeriesKind::WCRE:
      if (!mo.has_fourth) return kInf;
      return 0.5 * (mo.sigma_of_square * detail::hdg_coefficient_tail(m) +
                    mo.second / (dm + 1.0));
    case SeriesKind::WCE:
      return 0.5 * mo.second / (dm + 1.0);
    case SeriesKind::CreCeSum:
      return mo.sigma * detail::range_coefficient_tail(m);
  }
  return kInf;
}

SeriesApproximation degenerate_result(SeriesKind kind) {
  SeriesApproximation s;
  s.kind = kind;
  s.m = 0;
  s.degenerate = true;
  return s;
}

SeriesApproximation evaluate(const Distribution& d, SeriesKind kind,
                             std::size_t m) {
  if (m == 0) throw DomainError("series truncation m must be at least 1");

  const Moments mo = collect_moments(d);
  if (mo.sigma <= 0.0) return degenerate_result(kind);

  SeriesApproximation s;
  s.kind = kind;
  s.m = m;
  s.terms.reserve(m);

  detail::NeumaierSum partial;
  for (std::size_t n = 1; n <= m; ++n) {
    const double dn = static_cast<double>(n);
    SeriesTerm t;
    t.n = n;
    switch (kind) {
      case SeriesKind::CRE:
        t.moment = mean_largest(d, n + 1);
        t.coefficient = 1.0 / (dn * (dn + 1.0));
        break;
      case SeriesKind::CE:
        t.moment = mean_smallest(d, n + 1);
        t.coefficient = 1.0 / (dn * (dn + 1.0));
        break;
      case SeriesKind::WCRE:
        t.moment = second_moment_extreme(d, Extreme::Largest, n + 1);
        t.coefficient = 0.5 / (dn * (dn + 1.0));
        break;
      case SeriesKind::WCE:
        t.moment = second_moment_extreme(d, Extreme::Smallest, n + 1);
        t.coefficient = 0.5 / (dn * (dn + 1.0));
        break;
      case SeriesKind::CreCeSum:
        t.moment = mean_largest(d, n + 1) - mean_smallest(d, n + 1);
        t.coefficient = 1.0 / (dn * (dn + 1.0));
        break;
    }
    t.term = t.coefficient * t.moment;
    partial.add(t.term);
    s.terms.push_back(t);
  }
  s.partial_sum = partial.value();

  const double tail = discarded_tail(kind, mo, m);
  switch (kind) {
    case SeriesKind::CRE:
      s.point_estimate = s.partial_sum - mo.mean;
      s.lower = s.point_estimate;
      s.upper = s.point_estimate + tail;
      break;
    case SeriesKind::CE:
      s.point_estimate = mo.mean - s.partial_sum;
      s.lower = s.point_estimate - tail;
      s.upper = s.point_estimate;
      break;
    case SeriesKind::WCRE:
      s.point_estimate = s.partial_sum - 0.5 * mo.second;
      s.lower = s.point_estimate;
      s.upper = s.point_estimate + tail;
      if (!mo.has_fourth) s.upper_certified = false;
      break;
    case SeriesKind::WCE:
      s.point_estimate = 0.5 * mo.second - s.partial_sum;
      s.lower = s.point_estimate - tail;
      s.upper = s.point_estimate;
      break;
    case SeriesKind::CreCeSum:
      s.point_estimate = s.partial_sum;
      s.lower = s.point_estimate;
      s.upper = s.point_estimate + tail;
      break;
  }
  return s;
}

}  // namespace

SeriesApproximation cre_series(const Distribution& d, std::size_t m) {
  return evaluate(d, SeriesKind::CRE, m);
}
SeriesApproximation ce_series(const Distribution& d, std::size_t m) {
  return evaluate(d, SeriesKind::CE, m);
}
SeriesApproximation wcre_series(const Distribution& d, std::size_t m) {
  return evaluate(d, SeriesKind::WCRE, m);
}
SeriesApproximation wce_series(const Distribution& d, std::size_t m) {
  return evaluate(d, SeriesKind::WCE, m);
}
SeriesApproximation sum_identity(const Distribution& d, std::size_t m) {
  return evaluate(d, SeriesKind::CreCeSum, m);
}

SeriesApproximation series_truncation(const Distribution& d, SeriesKind kind,
                                      std::size_t m) {
  return evaluate(d, kind, m);
}

SeriesApproximation converge(const Distribution& d, SeriesKind kind,
                             double target_width, std::size_t m_max) {
  if (!(target_width > 0.0)) {
    throw DomainError("target width must be positive");
  }
  if (m_max == 0) throw DomainError("m_max must be at least 1");

  const Moments mo = collect_moments(d);
  if (mo.sigma <= 0.0) return degenerate_result(kind);

  // The certified width depends only on the truncation point, never on the
  // computed moments, so the search costs no moment evaluations.
  auto width_at = [&](std::size_t m) { return discarded_tail(kind, mo, m); };

  if (std::isinf(width_at(m_max))) {
    // No certifiable enclosure (missing fourth moment): return a one-sided
    // bracket at a modest truncation instead of burning m_max terms.
    SeriesApproximation s = evaluate(d, kind, std::min<std::size_t>(m_max, 1000));
    s.converged = false;
    return s;
  }

  if (width_at(m_max) > target_width) {
    SeriesApproximation s = evaluate(d, kind, m_max);
    s.converged = false;
    return s;
  }

  std::size_t lo = 1;
  std::size_t hi = m_max;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (width_at(mid) <= target_width) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  SeriesApproximation s = evaluate(d, kind, lo);
  s.converged = true;
  return s;
}

std::optional<SeriesKind> series_kind_from_string(std::string_view name) {
  if (name == "cre") return SeriesKind::CRE;
  if (name == "ce") return SeriesKind::CE;
  if (name == "wcre") return SeriesKind::WCRE;
  if (name == "wce") return SeriesKind::WCE;
  if (name == "sum") return SeriesKind::CreCeSum;
  return std::nullopt;
}

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::CRE:
      return "cre";
    case SeriesKind::CE:
      return "ce";
    case SeriesKind::WCRE:
      return "wcre";
    case SeriesKind::WCE:
      return "wce";
    case SeriesKind::CreCeSum:
      return "sum";
  }
  return "cre";
}

}  // namespace centropy
