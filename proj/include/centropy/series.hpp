#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centropy/distribution.hpp"

namespace centropy {

enum class SeriesKind { CRE, CE, WCRE, WCE, CreCeSum };

struct SeriesTerm {
  std::size_t n = 0;        // series index, 1-based
  double moment = 0.0;      // the extreme moment entering this term
  double coefficient = 0.0; // multiplier applied to the moment
  double term = 0.0;        // coefficient * moment
};

// A truncated extreme-moment series for one measure, with a certified
// enclosure of the limit. `partial_sum` is the truncated sum of the terms
// alone; `point_estimate` adds the measure's moment offset. Certified sides
// hold rigorously given exact moments; when a side cannot be certified
// (missing fourth moment for WCRE) it is +-infinity with its flag cleared.
struct SeriesApproximation {
  SeriesKind kind = SeriesKind::CRE;
  std::size_t m = 0;
  double partial_sum = 0.0;
  double point_estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool lower_certified = true;
  bool upper_certified = true;
  bool degenerate = false;  // zero-variance input: all fields zero
  bool converged = true;    // set by converge(); direct truncations are trivially "converged"
  std::vector<SeriesTerm> terms;
};

// CRE  = sum_{n>=1} E[max_{n+1}] / (n(n+1)) - E X
// CE   = E X - sum_{n>=1} E[min_{n+1}] / (n(n+1))
// WCRE = (1/2) sum_{n>=1} E[max_{n+1}^2] / (n(n+1)) - E X^2 / 2
// WCE  = E X^2 / 2 - (1/2) sum_{n>=1} E[min_{n+1}^2] / (n(n+1))
// sum_identity: CRE + CE = sum_{n>=1} (E[max_{n+1}] - E[min_{n+1}]) / (n(n+1))
SeriesApproximation cre_series(const Distribution& d, std::size_t m);
SeriesApproximation ce_series(const Distribution& d, std::size_t m);
SeriesApproximation wcre_series(const Distribution& d, std::size_t m);
SeriesApproximation wce_series(const Distribution& d, std::size_t m);
SeriesApproximation sum_identity(const Distribution& d, std::size_t m);

SeriesApproximation series_truncation(const Distribution& d, SeriesKind kind,
                                      std::size_t m);

// Smallest m <= m_max whose certified bracket width is at most target_width,
// then the series at that m with converged = true. If the width is finite
// but not achievable by m_max, returns the series at m_max with
// converged = false; if no finite width exists at all (uncertifiable side),
// returns a one-sided bracket at min(m_max, 1000) with converged = false
// rather than burning m_max terms on an enclosure that cannot close.
SeriesApproximation converge(const Distribution& d, SeriesKind kind,
                             double target_width, std::size_t m_max = 200000);

std::optional<SeriesKind> series_kind_from_string(std::string_view name);
std::string to_string(SeriesKind kind);

}  // namespace centropy
