#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "centropy/distribution.hpp"
#include "centropy/entropy.hpp"
#include "centropy/errors.hpp"
#include "centropy/order_statistics.hpp"
#include "centropy/series.hpp"

using namespace centropy;

namespace {

constexpr double kPi2Over6 = M_PI * M_PI / 6.0;

// Quadrature-route truth, cached so the containment sweeps stay cheap.
double true_value(const std::string& spec, SeriesKind kind) {
  static std::map<std::pair<std::string, int>, double> cache;
  const auto key = std::make_pair(spec, static_cast<int>(kind));
  const auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  const Distribution d = parse_spec(spec);
  double v = 0.0;
  switch (kind) {
    case SeriesKind::CRE:
      v = entropy_measure(d, EntropyKind::CRE).value;
      break;
    case SeriesKind::CE:
      v = entropy_measure(d, EntropyKind::CE).value;
      break;
    case SeriesKind::WCRE:
      v = entropy_measure(d, EntropyKind::WCRE).value;
      break;
    case SeriesKind::WCE:
      v = entropy_measure(d, EntropyKind::WCE).value;
      break;
    case SeriesKind::CreCeSum:
      v = entropy_measure(d, EntropyKind::CRE).value +
          entropy_measure(d, EntropyKind::CE).value;
      break;
  }
  cache.emplace(key, v);
  return v;
}

}  // namespace

TEST_CASE("exponential CRE truncation at m = 3 from harmonic numbers") {
  const SeriesApproximation ap =
      cre_series(Distribution::exponential(1.0), 3);
  // H_2/2 + H_3/6 + H_4/12 - 1.
  const double expected = 1.5 / 2.0 + (11.0 / 6.0) / 6.0 + (25.0 / 12.0) / 12.0
                          - 1.0;
  CHECK(ap.m == 3);
  CHECK(ap.point_estimate == doctest::Approx(expected).epsilon(1e-12));
  CHECK(ap.point_estimate == doctest::Approx(0.2291666667).epsilon(1e-9));
  CHECK(ap.lower == doctest::Approx(ap.point_estimate));
  CHECK(ap.lower <= 1.0);
  CHECK(ap.upper >= 1.0);  // the bracket must contain CRE(exp) = 1
  CHECK(ap.lower_certified);
  CHECK(ap.upper_certified);
  REQUIRE(ap.terms.size() == 3);
  CHECK(ap.terms[0].n == 1);
  CHECK(ap.terms[0].moment == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(ap.terms[0].coefficient == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ap.terms[2].term ==
        doctest::Approx(ap.terms[2].moment * ap.terms[2].coefficient));
}

TEST_CASE("exponential CE truncation at m = 2") {
  const SeriesApproximation ap = ce_series(Distribution::exponential(1.0), 2);
  // 1 - [ (1/2)/2 + (1/3)/6 ].
  CHECK(ap.point_estimate == doctest::Approx(0.6944444444).epsilon(1e-9));
  CHECK(ap.upper == doctest::Approx(ap.point_estimate));
  CHECK(ap.lower == doctest::Approx(ap.point_estimate - 1.0 / 3.0));
  CHECK(ap.lower <= kPi2Over6 - 1.0);
  CHECK(ap.upper >= kPi2Over6 - 1.0);
}

TEST_CASE("weighted series truncations from closed-form moments") {
  // Uniform WCRE at m = 1: (1/2) mu2(2:2) / 2 - EX^2/2 = 1/8 - 1/6 < 0.
  const SeriesApproximation wcre_u =
      wcre_series(Distribution::uniform(1.0), 1);
  CHECK(wcre_u.point_estimate == doctest::Approx(-1.0 / 24.0).epsilon(1e-12));
  CHECK(wcre_u.lower == doctest::Approx(wcre_u.point_estimate));
  CHECK(wcre_u.lower <= 5.0 / 36.0);
  CHECK(wcre_u.upper >= 5.0 / 36.0);

  // Exponential WCE at m = 3: 1 - (1/2)(1/4 + 1/27 + 1/96), upper side.
  const SeriesApproximation wce_e = wce_series(Distribution::exponential(1.0), 3);
  CHECK(wce_e.upper == doctest::Approx(0.8512731481).epsilon(1e-9));
  CHECK(wce_e.upper == doctest::Approx(wce_e.point_estimate));
  CHECK(wce_e.lower == doctest::Approx(wce_e.point_estimate - 0.25));
}

TEST_CASE("the truncated sum identity is the difference of the two series") {
  for (const char* spec : {"exp(lambda=1)", "table1:row6"}) {
    const Distribution d = parse_spec(spec);
    for (std::size_t m : {1, 4, 10}) {
      const SeriesApproximation sum = sum_identity(d, m);
      const SeriesApproximation cre = cre_series(d, m);
      const SeriesApproximation ce = ce_series(d, m);
      INFO("spec = ", spec, ", m = ", m);
      CHECK(sum.partial_sum ==
            doctest::Approx(cre.partial_sum - ce.partial_sum).epsilon(1e-12));
      CHECK(sum.point_estimate ==
            doctest::Approx(cre.point_estimate + ce.point_estimate)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("partial sums agree with the telescoped form") {
  const Distribution d = Distribution::exponential(1.0);
  const std::size_t m = 40;
  const SeriesApproximation ap = cre_series(d, m);
  double telescoped = 0.0;
  for (std::size_t n = 1; n <= m; ++n) {
    const double mu = mean_largest(d, n + 1);
    telescoped += mu * (1.0 / static_cast<double>(n) -
                        1.0 / static_cast<double>(n + 1));
  }
  CHECK(ap.partial_sum == doctest::Approx(telescoped).epsilon(1e-12));
}

TEST_CASE("certified brackets contain the quadrature truth everywhere") {
  const std::vector<std::string> specs = {"exp(lambda=1)", "uniform(a=1)",
                                          "power(k=2)",    "table1:row3",
                                          "table1:row4",   "table1:row6"};
  const SeriesKind kinds[] = {SeriesKind::CRE, SeriesKind::CE,
                              SeriesKind::WCRE, SeriesKind::WCE,
                              SeriesKind::CreCeSum};
  for (const std::string& spec : specs) {
    const Distribution d = parse_spec(spec);
    for (SeriesKind kind : kinds) {
      const double truth = true_value(spec, kind);
      double prev_width = std::numeric_limits<double>::infinity();
      for (std::size_t m : {1, 2, 5, 10, 50}) {
        const SeriesApproximation ap = series_truncation(d, kind, m);
        INFO("spec = ", spec, ", kind = ", to_string(kind), ", m = ", m);
        CHECK(ap.lower_certified);
        CHECK(ap.lower <= truth + 1e-9);
        if (ap.upper_certified) {
          CHECK(ap.upper >= truth - 1e-9);
          const double width = ap.upper - ap.lower;
          CHECK(width <= prev_width + 1e-12);  // brackets tighten with m
          prev_width = width;
        } else {
          // Only the Lomax weighted residual series loses its upper side
          // (the fourth moment diverges).
          CHECK(spec == "table1:row4");
          CHECK(kind == SeriesKind::WCRE);
          CHECK(std::isinf(ap.upper));
        }
      }
    }
  }
}

TEST_CASE("a long CE truncation pins down the Euler-series value") {
  const SeriesApproximation ap = ce_series(Distribution::exponential(1.0), 10000);
  CHECK(ap.upper - ap.lower < 2e-4);
  CHECK(ap.lower <= kPi2Over6 - 1.0);
  CHECK(ap.upper >= kPi2Over6 - 1.0);
}

TEST_CASE("converge finds the smallest certified truncation") {
  const Distribution e = Distribution::exponential(1.0);
  const SeriesApproximation ap = converge(e, SeriesKind::CRE, 0.01);
  CHECK(ap.converged);
  CHECK(ap.upper - ap.lower <= 0.01 + 1e-12);
  CHECK(ap.m >= 1);
  // One step back the bracket must have been too wide (minimality).
  if (ap.m > 1) {
    const SeriesApproximation prev = series_truncation(e, SeriesKind::CRE, ap.m - 1);
    CHECK(prev.upper - prev.lower > 0.01);
  }

  // A huge target is met by the very first truncation.
  CHECK(converge(e, SeriesKind::CRE, 10.0).m == 1);

  // The target bracket must also contain the truth.
  const SeriesApproximation ce = converge(e, SeriesKind::CE, 0.001);
  CHECK(ce.converged);
  CHECK(ce.lower <= kPi2Over6 - 1.0);
  CHECK(ce.upper >= kPi2Over6 - 1.0);
}

TEST_CASE("converge reports failure honestly when no finite width exists") {
  const Distribution lomax = Distribution::table_row(4);
  const SeriesApproximation ap = converge(lomax, SeriesKind::WCRE, 0.01, 50);
  CHECK_FALSE(ap.converged);
  CHECK(ap.m == 50);
  CHECK_FALSE(ap.upper_certified);
  CHECK(std::isinf(ap.upper));
  CHECK(ap.lower <= 2.25 + 1e-9);
}

TEST_CASE("an unreachable finite target stops at the cap") {
  const SeriesApproximation ap =
      converge(Distribution::exponential(1.0), SeriesKind::CRE, 1e-9, 20);
  CHECK_FALSE(ap.converged);
  CHECK(ap.m == 20);
}

TEST_CASE("degenerate inputs yield all-zero series") {
  const Distribution constant = Distribution::empirical({3.0, 3.0});
  const SeriesApproximation ap = series_truncation(constant, SeriesKind::CRE, 5);
  CHECK(ap.degenerate);
  CHECK(ap.point_estimate == 0.0);
  CHECK(ap.lower == 0.0);
  CHECK(ap.upper == 0.0);

  const SeriesApproximation conv = converge(constant, SeriesKind::WCE, 0.01);
  CHECK(conv.degenerate);
  CHECK(conv.converged);
}

TEST_CASE("invalid series arguments are rejected") {
  const Distribution e = Distribution::exponential(1.0);
  CHECK_THROWS_AS(series_truncation(e, SeriesKind::CRE, 0), DomainError);
  CHECK_THROWS_AS(converge(e, SeriesKind::CRE, 0.0), DomainError);
  CHECK_THROWS_AS(converge(e, SeriesKind::CRE, -1.0), DomainError);
  CHECK_THROWS_AS(converge(e, SeriesKind::CRE, 0.01, 0), DomainError);
}

TEST_CASE("series kind strings round-trip") {
  CHECK(series_kind_from_string("sum") == SeriesKind::CreCeSum);
  CHECK(series_kind_from_string("wcre") == SeriesKind::WCRE);
  CHECK_FALSE(series_kind_from_string("total").has_value());
  CHECK(to_string(SeriesKind::CreCeSum) == "sum");
}
