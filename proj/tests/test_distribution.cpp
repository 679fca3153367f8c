#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "centropy/distribution.hpp"
#include "centropy/errors.hpp"
#include "centropy/quadrature.hpp"

using namespace centropy;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "centropy_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::vector<std::string>& continuous_specs() {
  static const std::vector<std::string> specs = {
      "exp(lambda=1)", "exp(lambda=2.5)", "uniform(a=1)",  "uniform(a=3)",
      "power(k=2)",    "power(k=0.5)",    "normal",        "table1:row3",
      "table1:row4",   "table1:row6"};
  return specs;
}

}  // namespace

TEST_CASE("spec strings parse into the right families") {
  CHECK(parse_spec("exp(lambda=2)").mean() == doctest::Approx(0.5));
  CHECK(parse_spec("exp").mean() == doctest::Approx(1.0));  // default lambda=1
  CHECK(parse_spec("uniform(a=2)").mean() == doctest::Approx(1.0));
  CHECK(parse_spec("power(k=2)").mean() == doctest::Approx(2.0 / 3.0));
  CHECK(parse_spec("normal").symmetric_about() == 0.0);
  CHECK(parse_spec(" exp( lambda = 2 ) ").mean() == doctest::Approx(0.5));

  // Catalog aliases: rows 1, 2, 5 are the named families.
  CHECK(parse_spec("table1:row1").key() == "exp(lambda=1)");
  CHECK(parse_spec("table1:row2").key() == "uniform(a=1)");
  CHECK(parse_spec("table1:row5").key() == "power(k=2)");
  CHECK(parse_spec("table1:row4").key() == "table1:row4");
}

TEST_CASE("parse errors carry 1-based character positions") {
  auto expect_parse_error = [](const std::string& text, std::size_t pos,
                               const std::string& fragment) {
    try {
      parse_spec(text);
      FAIL("expected ParseError for ", text);
    } catch (const ParseError& e) {
      CHECK(e.position == pos);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_parse_error("gauss", 1, "unknown distribution kind");
  expect_parse_error("exp()", 5, "empty parameter list");
  expect_parse_error("exp(rate=2)", 5, "unknown parameter");
  expect_parse_error("exp(lambda=abc)", 12, "malformed number");
  expect_parse_error("exp(lambda=2", 12, "expected ')'");
  expect_parse_error("normal(x=1)", 7, "takes no parameters");
  expect_parse_error("exp(lambda=2,lambda=3)", 14, "duplicate parameter");
  expect_parse_error("exp(lambda=-1)", 1, "positive");
  expect_parse_error("", 1, "empty distribution specification");
}

TEST_CASE("the catalog lists every constructible kind") {
  const std::vector<std::string> keys = catalog_keys();
  CHECK(keys.size() == 10);
  for (const std::string& key : keys) {
    CHECK_NOTHROW(parse_spec(key));
  }
}

TEST_CASE("cdf and survival values at known points") {
  const Distribution e = Distribution::exponential(1.0);
  CHECK(e.cdf(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK(e.survival(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(e.cdf(0.0) == 0.0);
  CHECK(e.cdf(-1.0) == 0.0);

  const Distribution u = Distribution::uniform(2.0);
  CHECK(u.cdf(0.5) == doctest::Approx(0.25));
  CHECK(u.cdf(5.0) == 1.0);

  const Distribution lomax = Distribution::table_row(4);
  CHECK(lomax.cdf(1.0) == doctest::Approx(1.0 - 0.125).epsilon(1e-15));
  CHECK(lomax.survival(1.0) == doctest::Approx(0.125).epsilon(1e-15));

  const Distribution row6 = Distribution::table_row(6);
  CHECK(row6.cdf(std::log(2.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  // cdf + survival = 1 everywhere it matters.
  for (const std::string& spec : continuous_specs()) {
    const Distribution d = parse_spec(spec);
    for (double x : {0.1, 0.5, 0.9, 1.5, 3.0}) {
      CHECK(d.cdf(x) + d.survival(x) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("densities integrate to one") {
  for (const std::string& spec : continuous_specs()) {
    const Distribution d = parse_spec(spec);
    const auto support = d.support();
    const quad::IntegralResult total = quad::integrate(
        [&](double x) { return d.pdf(x); }, support.lower, support.upper);
    INFO("spec = ", spec);
    CHECK(std::fabs(total.value - 1.0) < 1e-8);
  }
}

TEST_CASE("cdfs are monotone on a grid") {
  for (const std::string& spec : continuous_specs()) {
    const Distribution d = parse_spec(spec);
    const double lo = std::isinf(d.support().lower) ? -20.0 : d.support().lower;
    const double hi = std::isinf(d.support().upper) ? 40.0 : d.support().upper;
    double prev = -1.0;
    bool monotone = true;
    for (int i = 0; i <= 1000; ++i) {
      const double x = lo + (hi - lo) * i / 1000.0;
      const double c = d.cdf(x);
      monotone = monotone && c >= prev && c >= 0.0 && c <= 1.0;
      prev = c;
    }
    INFO("spec = ", spec);
    CHECK(monotone);
  }
}

TEST_CASE("quantile is the inverse of the cdf") {
  for (const std::string& spec : continuous_specs()) {
    const Distribution d = parse_spec(spec);
    for (double p : {1e-6, 0.05, 0.25, 0.5, 0.75, 0.95, 1.0 - 1e-6}) {
      const double x = d.quantile(p);
      INFO("spec = ", spec, ", p = ", p);
      CHECK(std::fabs(d.cdf(x) - p) < 1e-8);
    }
  }
  CHECK_THROWS_AS(Distribution::exponential(1.0).quantile(0.0), DomainError);
  CHECK_THROWS_AS(Distribution::exponential(1.0).quantile(1.0), DomainError);
}

TEST_CASE("standard normal quantile matches published fixtures") {
  const Distribution n = Distribution::standard_normal();
  CHECK(std::fabs(n.quantile(0.975) - 1.959963984540054) < 1e-12);
  CHECK(std::fabs(n.quantile(0.9) - 1.2815515655446004) < 1e-12);
  CHECK(std::fabs(n.quantile(0.5)) < 1e-15);
  CHECK(n.quantile(0.025) == doctest::Approx(-n.quantile(0.975)).epsilon(1e-14));
  // Deep tail still round-trips through the cdf.
  CHECK(std::fabs(n.cdf(n.quantile(1e-10)) - 1e-10) < 1e-14);
}

TEST_CASE("log cdf and log survival stay accurate in both tails") {
  const Distribution e = Distribution::exponential(1.0);
  CHECK(e.log_survival(40.0) == doctest::Approx(-40.0).epsilon(1e-14));
  CHECK(e.log_cdf(1e-12) == doctest::Approx(std::log(1e-12)).epsilon(1e-9));
  CHECK(e.log_cdf(50.0) == doctest::Approx(std::log1p(-std::exp(-50.0))));
  const Distribution lomax = Distribution::table_row(4);
  CHECK(lomax.log_survival(1e6) ==
        doctest::Approx(-3.0 * std::log1p(1e6)).epsilon(1e-13));
}

TEST_CASE("metadata gates match the catalog") {
  const Distribution e = Distribution::exponential(1.0);
  CHECK(e.decreasing_failure_rate() == true);
  CHECK_FALSE(e.bounded_support());
  CHECK_FALSE(e.symmetric_about().has_value());
  CHECK(e.fourth_moment() == 24.0);

  const Distribution u = Distribution::uniform(2.0);
  CHECK(u.symmetric_about() == 1.0);
  CHECK(u.bounded_support());
  CHECK(u.decreasing_failure_rate() == false);

  CHECK(Distribution::power_law(1.0).symmetric_about() == 0.5);
  CHECK_FALSE(Distribution::power_law(2.0).symmetric_about().has_value());
  CHECK_FALSE(Distribution::power_law(0.5).decreasing_failure_rate().has_value());

  const Distribution lomax = Distribution::table_row(4);
  CHECK(lomax.decreasing_failure_rate() == true);
  CHECK_FALSE(lomax.fourth_moment().has_value());
  CHECK(lomax.mean() == doctest::Approx(0.5));
  CHECK(lomax.second_moment() == doctest::Approx(1.0));
  CHECK(lomax.variance() == doctest::Approx(0.75));

  // The sixth row's hazard is not monotone, so the DFR gate must stay open.
  CHECK_FALSE(Distribution::table_row(6).decreasing_failure_rate().has_value());

  const Distribution row3 = Distribution::table_row(3);
  CHECK(row3.bounded_support());
  CHECK(row3.support().upper == 1.0);
  CHECK(row3.mean() > 0.0);
  CHECK(row3.mean() < 1.0);
  CHECK(row3.second_moment() >= row3.mean() * row3.mean());

  CHECK(Distribution::standard_normal().support().lower == -kInf);
}

TEST_CASE("empirical distributions are exact step functions") {
  const Distribution d = Distribution::empirical({1.0, 0.0, 1.0, 2.0});
  CHECK(d.is_empirical());
  CHECK(d.sample_count() == 4);
  CHECK(d.distinct_values() == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(d.cdf(0.0) == doctest::Approx(0.25));
  CHECK(d.cdf(0.5) == doctest::Approx(0.25));
  CHECK(d.cdf(1.0) == doctest::Approx(0.75));
  CHECK(d.cdf(2.0) == 1.0);
  CHECK(d.cdf(-0.5) == 0.0);
  CHECK(d.quantile(0.5) == 1.0);
  CHECK(d.mean() == doctest::Approx(1.0));
  CHECK(d.second_moment() == doctest::Approx(1.5));
  CHECK(d.support().upper == 2.0);
  CHECK_THROWS_AS(d.pdf(1.0), CapabilityError);

  CHECK_THROWS_AS(Distribution::empirical({}), DomainError);
  CHECK_THROWS_AS(Distribution::empirical({1.0, -2.0}), DomainError);
  CHECK_THROWS_AS(Distribution::empirical({1.0, kInf}), DomainError);

  // Distinct samples get distinct identities (the moment cache keys on this).
  const Distribution other = Distribution::empirical({0.0, 1.0, 1.0, 3.0});
  CHECK(other.key() != d.key());
}

TEST_CASE("sample files load with comments and fail with positions") {
  const std::string good =
      write_temp("good.txt", "# header\n1.5\n\n 2.5 \n0\n");
  const std::vector<double> samples = load_sample_file(good);
  CHECK(samples == std::vector<double>{1.5, 2.5, 0.0});
  std::remove(good.c_str());

  const std::string bad = write_temp("bad.txt", "1.0\nnot-a-number\n");
  try {
    load_sample_file(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  std::remove(bad.c_str());

  const std::string negative = write_temp("negative.txt", "1.0\n2.0\n-3.0\n");
  try {
    load_sample_file(negative);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
    CHECK(std::string(e.what()).find("negative") != std::string::npos);
  }
  std::remove(negative.c_str());

  const std::string empty = write_temp("empty.txt", "# nothing here\n");
  CHECK_THROWS_AS(load_sample_file(empty), DomainError);
  std::remove(empty.c_str());

  CHECK_THROWS_AS(load_sample_file("definitely_missing_file.txt"), DomainError);
}

TEST_CASE("inverse-transform sampling is deterministic and in-support") {
  const Distribution e = Distribution::exponential(1.0);
  const std::vector<double> first = sample_inverse_transform(e, 1000, 42);
  const std::vector<double> second = sample_inverse_transform(e, 1000, 42);
  CHECK(first == second);
  const std::vector<double> other = sample_inverse_transform(e, 1000, 43);
  CHECK(first != other);
  for (double v : first) {
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
  // The empirical mean of 1000 exp(1) draws lands near 1.
  double mean = 0.0;
  for (double v : first) mean += v;
  mean /= static_cast<double>(first.size());
  CHECK(std::fabs(mean - 1.0) < 0.1);
}
