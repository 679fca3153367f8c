#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "centropy/distribution.hpp"
#include "centropy/entropy.hpp"
#include "centropy/errors.hpp"

using namespace centropy;

namespace {

double measure(const std::string& spec, EntropyKind kind,
               std::vector<std::string>* warnings = nullptr) {
  return entropy_measure(parse_spec(spec), kind, {}, warnings).value;
}

constexpr double kPi2Over6 = M_PI * M_PI / 6.0;
constexpr double kZeta3 = 1.2020569031595942854;

}  // namespace

TEST_CASE("exponential worked examples") {
  CHECK(std::fabs(measure("exp(lambda=1)", EntropyKind::CRE) - 1.0) < 1e-9);
  CHECK(std::fabs(measure("exp(lambda=1)", EntropyKind::CE) -
                  (kPi2Over6 - 1.0)) < 1e-9);
  CHECK(std::fabs(measure("exp(lambda=1)", EntropyKind::WCRE) - 2.0) < 1e-8);
  CHECK(std::fabs(measure("exp(lambda=1)", EntropyKind::WCE) -
                  (kPi2Over6 + kZeta3 - 2.0)) < 1e-8);
}

TEST_CASE("uniform worked examples") {
  CHECK(std::fabs(measure("uniform(a=1)", EntropyKind::CRE) - 0.25) < 1e-10);
  CHECK(std::fabs(measure("uniform(a=1)", EntropyKind::CE) - 0.25) < 1e-10);
  CHECK(std::fabs(measure("uniform(a=1)", EntropyKind::WCRE) - 5.0 / 36.0) <
        1e-10);
  CHECK(std::fabs(measure("uniform(a=1)", EntropyKind::WCE) - 1.0 / 9.0) <
        1e-10);
}

TEST_CASE("power-law worked examples") {
  CHECK(std::fabs(measure("power(k=2)", EntropyKind::CRE) -
                  0.186914870364517) < 1e-9);
  CHECK(std::fabs(measure("power(k=2)", EntropyKind::CE) - 2.0 / 9.0) < 1e-9);
  CHECK(std::fabs(measure("power(k=2)", EntropyKind::WCRE) - 0.125) < 1e-9);
  CHECK(std::fabs(measure("power(k=2)", EntropyKind::WCE) - 0.125) < 1e-9);
}

TEST_CASE("catalog rows without closed forms match the independent oracle") {
  // Twelve-digit fixture values computed with an independent
  // arbitrary-precision integrator.
  struct Fix {
    const char* spec;
    double cre, ce, wcre, wce;
  };
  const Fix fixtures[] = {
      {"table1:row3", 0.154958729508434, 0.138671383111777,
       0.0883034592199008, 0.0665354224413537},
      {"table1:row4", 0.75, 0.361528126327583, 2.25, 0.470699046351079},
      {"table1:row6", 0.928303106102666, 0.596347362323194, 1.99816201854801,
       0.876151809320476},
  };
  for (const Fix& f : fixtures) {
    INFO("spec = ", f.spec);
    CHECK(std::fabs(measure(f.spec, EntropyKind::CRE) - f.cre) < 1e-8);
    CHECK(std::fabs(measure(f.spec, EntropyKind::CE) - f.ce) < 1e-8);
    CHECK(std::fabs(measure(f.spec, EntropyKind::WCRE) - f.wcre) < 1e-7);
    CHECK(std::fabs(measure(f.spec, EntropyKind::WCE) - f.wce) < 1e-8);
  }
}

TEST_CASE("all four measures are non-negative across the catalog") {
  for (const char* spec : {"exp(lambda=1)", "exp(lambda=3)", "uniform(a=2)",
                           "power(k=0.5)", "table1:row3", "table1:row4",
                           "table1:row6"}) {
    for (EntropyKind kind : {EntropyKind::CRE, EntropyKind::CE,
                             EntropyKind::WCRE, EntropyKind::WCE}) {
      INFO("spec = ", spec, ", kind = ", to_string(kind));
      CHECK(measure(spec, kind) >= -1e-12);
    }
  }
}

TEST_CASE("scale covariance") {
  // CRE(aX) = a CRE(X); WCRE(aX) = a^2 WCRE(X); same for CE/WCE.
  const double cre1 = measure("exp(lambda=1)", EntropyKind::CRE);
  const double cre4 = measure("exp(lambda=4)", EntropyKind::CRE);
  CHECK(cre4 == doctest::Approx(cre1 / 4.0).epsilon(1e-9));

  const double wcre_u1 = measure("uniform(a=1)", EntropyKind::WCRE);
  const double wcre_u3 = measure("uniform(a=3)", EntropyKind::WCRE);
  CHECK(wcre_u3 == doctest::Approx(9.0 * wcre_u1).epsilon(1e-9));

  const double wce_u2 = measure("uniform(a=2)", EntropyKind::WCE);
  CHECK(wce_u2 == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("symmetric bounded laws have equal CE and CRE") {
  CHECK(measure("uniform(a=1)", EntropyKind::CRE) ==
        doctest::Approx(measure("uniform(a=1)", EntropyKind::CE))
            .epsilon(1e-10));
  CHECK(measure("power(k=1)", EntropyKind::CRE) ==
        doctest::Approx(measure("power(k=1)", EntropyKind::CE)).epsilon(1e-10));
}

TEST_CASE("negative support is rejected") {
  const Distribution n = Distribution::standard_normal();
  for (EntropyKind kind : {EntropyKind::CRE, EntropyKind::CE,
                           EntropyKind::WCRE, EntropyKind::WCE}) {
    CHECK_THROWS_AS(entropy_measure(n, kind), DomainError);
  }
}

TEST_CASE("slow tails trip the boundary warning, fast tails stay silent") {
  std::vector<std::string> warnings;
  measure("table1:row4", EntropyKind::WCRE, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("vanishing-limit") != std::string::npos);

  warnings.clear();
  measure("table1:row4", EntropyKind::CRE, &warnings);
  measure("exp(lambda=1)", EntropyKind::WCRE, &warnings);
  measure("table1:row6", EntropyKind::WCRE, &warnings);
  CHECK(warnings.empty());
}

TEST_CASE("an exhausted budget raises ConvergenceError with the best estimate") {
  quad::Tolerance tiny;
  tiny.abs_tol = 1e-13;
  tiny.rel_tol = 1e-13;
  tiny.max_evaluations = 30;
  try {
    cumulative_residual_entropy(Distribution::table_row(6), tiny);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate));
    CHECK(std::string(e.what()).find("evaluation") != std::string::npos);
  }
}

TEST_CASE("empirical plug-in sums are exact") {
  const Distribution d = Distribution::empirical({0.0, 1.0});
  // Step cdf is 1/2 on (0,1): CRE = CE = (ln 2)/2, weighted halves of x^2/2.
  const double half_ln2 = 0.5 * std::log(2.0);
  CHECK(empirical_plugin(d, EntropyKind::CRE).value ==
        doctest::Approx(half_ln2).epsilon(1e-15));
  CHECK(empirical_plugin(d, EntropyKind::CE).value ==
        doctest::Approx(half_ln2).epsilon(1e-15));
  CHECK(empirical_plugin(d, EntropyKind::WCRE).value ==
        doctest::Approx(0.5 * half_ln2).epsilon(1e-15));
  CHECK(empirical_plugin(d, EntropyKind::WCE).value ==
        doctest::Approx(0.5 * half_ln2).epsilon(1e-15));
  CHECK(empirical_plugin(d, EntropyKind::CRE).method == EntropyMethod::ExactSum);

  // entropy_measure delegates empirical inputs to the plug-in path.
  CHECK(entropy_measure(d, EntropyKind::CRE).value ==
        doctest::Approx(half_ln2).epsilon(1e-15));
  CHECK(entropy_measure(d, EntropyKind::CRE).method ==
        EntropyMethod::ExactSum);

  CHECK_THROWS_AS(empirical_plugin(Distribution::exponential(1.0),
                                   EntropyKind::CRE),
                  DomainError);
}

TEST_CASE("a constant sample has zero plug-in measures, with a warning") {
  const Distribution d = Distribution::empirical({2.0, 2.0, 2.0});
  std::vector<std::string> warnings;
  const EntropyValue v = empirical_plugin(d, EntropyKind::CRE, &warnings);
  CHECK(v.value == 0.0);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("distinct") != std::string::npos);
}

TEST_CASE("plug-in CRE of many exponential draws approaches the true value") {
  const Distribution parent = Distribution::exponential(1.0);
  const Distribution sample =
      Distribution::empirical(sample_inverse_transform(parent, 100000, 42));
  const double plugin = empirical_plugin(sample, EntropyKind::CRE).value;
  CHECK(std::fabs(plugin - 1.0) < 0.02);
}

TEST_CASE("string conversions round-trip") {
  CHECK(entropy_kind_from_string("cre") == EntropyKind::CRE);
  CHECK(entropy_kind_from_string("wce") == EntropyKind::WCE);
  CHECK_FALSE(entropy_kind_from_string("entropy").has_value());
  CHECK(to_string(EntropyKind::WCRE) == "wcre");
  CHECK(to_string(EntropyMethod::ExactSum) == "exact");
}
