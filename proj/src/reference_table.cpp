#include "centropy/reference_table.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "centropy/bounds.hpp"
#include "centropy/distribution.hpp"
#include "centropy/entropy.hpp"

namespace centropy {
namespace {

struct RowFixture {
  const char* label;
  const char* spec;
  double cre;
  double cre_bound;
  double sum;
  double sum_bound;
  double extra_sum_bound_tol;  // absorbs coarser rounding in one reference
};

// Published reference values; the bound columns were typeset with the series
// constants rounded to three figures (1.21 and 3.09), so their tolerance is
// widened in proportion to sigma below.
const std::array<RowFixture, 6> kRows = {{
    {"row1", "table1:row1", 1.0, 1.21, M_PI * M_PI / 6.0, 3.09, 0.0},
    {"row2", "table1:row2", 0.25, 1.21 / (2.0 * std::sqrt(3.0)), 0.5,
     3.09 / (2.0 * std::sqrt(3.0)), 0.0},
    {"row3", "table1:row3", 0.1549, 0.1999, 0.2936, 0.5105, 0.0},
    {"row4", "table1:row4", 0.75, 1.0479, 1.1115, 2.6759, 0.0},
    {"row5", "table1:row5", 0.1869, 0.2852, 0.4091, 0.7283, 0.0},
    {"row6", "table1:row6", 0.9283, 1.1238, 1.5246, 2.87, 5e-3},
}};

ReferenceCell make_cell(double computed, double reference, double tolerance) {
  ReferenceCell c;
  c.computed = computed;
  c.reference = reference;
  c.tolerance = tolerance;
  c.delta = std::fabs(computed - reference);
  c.within = c.delta <= tolerance;
  return c;
}

}  // namespace

std::vector<ReferenceRow> evaluate_reference_table(
    const quad::Tolerance& tol, std::vector<std::string>* warnings) {
  std::vector<ReferenceRow> rows;
  rows.reserve(kRows.size());
  for (const RowFixture& fx : kRows) {
    Distribution d = parse_spec(fx.spec);
    ReferenceRow row;
    row.label = fx.label;
    row.spec_string = fx.spec;
    row.cdf_formula = d.cdf_formula();
    row.sigma = std::sqrt(d.variance());

    const double cre =
        entropy_measure(d, EntropyKind::CRE, tol, warnings).value;
    const double ce = entropy_measure(d, EntropyKind::CE, tol, warnings).value;
    const double sum = cre + ce;

    const double measured_tol = 1e-3;
    const double bound_tol = 1e-3 + 0.005 * row.sigma;

    row.cre = make_cell(cre, fx.cre, measured_tol);
    row.cre_bound = make_cell(cre_upper_hdg(row.sigma), fx.cre_bound,
                              bound_tol);
    row.sum = make_cell(sum, fx.sum, measured_tol);
    row.sum_bound = make_cell(sum_upper(row.sigma), fx.sum_bound,
                              bound_tol + fx.extra_sum_bound_tol);

    row.delta_max = std::max(std::max(row.cre.delta, row.cre_bound.delta),
                             std::max(row.sum.delta, row.sum_bound.delta));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace centropy
