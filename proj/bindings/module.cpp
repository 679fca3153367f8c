#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "centropy/bounds.hpp"
#include "centropy/distribution.hpp"
#include "centropy/entropy.hpp"
#include "centropy/errors.hpp"
#include "centropy/order_statistics.hpp"
#include "centropy/reference_table.hpp"
#include "centropy/series.hpp"

namespace py = pybind11;
using namespace centropy;

namespace {

quad::Tolerance tolerance_of(double tol) {
  quad::Tolerance t;
  t.abs_tol = tol;
  t.rel_tol = tol;
  return t;
}

EntropyKind entropy_kind_of(const std::string& name) {
  const std::optional<EntropyKind> kind = entropy_kind_from_string(name);
  if (!kind.has_value()) {
    throw py::value_error("unknown measure '" + name +
                          "' (expected cre, ce, wcre, or wce)");
  }
  return *kind;
}

SeriesKind series_kind_of(const std::string& name) {
  const std::optional<SeriesKind> kind = series_kind_from_string(name);
  if (!kind.has_value()) {
    throw py::value_error("unknown series '" + name +
                          "' (expected cre, ce, wcre, wce, or sum)");
  }
  return *kind;
}

Extreme extreme_of(const std::string& which) {
  if (which == "largest") return Extreme::Largest;
  if (which == "smallest") return Extreme::Smallest;
  throw py::value_error("which must be 'largest' or 'smallest'");
}

py::dict entropy_dict(const EntropyValue& v,
                      std::vector<std::string> warnings) {
  py::dict out;
  out["kind"] = to_string(v.kind);
  out["value"] = v.value;
  out["method"] = to_string(v.method);
  out["error_estimate"] = v.error_estimate;
  out["warnings"] = std::move(warnings);
  return out;
}

py::dict series_dict(const SeriesApproximation& ap, bool with_terms) {
  py::dict out;
  out["kind"] = to_string(ap.kind);
  out["m"] = ap.m;
  out["partial_sum"] = ap.partial_sum;
  out["point_estimate"] = ap.point_estimate;
  out["lower"] = ap.lower;
  out["upper"] = ap.upper;
  out["lower_certified"] = ap.lower_certified;
  out["upper_certified"] = ap.upper_certified;
  out["degenerate"] = ap.degenerate;
  out["converged"] = ap.converged;
  if (with_terms) {
    py::list terms;
    for (const SeriesTerm& t : ap.terms) {
      py::dict row;
      row["n"] = t.n;
      row["moment"] = t.moment;
      row["coefficient"] = t.coefficient;
      row["term"] = t.term;
      terms.append(row);
    }
    out["terms"] = terms;
  }
  return out;
}

py::dict cell_dict(const ReferenceCell& c) {
  py::dict out;
  out["computed"] = c.computed;
  out["reference"] = c.reference;
  out["tolerance"] = c.tolerance;
  out["delta"] = c.delta;
  out["within"] = c.within;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Cumulative information measures (CRE, CE, WCRE, WCE) of non-negative "
      "distributions: quadrature route, extreme-moment series route, and "
      "bound reports.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_TypeError);

  py::class_<Distribution>(m, "Distribution")
      .def_static("exponential", &Distribution::exponential, py::arg("lam"))
      .def_static("uniform", &Distribution::uniform, py::arg("a"))
      .def_static("power_law", &Distribution::power_law, py::arg("k"))
      .def_static("standard_normal", &Distribution::standard_normal)
      .def_static("table_row", &Distribution::table_row, py::arg("row"))
      .def_static("empirical", &Distribution::empirical, py::arg("samples"))
      .def("cdf", &Distribution::cdf)
      .def("survival", &Distribution::survival)
      .def("pdf", &Distribution::pdf)
      .def("quantile", &Distribution::quantile)
      .def("log_cdf", &Distribution::log_cdf)
      .def("log_survival", &Distribution::log_survival)
      .def("mean", &Distribution::mean)
      .def("second_moment", &Distribution::second_moment)
      .def("variance", &Distribution::variance)
      .def("fourth_moment", &Distribution::fourth_moment)
      .def("support",
           [](const Distribution& d) {
             return py::make_tuple(d.support().lower, d.support().upper);
           })
      .def("bounded_support", &Distribution::bounded_support)
      .def("symmetric_about", &Distribution::symmetric_about)
      .def("decreasing_failure_rate", &Distribution::decreasing_failure_rate)
      .def("sample_count", &Distribution::sample_count)
      .def("is_empirical", &Distribution::is_empirical)
      .def("key", &Distribution::key)
      .def("cdf_formula", &Distribution::cdf_formula)
      .def("__repr__",
           [](const Distribution& d) { return "Distribution(" + d.key() + ")"; });

  m.def("parse", &parse_spec, py::arg("spec"),
        "Build a catalog distribution from its textual spec.");
  m.def("catalog_keys", &catalog_keys);
  m.def("load_samples", &load_sample_file, py::arg("path"));
  m.def("draw_samples", &sample_inverse_transform, py::arg("dist"),
        py::arg("count"), py::arg("seed"));

  m.def(
      "entropy",
      [](const Distribution& d, const std::string& kind, double tol) {
        std::vector<std::string> warnings;
        const EntropyValue v =
            entropy_measure(d, entropy_kind_of(kind), tolerance_of(tol),
                            &warnings);
        return entropy_dict(v, std::move(warnings));
      },
      py::arg("dist"), py::arg("kind"), py::arg("tol") = 1e-10,
      "One measure by the quadrature route (exact sums for empirical input).");

  m.def(
      "empirical_plugin",
      [](const Distribution& d, const std::string& kind) {
        std::vector<std::string> warnings;
        const EntropyValue v =
            empirical_plugin(d, entropy_kind_of(kind), &warnings);
        return entropy_dict(v, std::move(warnings));
      },
      py::arg("dist"), py::arg("kind"));

  m.def(
      "extreme_moment",
      [](const Distribution& d, const std::string& which, std::size_t n,
         int order, double tol) {
        const MomentRecord rec =
            extreme_moment(d, extreme_of(which), n, order, tolerance_of(tol));
        py::dict out;
        out["k"] = rec.k;
        out["n"] = rec.n;
        out["order"] = rec.order;
        out["value"] = rec.value;
        out["method"] = rec.method == MomentMethod::ClosedForm ? "closed_form"
                        : rec.method == MomentMethod::Quadrature
                            ? "quadrature"
                            : "monte_carlo";
        return out;
      },
      py::arg("dist"), py::arg("which"), py::arg("n"), py::arg("order") = 1,
      py::arg("tol") = 1e-10);

  m.def(
      "mc_extreme_moment",
      [](const Distribution& d, const std::string& which, std::size_t n,
         int order, std::size_t samples, std::uint64_t seed, unsigned threads) {
        const McEstimate mc = mc_extreme_moment(d, extreme_of(which), n, order,
                                                samples, seed, threads);
        py::dict out;
        out["estimate"] = mc.estimate;
        out["standard_error"] = mc.standard_error;
        out["samples"] = mc.samples;
        return out;
      },
      py::arg("dist"), py::arg("which"), py::arg("n"), py::arg("order"),
      py::arg("samples"), py::arg("seed") = 42, py::arg("threads") = 1);

  m.def(
      "harter_comparison",
      [](std::size_t m_trunc) {
        const HarterComparison h = harter_comparison(m_trunc);
        py::dict out;
        out["m"] = h.m;
        out["series_sum"] = h.left;
        out["bound_sum"] = h.right;
        out["strictly_less"] = h.strictly_less;
        return out;
      },
      py::arg("m") = 99);

  m.def(
      "series",
      [](const Distribution& d, const std::string& kind, std::size_t m_trunc,
         bool with_terms) {
        return series_dict(series_truncation(d, series_kind_of(kind), m_trunc),
                           with_terms);
      },
      py::arg("dist"), py::arg("kind"), py::arg("m"),
      py::arg("with_terms") = false,
      "Truncated extreme-moment series with a certified bracket.");

  m.def(
      "converge",
      [](const Distribution& d, const std::string& kind, double width,
         std::size_t m_max) {
        return series_dict(converge(d, series_kind_of(kind), width, m_max),
                           false);
      },
      py::arg("dist"), py::arg("kind"), py::arg("width"),
      py::arg("m_max") = 200000);

  m.def(
      "bounds_report",
      [](const Distribution& d, double tol) {
        std::vector<std::string> warnings;
        const BoundReport rep = check_all(d, tolerance_of(tol), &warnings);
        py::dict out;
        out["distribution"] = rep.distribution;
        out["mean"] = rep.mean;
        out["sigma"] = rep.sigma;
        out["cre"] = rep.cre;
        out["ce"] = rep.ce;
        out["sum"] = rep.sum;
        py::list entries;
        for (const BoundEntry& e : rep.entries) {
          py::dict row;
          row["name"] = e.name;
          row["applicable"] = e.applicable;
          row["reason"] = e.reason;
          row["is_lower"] = e.is_lower;
          row["bound_value"] = e.bound_value;
          row["measured_value"] = e.measured_value;
          row["satisfied"] = e.satisfied;
          row["slack"] = e.slack;
          entries.append(row);
        }
        out["entries"] = entries;
        out["warnings"] = warnings;
        return out;
      },
      py::arg("dist"), py::arg("tol") = 1e-10);

  m.def(
      "reference_table",
      [](double tol) {
        std::vector<std::string> warnings;
        const std::vector<ReferenceRow> rows =
            evaluate_reference_table(tolerance_of(tol), &warnings);
        py::list out;
        for (const ReferenceRow& row : rows) {
          py::dict r;
          r["label"] = row.label;
          r["spec"] = row.spec_string;
          r["cdf"] = row.cdf_formula;
          r["sigma"] = row.sigma;
          r["cre"] = cell_dict(row.cre);
          r["cre_bound"] = cell_dict(row.cre_bound);
          r["sum"] = cell_dict(row.sum);
          r["sum_bound"] = cell_dict(row.sum_bound);
          r["delta_max"] = row.delta_max;
          out.append(r);
        }
        return out;
      },
      py::arg("tol") = 1e-10);

  m.def("hdg_extreme_bound", &hdg_extreme_bound, py::arg("n"), py::arg("mu"),
        py::arg("sigma"));
  m.def("hdg_series_constant", &hdg_series_constant);
  m.def("range_series_constant", &range_series_constant);
  m.def("symmetric_series_constant", &symmetric_series_constant);
  m.def("dn_series_constant", &dn_series_constant);
  m.def("c_of_n", &c_of_n, py::arg("n"));
  m.def("complete_beta", &complete_beta, py::arg("n"));
  m.def("rychlik_delta", &rychlik_delta, py::arg("j"), py::arg("n"));
  m.def("cre_upper_hdg", &cre_upper_hdg, py::arg("sigma"));
  m.def("ce_lower_dfr", &ce_lower_dfr, py::arg("mean"),
        py::arg("second_moment"));
  m.def("cre_upper_symmetric", &cre_upper_symmetric, py::arg("sigma"));
  m.def("cre_upper_symmetric_bounded", &cre_upper_symmetric_bounded,
        py::arg("sigma"));
  m.def("sum_upper", &sum_upper, py::arg("sigma"));
  m.def("sum_upper_symmetric", &sum_upper_symmetric, py::arg("sigma"));
  m.def("range_bound", &range_bound, py::arg("sample_size"), py::arg("sigma"));

  m.def("set_moment_cache_enabled", &set_moment_cache_enabled);
  m.def("clear_moment_cache", &clear_moment_cache);
  m.def("moment_cache_size", &moment_cache_size);
}
