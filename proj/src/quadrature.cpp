#include "centropy/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

#include "centropy/detail/neumaier.hpp"
#include "centropy/errors.hpp"

namespace centropy::quad {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]. Odd indices are the
// embedded Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

[[noreturn]] void throw_non_finite(double x, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "integrand returned non-finite value %g at x = %.17g", v, x);
  throw DomainError(buf);
}

// One Kronrod 15 rule application with the QUADPACK error heuristic.
Panel apply_rule(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  double fv1[8];
  double fv2[8];
  const double fc = f(centr);
  if (!std::isfinite(fc)) throw_non_finite(centr, fc);
  fv1[7] = fc;
  fv2[7] = fc;

  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk[j];
    const double x1 = centr - absc;
    const double x2 = centr + absc;
    const double f1 = f(x1);
    if (!std::isfinite(f1)) throw_non_finite(x1, f1);
    const double f2 = f(x2);
    if (!std::isfinite(f2)) throw_non_finite(x2, f2);
    fv1[j] = f1;
    fv2[j] = f2;
    const double fsum = f1 + f2;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * hlgth;
  resabs *= std::abs(hlgth);
  resasc *= std::abs(hlgth);
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  const double uflow = DBL_MIN;
  const double eps = DBL_EPSILON;
  if (resabs > uflow / (50.0 * eps)) {
    abserr = std::max(eps * 50.0 * resabs, abserr);
  }
  p.error = abserr;
  return p;
}

IntegralResult integrate_finite(const std::function<double(double)>& f,
                                double a, double b, const Tolerance& tol,
                                std::size_t* evaluations) {
  // 15 evaluations per rule application.
  constexpr std::size_t kPanelCost = 15;

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> active;
  std::vector<Panel> settled;  // panels we refuse to split further

  auto budget_left = [&]() {
    return *evaluations + kPanelCost <= tol.max_evaluations;
  };

  if (!budget_left()) {
    return {0.0, kInf, *evaluations, false};
  }
  *evaluations += kPanelCost;
  active.push(apply_rule(f, a, b));

  double total_value = active.top().value;
  double total_error = active.top().error;

  auto tolerance_met = [&]() {
    return total_error <=
           std::max(tol.abs_tol, tol.rel_tol * std::abs(total_value));
  };

  while (!tolerance_met() && !active.empty()) {
    const Panel worst = active.top();

    // Splitting needs two rule applications.
    if (*evaluations + 2 * kPanelCost > tol.max_evaluations) break;

    const double mid = 0.5 * (worst.a + worst.b);
    const double width = worst.b - worst.a;
    const double scale =
        std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
    if (width <= 50.0 * DBL_EPSILON * scale || mid <= worst.a ||
        mid >= worst.b) {
      // Cannot be meaningfully subdivided; park it.
      active.pop();
      settled.push_back(worst);
      continue;
    }

    active.pop();
    *evaluations += 2 * kPanelCost;
    const Panel left = apply_rule(f, worst.a, mid);
    const Panel right = apply_rule(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }

  // Final deterministic accumulation over all panels.
  detail::NeumaierSum value;
  detail::NeumaierSum error;
  for (const Panel& p : settled) {
    value.add(p.value);
    error.add(p.error);
  }
  while (!active.empty()) {
    value.add(active.top().value);
    error.add(active.top().error);
    active.pop();
  }

  IntegralResult r;
  r.value = value.value();
  r.abs_error_estimate = error.value();
  r.evaluations = *evaluations;
  r.converged = r.abs_error_estimate <=
                std::max(tol.abs_tol, tol.rel_tol * std::abs(r.value));
  return r;
}

// Fold (origin, +inf) onto t in (0, 1) via x = origin + t/(1-t). The `flip`
// variant walks downward from origin for (-inf, origin).
std::function<double(double)> mapped_integrand(
    const std::function<double(double)>& f, double origin, bool flip) {
  return [f, origin, flip](double t) {
    const double om = 1.0 - t;
    const double x = flip ? origin - t / om : origin + t / om;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;  // avoid 0 * inf at the far end
    if (!std::isfinite(fx)) throw_non_finite(x, fx);
    return fx / (om * om);
  };
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double lower,
                         double upper, const Tolerance& tol) {
  if (std::isnan(lower) || std::isnan(upper)) {
    throw DomainError("integration endpoint is NaN");
  }
  if (lower > upper) {
    throw DomainError("integration lower endpoint exceeds upper endpoint");
  }
  if (lower == upper) {
    return {0.0, 0.0, 0, true};
  }

  const bool lo_inf = std::isinf(lower);
  const bool hi_inf = std::isinf(upper);
  std::size_t evaluations = 0;

  if (lo_inf && hi_inf) {
    Tolerance half = tol;
    half.abs_tol = 0.5 * tol.abs_tol;
    half.max_evaluations = tol.max_evaluations / 2;
    IntegralResult neg =
        integrate_finite(mapped_integrand(f, 0.0, true), 0.0, 1.0, half,
                         &evaluations);
    IntegralResult pos =
        integrate_finite(mapped_integrand(f, 0.0, false), 0.0, 1.0, half,
                         &evaluations);
    IntegralResult r;
    r.value = neg.value + pos.value;
    r.abs_error_estimate = neg.abs_error_estimate + pos.abs_error_estimate;
    r.evaluations = evaluations;
    r.converged = neg.converged && pos.converged;
    return r;
  }
  if (hi_inf) {
    return integrate_finite(mapped_integrand(f, lower, false), 0.0, 1.0, tol,
                            &evaluations);
  }
  if (lo_inf) {
    // x = upper - t/(1-t) reverses orientation twice; the sign is unchanged.
    return integrate_finite(mapped_integrand(f, upper, true), 0.0, 1.0, tol,
                            &evaluations);
  }

  return integrate_finite(f, lower, upper, tol, &evaluations);
}

double xlogx(double u) {
  constexpr double kSlack = 1e-12;
  if (std::isnan(u) || u < -kSlack || u > 1.0 + kSlack) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "xlogx argument %.17g outside [0, 1]", u);
    throw DomainError(buf);
  }
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 0.0;
  return u * std::log(u);
}

}  // namespace centropy::quad
