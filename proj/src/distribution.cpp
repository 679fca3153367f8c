#include "centropy/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>

#include "centropy/detail/counter_rng.hpp"
#include "centropy/detail/neumaier.hpp"
#include "centropy/errors.hpp"

namespace centropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double poly(const double* c, int n, double x) {
  // Horner, highest degree first in c[n-1].
  double r = c[n - 1];
  for (int i = n - 2; i >= 0; --i) r = r * x + c[i];
  return r;
}

// Wichura's PPND16: the standard normal quantile to ~1 ulp over (0, 1).
double standard_normal_quantile(double p) {
  static const double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e+2,
      1.9715909503065514427e+3, 1.3731693765509461125e+4,
      4.5921953931549871457e+4, 6.7265770927008700853e+4,
      3.3430575583588128105e+4, 2.5090809287301226727e+3};
  static const double b[8] = {
      1.0,                      4.2313330701600911252e+1,
      6.8718700749205790830e+2, 5.3941960214247511077e+3,
      2.1213794301586595867e+4, 3.9307895800092710610e+4,
      2.8729085735721942674e+4, 5.2264952788528545610e+3};
  static const double c[8] = {
      1.42343711074968357734e0,  4.63033784615654529590e0,
      5.76949722146069140550e0,  3.64784832476320460504e0,
      1.27045825245236838258e0,  2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static const double d[8] = {
      1.0,                       2.05319162663775882187e0,
      1.67638483018380384940e0,  6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static const double e[8] = {
      6.65790464350110377720e0,  5.46378491116411436990e0,
      1.78482653991729133580e0,  2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static const double f[8] = {
      1.0,                       5.99832206555887937690e-1,
      1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-5,
      1.42151175831644588870e-7, 2.04426310338993978564e-15};

  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * poly(a, 8, r) / poly(b, 8, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double v;
  if (r <= 5.0) {
    r -= 1.6;
    v = poly(c, 8, r) / poly(d, 8, r);
  } else {
    r -= 5.0;
    v = poly(e, 8, r) / poly(f, 8, r);
  }
  return q < 0.0 ? -v : v;
}

double require_positive_finite(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
  return v;
}

std::string format_param(const char* kind, const char* name, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s(%s=%.12g)", kind, name, v);
  return buf;
}

}  // namespace

void Distribution::finalize_metadata() {
  // Moments for the families without closed forms, from the survival
  // representation E[X^k] = integral k x^{k-1} S(x) dx on x >= 0.
  if (family_ == Family::TableRow3 || family_ == Family::TableRow6) {
    quad::Tolerance tight;
    tight.abs_tol = 1e-12;
    tight.rel_tol = 1e-12;
    auto surv = [this](double x) { return survival(x); };
    mean_ = quad::integrate([&](double x) { return surv(x); }, 0.0,
                            support_.upper, tight)
                .value;
    second_moment_ =
        quad::integrate([&](double x) { return 2.0 * x * surv(x); }, 0.0,
                        support_.upper, tight)
            .value;
    fourth_moment_ =
        quad::integrate([&](double x) { return 4.0 * x * x * x * surv(x); },
                        0.0, support_.upper, tight)
            .value;
  }
}

Distribution Distribution::exponential(double lambda) {
  require_positive_finite(lambda, "lambda");
  Distribution d;
  d.family_ = Family::Exponential;
  d.param_ = lambda;
  d.support_ = {0.0, kInf};
  d.bounded_ = false;
  d.dfr_ = true;  // constant hazard qualifies
  d.mean_ = 1.0 / lambda;
  d.second_moment_ = 2.0 / (lambda * lambda);
  d.fourth_moment_ = 24.0 / (lambda * lambda * lambda * lambda);
  d.key_ = format_param("exp", "lambda", lambda);
  if (lambda == 1.0) {
    d.formula_ = "1-exp(-x)";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "1-exp(-%.6g*x)", lambda);
    d.formula_ = buf;
  }
  return d;
}

Distribution Distribution::uniform(double a) {
  require_positive_finite(a, "a");
  Distribution d;
  d.family_ = Family::Uniform;
  d.param_ = a;
  d.support_ = {0.0, a};
  d.bounded_ = true;
  d.symmetric_about_ = 0.5 * a;
  d.dfr_ = false;  // hazard 1/(a-x) increases
  d.mean_ = 0.5 * a;
  d.second_moment_ = a * a / 3.0;
  d.fourth_moment_ = a * a * a * a / 5.0;
  d.key_ = format_param("uniform", "a", a);
  if (a == 1.0) {
    d.formula_ = "x";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "x/%.6g", a);
    d.formula_ = buf;
  }
  return d;
}

Distribution Distribution::power_law(double k) {
  require_positive_finite(k, "k");
  Distribution d;
  d.family_ = Family::PowerLaw;
  d.param_ = k;
  d.support_ = {0.0, 1.0};
  d.bounded_ = true;
  if (k == 1.0) d.symmetric_about_ = 0.5;
  if (k >= 1.0) d.dfr_ = false;  // k < 1: hazard is not monotone, left unset
  d.mean_ = k / (k + 1.0);
  d.second_moment_ = k / (k + 2.0);
  d.fourth_moment_ = k / (k + 4.0);
  d.key_ = format_param("power", "k", k);
  if (k == 2.0) {
    d.formula_ = "x^2";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "x^%.6g", k);
    d.formula_ = buf;
  }
  return d;
}

Distribution Distribution::standard_normal() {
  Distribution d;
  d.family_ = Family::StandardNormal;
  d.support_ = {-kInf, kInf};
  d.bounded_ = false;
  d.symmetric_about_ = 0.0;
  d.dfr_ = false;
  d.mean_ = 0.0;
  d.second_moment_ = 1.0;
  d.fourth_moment_ = 3.0;
  d.key_ = "normal";
  d.formula_ = "Phi(x)";
  return d;
}

Distribution Distribution::table_row(int row) {
  switch (row) {
    case 1:
      return exponential(1.0);
    case 2:
      return uniform(1.0);
    case 3: {
      static const Distribution cached = [] {
        Distribution d;
        d.family_ = Family::TableRow3;
        d.support_ = {0.0, 1.0};
        d.bounded_ = true;
        d.key_ = "table1:row3";
        d.formula_ = "x^-2*exp(2(1-1/x))";
        d.finalize_metadata();
        return d;
      }();
      return cached;
    }
    case 4: {
      Distribution d;
      d.family_ = Family::Lomax;
      d.support_ = {0.0, kInf};
      d.bounded_ = false;
      d.dfr_ = true;  // hazard 3/(1+x) decreases
      d.mean_ = 0.5;
      d.second_moment_ = 1.0;
      d.fourth_moment_ = std::nullopt;  // E X^4 diverges at tail index 3
      d.key_ = "table1:row4";
      d.formula_ = "1-(x+1)^-3";
      return d;
    }
    case 5:
      return power_law(2.0);
    case 6: {
      static const Distribution cached = [] {
        Distribution d;
        d.family_ = Family::TableRow6;
        d.support_ = {0.0, kInf};
        d.bounded_ = false;
        d.key_ = "table1:row6";
        d.formula_ = "exp(-1/(e^x-1))";
        d.finalize_metadata();
        return d;
      }();
      return cached;
    }
    default:
      throw DomainError("table row must be between 1 and 6");
  }
}

Distribution Distribution::empirical(std::vector<double> samples) {
  if (samples.empty()) {
    throw DomainError("empirical sample must not be empty");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw DomainError("empirical sample value at index " +
                        std::to_string(i) + " is not finite");
    }
    if (samples[i] < 0.0) {
      throw DomainError("empirical sample value at index " +
                        std::to_string(i) + " is negative");
    }
  }
  std::sort(samples.begin(), samples.end());

  Distribution d;
  d.family_ = Family::Empirical;
  d.sample_count_ = samples.size();
  for (double v : samples) {
    if (d.values_.empty() || v != d.values_.back()) {
      d.values_.push_back(v);
      d.counts_.push_back(1);
    } else {
      ++d.counts_.back();
    }
  }
  // Cumulative counts: counts_[j] = #samples <= values_[j].
  for (std::size_t j = 1; j < d.counts_.size(); ++j) {
    d.counts_[j] += d.counts_[j - 1];
  }

  const double n = static_cast<double>(d.sample_count_);
  detail::NeumaierSum m1, m2, m4;
  std::size_t prev = 0;
  for (std::size_t j = 0; j < d.values_.size(); ++j) {
    const double w = static_cast<double>(d.counts_[j] - prev) / n;
    prev = d.counts_[j];
    const double v = d.values_[j];
    m1.add(w * v);
    m2.add(w * v * v);
    m4.add(w * v * v * v * v);
  }
  d.mean_ = m1.value();
  d.second_moment_ = m2.value();
  d.fourth_moment_ = m4.value();
  d.support_ = {0.0, d.values_.back()};
  d.bounded_ = true;

  // Content hash so distinct samples never share a memo-cache identity.
  std::uint64_t h = 1469598103934665603ULL;
  auto fold = [&h](std::uint64_t bits) {
    h = (h ^ bits) * 1099511628211ULL;
  };
  for (std::size_t j = 0; j < d.values_.size(); ++j) {
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof d.values_[j]);
    std::memcpy(&bits, &d.values_[j], sizeof bits);
    fold(bits);
    fold(static_cast<std::uint64_t>(d.counts_[j]));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "empirical(n=%zu,h=%016llx)", d.sample_count_,
                static_cast<unsigned long long>(h));
  d.key_ = buf;
  std::snprintf(buf, sizeof buf, "step(n=%zu)", d.sample_count_);
  d.formula_ = buf;
  return d;
}

double Distribution::cdf(double x) const {
  switch (family_) {
    case Family::Exponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-param_ * x);
    case Family::Uniform:
      return x <= 0.0 ? 0.0 : (x >= param_ ? 1.0 : x / param_);
    case Family::PowerLaw:
      return x <= 0.0 ? 0.0
                      : (x >= 1.0 ? 1.0 : std::exp(param_ * std::log(x)));
    case Family::StandardNormal:
      return 0.5 * std::erfc(-x / std::sqrt(2.0));
    case Family::TableRow3:
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return std::exp(-2.0 * std::log(x) + 2.0 - 2.0 / x);
    case Family::Lomax:
      return x <= 0.0 ? 0.0 : -std::expm1(-3.0 * std::log1p(x));
    case Family::TableRow6:
      return x <= 0.0 ? 0.0 : std::exp(-1.0 / std::expm1(x));
    case Family::Empirical: {
      auto it = std::upper_bound(values_.begin(), values_.end(), x);
      if (it == values_.begin()) return 0.0;
      const std::size_t idx = static_cast<std::size_t>(it - values_.begin()) - 1;
      return static_cast<double>(counts_[idx]) /
             static_cast<double>(sample_count_);
    }
  }
  return 0.0;
}

double Distribution::survival(double x) const {
  switch (family_) {
    case Family::Exponential:
      return x <= 0.0 ? 1.0 : std::exp(-param_ * x);
    case Family::Uniform:
      return x <= 0.0 ? 1.0 : (x >= param_ ? 0.0 : 1.0 - x / param_);
    case Family::PowerLaw:
      return x <= 0.0 ? 1.0
                      : (x >= 1.0 ? 0.0 : -std::expm1(param_ * std::log(x)));
    case Family::StandardNormal:
      return 0.5 * std::erfc(x / std::sqrt(2.0));
    case Family::TableRow3:
      if (x <= 0.0) return 1.0;
      if (x >= 1.0) return 0.0;
      return -std::expm1(-2.0 * std::log(x) + 2.0 - 2.0 / x);
    case Family::Lomax:
      return x <= 0.0 ? 1.0 : std::exp(-3.0 * std::log1p(x));
    case Family::TableRow6:
      return x <= 0.0 ? 1.0 : -std::expm1(-1.0 / std::expm1(x));
    case Family::Empirical:
      return 1.0 - cdf(x);
  }
  return 0.0;
}

double Distribution::pdf(double x) const {
  switch (family_) {
    case Family::Exponential:
      return x <= 0.0 ? 0.0 : param_ * std::exp(-param_ * x);
    case Family::Uniform:
      return x <= 0.0 || x >= param_ ? 0.0 : 1.0 / param_;
    case Family::PowerLaw:
      return x <= 0.0 || x >= 1.0
                 ? 0.0
                 : param_ * std::exp((param_ - 1.0) * std::log(x));
    case Family::StandardNormal:
      return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    case Family::TableRow3:
      if (x <= 0.0 || x >= 1.0) return 0.0;
      return 2.0 * (1.0 - x) *
             std::exp(-4.0 * std::log(x) + 2.0 - 2.0 / x);
    case Family::Lomax:
      return x <= 0.0 ? 0.0 : 3.0 * std::exp(-4.0 * std::log1p(x));
    case Family::TableRow6: {
      if (x <= 0.0) return 0.0;
      const double g = std::expm1(x);
      return std::exp(x - 2.0 * std::log(g) - 1.0 / g);
    }
    case Family::Empirical:
      throw CapabilityError("empirical distribution has no density");
  }
  return 0.0;
}

double Distribution::log_cdf(double x) const {
  const double c = cdf(x);
  if (c <= 0.0) return -kInf;
  if (c < 0.5) return std::log(c);
  return std::log1p(-survival(x));
}

double Distribution::log_survival(double x) const {
  const double s = survival(x);
  if (s <= 0.0) return -kInf;
  if (s < 0.5) return std::log(s);
  return std::log1p(-cdf(x));
}

double Distribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("quantile argument must lie strictly inside (0, 1)");
  }
  switch (family_) {
    case Family::Exponential:
      return -std::log1p(-p) / param_;
    case Family::Uniform:
      return param_ * p;
    case Family::PowerLaw:
      return std::exp(std::log(p) / param_);
    case Family::StandardNormal:
      return standard_normal_quantile(p);
    case Family::TableRow3: {
      // No closed inverse; the cdf is strictly increasing on (0, 1).
      double lo = 0.0;
      double hi = 1.0;
      for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    case Family::Lomax:
      return std::expm1(-std::log1p(-p) / 3.0);
    case Family::TableRow6:
      return std::log1p(-1.0 / std::log(p));
    case Family::Empirical: {
      const double target = p * static_cast<double>(sample_count_);
      auto it = std::lower_bound(
          counts_.begin(), counts_.end(), target,
          [](std::size_t c, double t) { return static_cast<double>(c) < t; });
      if (it == counts_.end()) return values_.back();
      return values_[static_cast<std::size_t>(it - counts_.begin())];
    }
  }
  return 0.0;
}

double Distribution::variance() const {
  const double v = second_moment_ - mean_ * mean_;
  return v > 0.0 ? v : 0.0;
}

Distribution parse_spec(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) {
    throw ParseError("empty distribution specification", 1);
  }
  const std::size_t last = text.find_last_not_of(" \t");
  const std::string core = text.substr(first, last - first + 1);
  auto pos_of = [&](std::size_t core_idx) { return first + core_idx + 1; };

  const std::size_t lparen = core.find('(');
  const std::string key = core.substr(0, lparen);

  struct KindInfo {
    const char* name;
    const char* param;  // nullptr: no parameters accepted
    double def;
  };
  static const KindInfo kinds[] = {
      {"exp", "lambda", 1.0},     {"uniform", "a", 1.0},
      {"power", "k", 2.0},        {"normal", nullptr, 0.0},
      {"table1:row1", nullptr, 0.0}, {"table1:row2", nullptr, 0.0},
      {"table1:row3", nullptr, 0.0}, {"table1:row4", nullptr, 0.0},
      {"table1:row5", nullptr, 0.0}, {"table1:row6", nullptr, 0.0},
  };
  const KindInfo* info = nullptr;
  for (const auto& k : kinds) {
    if (key == k.name) {
      info = &k;
      break;
    }
  }
  if (info == nullptr) {
    throw ParseError("unknown distribution kind '" + key + "'", pos_of(0));
  }

  double value = info->def;
  if (lparen != std::string::npos) {
    if (info->param == nullptr) {
      throw ParseError("kind '" + key + "' takes no parameters",
                       pos_of(lparen));
    }
    if (core.back() != ')') {
      throw ParseError("expected ')' to close the parameter list",
                       pos_of(core.size() - 1));
    }
    const std::string inside = core.substr(lparen + 1, core.size() - lparen - 2);
    if (inside.find_first_not_of(" \t") == std::string::npos) {
      throw ParseError("empty parameter list", pos_of(lparen + 1));
    }

    bool seen = false;
    std::size_t start = 0;
    while (start <= inside.size()) {
      std::size_t comma = inside.find(',', start);
      if (comma == std::string::npos) comma = inside.size();
      const std::string piece = inside.substr(start, comma - start);
      const std::size_t piece_base = lparen + 1 + start;

      const std::size_t eq = piece.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected name=value", pos_of(piece_base));
      }
      auto trim = [](const std::string& s) {
        const std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const std::size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
      };
      const std::string name = trim(piece.substr(0, eq));
      const std::string vtext = trim(piece.substr(eq + 1));
      if (name != info->param) {
        throw ParseError("unknown parameter '" + name + "' for kind '" + key +
                             "'",
                         pos_of(piece_base));
      }
      if (seen) {
        throw ParseError("duplicate parameter '" + name + "'",
                         pos_of(piece_base));
      }
      double parsed = 0.0;
      const char* begin = vtext.data();
      const char* end = begin + vtext.size();
      auto [ptr, ec] = std::from_chars(begin, end, parsed);
      if (ec != std::errc() || ptr != end || vtext.empty()) {
        throw ParseError("malformed number '" + vtext + "'",
                         pos_of(piece_base + eq + 1));
      }
      value = parsed;
      seen = true;
      start = comma + 1;
    }
  }

  try {
    if (key == "exp") return Distribution::exponential(value);
    if (key == "uniform") return Distribution::uniform(value);
    if (key == "power") return Distribution::power_law(value);
    if (key == "normal") return Distribution::standard_normal();
    // table1:rowN
    return Distribution::table_row(key.back() - '0');
  } catch (const DomainError& e) {
    throw ParseError(e.what(), pos_of(0));
  }
}

std::vector<std::string> catalog_keys() {
  return {"exp",         "uniform",     "power",       "normal",
          "table1:row1", "table1:row2", "table1:row3", "table1:row4",
          "table1:row5", "table1:row6"};
}

std::vector<double> load_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open sample file: " + path);
  }
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    const std::size_t e = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(b, e - b + 1);

    double v = 0.0;
    const char* begin = body.data();
    const char* end = begin + body.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("malformed sample '" + body + "'", line_no);
    }
    if (!std::isfinite(v)) {
      throw ParseError("non-finite sample value", line_no);
    }
    if (v < 0.0) {
      throw ParseError("negative sample value " + body, line_no);
    }
    samples.push_back(v);
  }
  if (samples.empty()) {
    throw DomainError("sample file contains no data: " + path);
  }
  return samples;
}

std::vector<double> sample_inverse_transform(const Distribution& d,
                                             std::size_t count,
                                             std::uint64_t seed) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(d.quantile(detail::counter_uniform01(seed, i)));
  }
  return out;
}

}  // namespace centropy
