#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "centropy/commands.hpp"

int main(int argc, char** argv) {
  using namespace centropy::cli;

  CLI::App app{
      "cumulative information measures (CRE, CE, WCRE, WCE) of non-negative "
      "distributions: quadrature, extreme-moment series, and bound reports"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "random seed for sampling commands")
      ->capture_default_str();

  std::string dist;
  std::string measures = "all";
  std::string measure;
  std::string m_text = "auto";
  double width = 0.01;
  std::size_t m_max = 200000;
  std::string terms_out;
  std::size_t harter_m = 99;
  std::string which = "largest";
  std::size_t n = 1;
  int order = 1;
  std::size_t samples = 100000;
  unsigned threads = 1;
  std::string path;

  CLI::App* entropy =
      app.add_subcommand("entropy", "measures by direct quadrature");
  entropy->add_option("dist", dist, "distribution spec, e.g. exp(lambda=1)")
      ->required();
  entropy->add_option("measures", measures,
                      "comma-separated subset of cre,ce,wcre,wce, or all");

  CLI::App* series =
      app.add_subcommand("series", "extreme-moment series with certified bracket");
  series->add_option("dist", dist, "distribution spec")->required();
  series->add_option("measure", measure, "cre, ce, wcre, wce, or sum")
      ->required();
  series->add_option("--m", m_text, "truncation point, or \"auto\"")
      ->capture_default_str();
  series->add_option("--width", width, "target bracket width for auto mode")
      ->capture_default_str();
  series->add_option("--m-max", m_max, "truncation cap for auto mode")
      ->capture_default_str();
  series->add_option("--terms-out", terms_out, "write per-term CSV ledger here");

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate every bound theorem");
  bounds->add_option("dist", dist, "distribution spec")->required();

  app.add_subcommand("table1",
                     "recompute the six-row reference table with deltas");

  CLI::App* harter = app.add_subcommand(
      "harter", "normal expected-maxima series vs the coefficient bound");
  harter->add_option("--m", harter_m, "truncation point")->capture_default_str();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Monte Carlo check of one extreme moment against quadrature");
  oracle->add_option("dist", dist, "distribution spec")->required();
  oracle->add_option("--which", which, "largest or smallest")
      ->capture_default_str();
  oracle->add_option("--n", n, "sample size of the extreme")->required();
  oracle->add_option("--order", order, "moment order, 1 or 2")
      ->capture_default_str();
  oracle->add_option("--samples", samples, "Monte Carlo sample count")
      ->capture_default_str();
  oracle->add_option("--threads", threads, "worker threads")
      ->capture_default_str();

  CLI::App* ingest = app.add_subcommand(
      "ingest", "plug-in measures of a sample file (one value per line)");
  ingest->add_option("path", path, "sample file")->required();
  ingest->add_option("measures", measures,
                     "comma-separated subset of cre,ce,wcre,wce, or all");

  CLI11_PARSE(app, argc, argv);

  CommandResult r;
  if (app.got_subcommand(entropy)) {
    r = run_entropy(g, dist, measures);
  } else if (app.got_subcommand(series)) {
    r = run_series(g, dist, measure, m_text, width, m_max, terms_out);
  } else if (app.got_subcommand(bounds)) {
    r = run_bounds(g, dist);
  } else if (app.got_subcommand(harter)) {
    r = run_harter(g, harter_m);
  } else if (app.got_subcommand(oracle)) {
    r = run_oracle(g, dist, which, n, order, samples, threads);
  } else if (app.got_subcommand(ingest)) {
    r = run_ingest(g, path, measures);
  } else {
    r = run_table1(g);
  }

  if (!r.error.empty()) {
    std::fprintf(stderr, "error: %s\n", r.error.c_str());
    return r.exit_code != 0 ? r.exit_code : 1;
  }
  std::fputs(render(r, g.format).c_str(), stdout);
  return r.exit_code;
}
