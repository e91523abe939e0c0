// Command-line front end: one case as a JSON report, or a parameter sweep as CSV.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical gate.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "movingload/errors.hpp"
#include "movingload/run.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_gate = 3;

int report_error(const std::string& name, const std::string& detail, int code) {
  std::cerr << nlohmann::json{{"error", name}, {"detail", detail}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace movingload;

  RunConfig rc;
  std::vector<double> xis;
  std::vector<double> ys;
  std::string sweep_axis = "none";
  std::string sweep_range;
  std::string out_path;

  CLI::App app{"Graded half-plane under a subsonic moving point load"};
  app.set_config("--config", "", "key = value configuration file; flags override it");
  app.add_option("--nu", rc.material.nu, "grading exponent, 0 < nu < 1")->capture_default_str();
  app.add_option("--nu-p", rc.material.nu_p, "Poisson ratio, 0 <= nu_p < 0.5")
      ->capture_default_str();
  app.add_option("--speed-ratio", rc.material.speed_ratio, "load speed over shear wave speed")
      ->capture_default_str();
  app.add_option("--h1", rc.material.h1, "tangential load amplitude")->capture_default_str();
  app.add_option("--h2", rc.material.h2, "normal load amplitude")->capture_default_str();
  app.add_option("--xi0", rc.material.xi0, "load position")->capture_default_str();
  app.add_option("--xi", xis, "query abscissa (repeatable, paired with --y)");
  app.add_option("--y", ys, "query depth >= 0 (repeatable, paired with --xi)");
  app.add_option("--n", rc.n, "collocation panels")->capture_default_str();
  app.add_option("--sigma-frac", rc.sigma_fraction, "sigma as a fraction of nu")
      ->capture_default_str();
  app.add_option("--eta-max", rc.field.eta_max, "upper limit of the small-eta expansion")
      ->capture_default_str();
  app.add_option("--eta-min", rc.field.eta_min, "lower limit of the large-eta expansion")
      ->capture_default_str();
  app.add_option("--realness-tol", rc.field.realness_tolerance,
                 "largest accepted |Im|/|value| of a reported field")
      ->capture_default_str();
  app.add_option("--sweep", sweep_axis, "sweep axis")
      ->check(CLI::IsMember({"none", "nu", "speed"}))
      ->capture_default_str();
  app.add_option("--sweep-range", sweep_range, "a:b:step");
  app.add_option("--jobs", rc.jobs, "worker threads for sweeps")->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("ConfigError", e.what(), exit_config);
  }

  try {
    if (xis.size() != ys.size())
      throw ConfigError("--xi and --y must be given the same number of times");
    if (!xis.empty()) {
      rc.points.clear();
      for (std::size_t i = 0; i < xis.size(); ++i) rc.points.push_back({xis[i], ys[i]});
    }
    const std::map<std::string, SweepAxis> axes{
        {"none", SweepAxis::none}, {"nu", SweepAxis::nu}, {"speed", SweepAxis::speed}};
    rc.sweep = axes.at(sweep_axis);
    if (rc.sweep != SweepAxis::none) {
      if (sweep_range.empty()) throw ConfigError("--sweep needs --sweep-range a:b:step");
      rc.range = parse_sweep_range(sweep_range);
    }

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file " + out_path);
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    if (rc.sweep == SweepAxis::none) {
      os << case_report_json(run_case(rc)) << '\n';
    } else {
      write_sweep_csv(os, run_sweep(rc));
    }
    if (!os) throw ConfigError("failed writing output");
  } catch (const Error& e) {
    return report_error(e.name(), e.what(),
                        e.category() == ErrorCategory::config ? exit_config : exit_gate);
  }
  return 0;
}
