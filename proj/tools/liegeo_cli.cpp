/// Command-line front end for the liegeo library: pointwise Ricci and
/// Chern-Simons evaluation, e-invariants, parameter sweeps, figure-data
/// emission, and the randomized torsion self-check.
///
/// Exit codes: 0 on success, 2 on a validation error (bad flags, malformed
/// spec file, unknown class string), 1 on an internal error.

#include <cmath>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liegeo/connection.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/string_class.hpp"
#include "liegeo/sweep.hpp"
#include "liegeo/torsion_check.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

void require_positive_parameter(const char* name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("liegeo: --") + name +
                                " must be a finite positive number");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("liegeo: cannot open spec file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("liegeo: I/O error while reading '" + path + "'");
  }
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("liegeo: cannot open output file '" + path + "'");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("liegeo: I/O error while writing '" + path + "'");
  }
}

int run_ricci(double alpha1, double alpha2) {
  require_positive_parameter("alpha1", alpha1);
  require_positive_parameter("alpha2", alpha2);
  const liegeo::LieAlgebraFrame frame = liegeo::LieAlgebraFrame::su2();
  const auto metric = liegeo::squashed_metric<double>(alpha1, alpha2);
  const auto connection = liegeo::levi_civita(frame, metric);
  const auto ricci = liegeo::ricci_tensor(frame, connection);
  const std::vector<double> values = liegeo::principal_ricci_values_diagonal(metric, ricci);
  const liegeo::Region region = liegeo::region_from_principal_values(values);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::cout << "ric" << (i + 1) << ' ' << liegeo::shortest_double_string(values[i]) << '\n';
  }
  std::cout << "region " << liegeo::region_name(region) << '\n';
  return kExitOk;
}

int run_cs(const std::string& class_text, double alpha1, double alpha2,
           const std::string& chirality_text) {
  require_positive_parameter("alpha1", alpha1);
  require_positive_parameter("alpha2", alpha2);
  const liegeo::StringClass cls = liegeo::StringClass::parse(class_text);
  const liegeo::Chirality chirality = liegeo::parse_chirality(chirality_text);
  const double value = liegeo::string_class_integral<double>(cls, alpha1, alpha2, chirality);
  std::cout << "H " << liegeo::shortest_double_string(value) << '\n';
  return kExitOk;
}

int run_einv(const std::string& class_text) {
  const liegeo::StringClass cls = liegeo::StringClass::parse(class_text);
  std::cout << liegeo::e_invariant(cls).to_string() << '\n';
  return kExitOk;
}

int run_sweep(const std::string& spec_path, const std::string& out_path) {
  const liegeo::SweepSpec spec = liegeo::SweepSpec::from_json_text(read_text_file(spec_path));
  write_text_file(out_path, liegeo::run_and_render(spec));
  std::cout << "wrote " << out_path << '\n';
  return kExitOk;
}

int run_figures(const std::string& outdir) {
  const std::vector<std::string> written = liegeo::emit_figures(outdir);
  for (const std::string& path : written) {
    std::cout << "wrote " << path << '\n';
  }
  return kExitOk;
}

int run_torsion_check(int trials, unsigned long long seed) {
  if (trials < 1) {
    throw std::invalid_argument("liegeo: --trials must be at least 1");
  }
  liegeo::TorsionCheckOptions options;
  options.trials = trials;
  options.seed = seed;
  const liegeo::TorsionCheckReport report = liegeo::run_torsion_checks(options);
  std::cout << liegeo::describe(report);
  return report.passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant Riemannian geometry on compact Lie groups: Ricci regions,\n"
               "Chern-Simons integrals of string classes, e-invariants, and sweeps."};
  app.require_subcommand(1);

  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::string class_text;
  std::string chirality_text = "left";
  std::string spec_path;
  std::string out_path;
  std::string outdir;
  int trials = 100;
  unsigned long long seed = 1;

  CLI::App* ricci = app.add_subcommand(
      "ricci", "Principal Ricci values and positivity region of a squashed metric");
  ricci->add_option("--alpha1", alpha1, "First squashing parameter (> 0)")->required();
  ricci->add_option("--alpha2", alpha2, "Second squashing parameter (> 0)")->required();

  CLI::App* cs = app.add_subcommand(
      "cs", "Chern-Simons integral of a string class on a squashed 3-sphere");
  cs->add_option("--class", class_text, "String class, e.g. L, dD4, R, L+3, R-1")->required();
  cs->add_option("--alpha1", alpha1, "First squashing parameter (> 0)")->required();
  cs->add_option("--alpha2", alpha2, "Second squashing parameter (> 0)")->required();
  cs->add_option("--chirality", chirality_text, "Invariance side: left or right")
      ->capture_default_str();

  CLI::App* einv = app.add_subcommand("einv", "e-invariant of a string class in Q/Z");
  einv->add_option("--class", class_text, "String class, e.g. L, dD4, R, L+3, R-1")->required();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Grid sweep over (alpha1, alpha2) driven by a JSON spec file");
  sweep->add_option("--spec", spec_path, "Path to the JSON sweep specification")->required();
  sweep->add_option("--out", out_path, "Output file (CSV or JSON per the spec file)")->required();

  CLI::App* figures = app.add_subcommand(
      "figures", "Emit the four reference figure data files into a directory");
  figures->add_option("--outdir", outdir, "Destination directory (must exist)")->required();

  CLI::App* torsion = app.add_subcommand(
      "torsion-check", "Randomized self-check of the torsion-modified Ricci identities");
  torsion->add_option("--trials", trials, "Number of randomized trials")->capture_default_str();
  torsion->add_option("--seed", seed, "Deterministic RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (ricci->parsed()) {
      return run_ricci(alpha1, alpha2);
    }
    if (cs->parsed()) {
      return run_cs(class_text, alpha1, alpha2, chirality_text);
    }
    if (einv->parsed()) {
      return run_einv(class_text);
    }
    if (sweep->parsed()) {
      return run_sweep(spec_path, out_path);
    }
    if (figures->parsed()) {
      return run_figures(outdir);
    }
    if (torsion->parsed()) {
      return run_torsion_check(trials, seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "liegeo: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
