#include "liegeo/torsion_check.hpp"

#include "liegeo/lie_algebra.hpp"
#include "liegeo/spectrum.hpp"
#include "liegeo/torsion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace liegeo {

namespace {

/// Uniform double in [0, 1) from the top 53 bits of the engine output;
/// unlike std::uniform_real_distribution this is pinned by the standard's
/// mt19937_64 sequence, so results are identical across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

/// The standard rank-3 frame extended by a central line: unimodular,
/// 4-dimensional, and rich enough that generic 3-forms have nonzero
/// codifferential.
LieAlgebraFrame su2_plus_line() {
  LieAlgebraFrame L(4);
  const std::array<double, 4> e2 = {0.0, 0.0, 2.0, 0.0};
  const std::array<double, 4> e0 = {2.0, 0.0, 0.0, 0.0};
  const std::array<double, 4> e1 = {0.0, 2.0, 0.0, 0.0};
  L.set_bracket(0, 1, e2);
  L.set_bracket(1, 2, e0);
  L.set_bracket(2, 0, e1);
  return L;
}

/// Random SPD Gram A^T A + I/2: eigenvalues in [1/2, n + 1/2], so the
/// condition number stays small and double evaluation is well posed.
Matrix<double> random_gram(std::mt19937_64& rng, int n) {
  Matrix<double> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = uniform(rng, -1.0, 1.0);
  Matrix<double> g = a.transpose() * a;
  for (int i = 0; i < n; ++i) g(i, i) += 0.5;
  return g;
}

InvariantForm<double> random_three_form(std::mt19937_64& rng, int n) {
  InvariantForm<double> h(n, 3);
  for (std::size_t r = 0; r < h.component_count(); ++r) {
    h.component(static_cast<int>(r)) = uniform(rng, -2.0, 2.0);
  }
  return h;
}

double relative_residual(const Matrix<double>& got, const Matrix<double>& want) {
  double scale = 1.0;
  for (int i = 0; i < want.rows(); ++i)
    for (int j = 0; j < want.cols(); ++j) scale = std::max(scale, std::fabs(want(i, j)));
  return (got - want).max_abs() / scale;
}

}  // namespace

TorsionCheckReport run_torsion_checks(const TorsionCheckOptions& options) {
  if (options.trials <= 0) {
    throw std::invalid_argument("liegeo: torsion checks need a positive trial count");
  }
  std::mt19937_64 rng(options.seed);
  const LieAlgebraFrame frames[2] = {LieAlgebraFrame::su2(), su2_plus_line()};

  TorsionCheckReport report;
  report.trials = options.trials;
  report.min_correction_eigenvalue = std::numeric_limits<double>::infinity();
  report.min_top_correction_eigenvalue = std::numeric_limits<double>::infinity();

  for (int trial = 0; trial < options.trials; ++trial) {
    const LieAlgebraFrame& L = frames[trial % 2];
    const int n = L.dim();
    const InnerProductOnAlgebra<double> g(random_gram(rng, n));
    const InvariantForm<double> H = random_three_form(rng, n);
    bool ok = true;

    // Direct curvature route vs Ric - Q - (1/2) delta H.
    const Matrix<double> direct = ricci_with_torsion_direct(L, g, H);
    const Matrix<double> decomposed = ricci_with_torsion_decomposed(L, g, H);
    const double residual = (direct - decomposed).max_abs();
    report.max_decomposition_residual = std::max(report.max_decomposition_residual, residual);
    ok = ok && residual <= options.decomposition_tol;

    // Correction form: positive semidefinite, nonzero for nonzero torsion.
    const Matrix<double> q = torsion_correction_form(L, g, H);
    const std::vector<double> eigs = pencil_eigenvalues(g.gram(), q);
    report.min_correction_eigenvalue =
        std::min(report.min_correction_eigenvalue, eigs.front());
    report.min_top_correction_eigenvalue =
        std::min(report.min_top_correction_eigenvalue, eigs.back());
    ok = ok && eigs.front() >= -options.psd_tol;
    ok = ok && eigs.back() > 0.0;

    // Metric rescaling: torsion scales by 1/eps, Ricci follows the blow-up
    // law. eps = 1 doubles as an idempotence check of both routes.
    const FrameBilinearMap<double> torsion = torsion_from_three_form(L, g, H);
    for (const double eps : {1e-4, 1.0, 1e4}) {
      const FrameBilinearMap<double> torsion_eps =
          torsion_from_three_form(L, scaled_metric(g, eps), H);
      double torsion_residual = 0.0;
      double torsion_scale = 1.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const double want = torsion.component(i, j, k) / eps;
            torsion_scale = std::max(torsion_scale, std::fabs(want));
            torsion_residual =
                std::max(torsion_residual, std::fabs(torsion_eps.component(i, j, k) - want));
          }
      torsion_residual /= torsion_scale;
      report.max_torsion_scaling_residual =
          std::max(report.max_torsion_scaling_residual, torsion_residual);
      ok = ok && torsion_residual <= options.scaling_rel_tol;

      const double ricci_residual = relative_residual(
          scaled_ricci_direct(L, g, H, eps), scaled_ricci_scaling_law(L, g, H, eps));
      report.max_ricci_scaling_residual =
          std::max(report.max_ricci_scaling_residual, ricci_residual);
      ok = ok && ricci_residual <= options.scaling_rel_tol;
    }

    if (!ok) ++report.failures;
  }
  return report;
}

std::string describe(const TorsionCheckReport& report) {
  std::ostringstream out;
  out << "trials: " << report.trials << "\n";
  out << "failures: " << report.failures << "\n";
  out << "max decomposition residual: " << report.max_decomposition_residual << "\n";
  out << "min correction eigenvalue: " << report.min_correction_eigenvalue << "\n";
  out << "min top correction eigenvalue: " << report.min_top_correction_eigenvalue << "\n";
  out << "max torsion scaling residual: " << report.max_torsion_scaling_residual << "\n";
  out << "max ricci scaling residual: " << report.max_ricci_scaling_residual << "\n";
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace liegeo
