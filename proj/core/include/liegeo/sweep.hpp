// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Parameter sweeps over the diagonal metric family g_{alpha1, alpha2},
// Ricci-region classification, zero finding for the canonical 3-form
// integrals, and figure-data emission. Output is deterministic: rows are
// emitted in row-major grid order (alpha1 outer, alpha2 inner) and numbers
// render as shortest round-trip decimal strings, so identical specs yield
// byte-identical files.
//
// Two arithmetic modes:
//   * floating: the whole pipeline runs in double precision;
//   * exact: grid coordinates and every geometric quantity are computed in
//     exact rational arithmetic and only converted to double for rendering.
//     JSON numbers in a spec are interpreted through their shortest decimal
//     form, so "0.2" means exactly 1/5 in this mode.

#pragma once

#include "liegeo/connection.hpp"
#include "liegeo/scalar.hpp"
#include "liegeo/string_class.hpp"

#include <string>
#include <vector>

namespace liegeo {

/// An inclusive 1-D sampling range; steps == 1 collapses to {min}.
struct GridRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

/// The k-th grid coordinate, min + (max - min) * k / (steps - 1), with a
/// fixed evaluation order so output is reproducible bit-for-bit.
double grid_point(const GridRange& range, int k);

enum class OutputFormat { csv, json };
enum class ArithmeticMode { floating, exact };

/// A sweep request over the diagonal family. Mirrors the JSON spec document:
///
///   {
///     "alpha1": {"min": 0.2, "max": 3.0, "steps": 281},
///     "alpha2": {"min": 0.2, "max": 3.0, "steps": 281},   // or {"value": 1.0}
///     "classes": ["L", "dD4", "R+1"],
///     "chirality": "left",      // optional, default "left"
///     "format": "csv",          // optional, "csv" (default) or "json"
///     "mode": "float"           // optional, "float" (default) or "exact"
///   }
struct SweepSpec {
  GridRange alpha1;
  GridRange alpha2;  ///< fixed alpha2 is represented as steps == 1, min == max
  std::vector<StringClass> classes;
  Chirality chirality = Chirality::left;
  OutputFormat format = OutputFormat::csv;
  ArithmeticMode mode = ArithmeticMode::floating;

  /// Parses the JSON document above; throws std::invalid_argument with a
  /// description on malformed input (unknown class strings, bad ranges, ...).
  static SweepSpec from_json_text(const std::string& text);

  /// Throws std::invalid_argument unless ranges are strictly positive with
  /// min <= max and steps >= 1 (>= 2 whenever min < max).
  void validate() const;
};

/// One grid point: coordinates, the principal Ricci values along the frame
/// directions (e1, e2, e3), their sign region, and one canonical 3-form
/// integral per requested string class (in spec order).
struct SweepRecord {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double ric1 = 0.0;
  double ric2 = 0.0;
  double ric3 = 0.0;
  Region region = Region::outside;
  std::vector<double> class_integrals;
};

/// Evaluates the grid in row-major order (alpha1 outer loop). Exact mode
/// computes every record in rational arithmetic before converting.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Sign region of floating-point principal Ricci values, treating |v| <= tol
/// as zero. This is the classifier used for every floating-mode record, so
/// callers evaluating single points stay consistent with sweep output.
Region region_from_principal_values(const std::vector<double>& values, double tol = 1e-12);

/// CSV with header alpha1,alpha2,ric1,ric2,ric3,ric_class,H_<class>,...
std::string render_sweep_csv(const SweepSpec& spec, const std::vector<SweepRecord>& records);

/// JSON document {"records": [{"alpha1": .., "alpha2": .., "ric": [..],
/// "ric_class": "..", "H": {"<class>": ..}}, ...]} in the same order.
std::string render_sweep_json(const SweepSpec& spec, const std::vector<SweepRecord>& records);

/// run_sweep + the renderer selected by spec.format.
std::string run_and_render(const SweepSpec& spec);

/// The three analytic curves bounding the positive-Ricci region in the
/// (alpha1, alpha2) quarter-plane, as graphs alpha2 = f(alpha1):
///   0 "lower":       alpha2 = alpha1 / sqrt(1 + alpha1^2)   (all alpha1 > 0)
///   1 "upper-left":  alpha2 = alpha1 / sqrt(1 - alpha1^2)   (alpha1 < 1)
///   2 "upper-right": alpha2 = alpha1 / sqrt(alpha1^2 - 1)   (alpha1 > 1)
/// On each curve exactly one principal Ricci pair degenerates and the
/// left-framing integral equals -2. The classifier never consults these
/// curves; they exist as an independent cross-check layer.
int boundary_curve_count();
std::string boundary_curve_name(int curve);
bool boundary_curve_in_domain(int curve, double alpha1);
double boundary_curve_alpha2(int curve, double alpha1);

/// Roots of alpha1 -> integral_H(cls, g_{alpha1, 1}) on the Berger line,
/// found by scanning the range for sign changes and bisecting each to `tol`
/// in alpha1 (ascending, deduplicated). A grid sample with |H| <= 1e-13 is
/// accepted as a root directly, which also catches tangential zeros that
/// never change sign (the disk-bounding class at alpha1 = 1); tangential
/// zeros strictly between samples are invisible to scanning, so grids should
/// include suspected special points. An empty result means no sign change
/// was found (not an error).
std::vector<double> find_H_zero_berger(const StringClass& cls, Chirality chirality,
                                       const GridRange& alpha1, double tol = 1e-12);

struct GridZeroPoint {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// Zero level set of (alpha1, alpha2) -> integral_H(cls, g_{alpha1, alpha2})
/// on the full grid: per alpha1 column, sign changes along alpha2 are
/// bisected to `tol`; points come out in row-major order.
std::vector<GridZeroPoint> find_H_zero_grid(const StringClass& cls, Chirality chirality,
                                            const GridRange& alpha1, const GridRange& alpha2,
                                            double tol = 1e-12);

/// Grid and tolerance used by emit_figures; the default covers the visible
/// domain [0.2, 3.0]^2 at step 0.01.
struct FigureOptions {
  GridRange alpha1{0.2, 3.0, 281};
  GridRange alpha2{0.2, 3.0, 281};
  double tol = 1e-12;
};

/// Writes the four figure-data files into `outdir` (created if missing) and
/// returns their paths in emission order:
///   fig1a_region.csv       alpha1,alpha2,ric1,ric2,ric3,region
///   fig1b_contours.csv     alpha1,alpha2_zero,curve,alpha2_curve,abs_error
///                          (-2 level set of the left-framing integral per
///                          alpha1 column, with the nearest analytic curve)
///   fig2a_left_berger.csv  alpha1,H_L,H_dD4,H_R  (left chirality, alpha2=1)
///   fig2b_right_berger.csv alpha1,H_L,H_dD4,H_R  (right chirality)
/// Throws std::runtime_error on I/O failure.
std::vector<std::string> emit_figures(const std::string& outdir,
                                      const FigureOptions& options = FigureOptions{});

/// Shortest decimal string that parses back to exactly this double
/// (std::to_chars); used for all CSV numbers.
std::string shortest_double_string(double value);

/// Exact rational value of a decimal string such as "-0.25" or "1e-05"
/// (sign, digits, optional fraction, optional decimal exponent).
/// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal_string(const std::string& text);

/// The exact rational a double denotes in decimal terms: parse its shortest
/// round-trip string. This is how exact mode interprets JSON numbers
/// (0.2 -> 1/5), deliberately different from the dyadic expansion.
Rational rational_from_shortest_decimal(double value);

}  // namespace liegeo
