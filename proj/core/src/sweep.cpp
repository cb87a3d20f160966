#include "liegeo/sweep.hpp"

#include "liegeo/metric.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace liegeo {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// |value| <= this counts as a zero principal Ricci value in floating mode.
constexpr double kRegionTol = 1e-12;

/// |H| <= this at a grid sample counts as an exact root when zero finding.
constexpr double kGridZeroEps = 1e-13;

Region region_from_values(const std::vector<Rational>& vals) {
  bool zero = false;
  for (const Rational& v : vals) {
    if (v < 0) return Region::outside;
    if (v == 0) zero = true;
  }
  return zero ? Region::boundary : Region::interior;
}

/// Everything a sweep needs at one grid point: principal Ricci values along
/// (e1, e2, e3), their region, and the base Chern-Simons integral of the
/// Levi-Civita connection on the chirality's frame (class values are integer
/// offsets from it).
struct PointEval {
  double ric1 = 0.0;
  double ric2 = 0.0;
  double ric3 = 0.0;
  Region region = Region::outside;
  double base = 0.0;
};

PointEval eval_point(const LieAlgebraFrame& frame, double a1, double a2, bool want_base) {
  const auto g = squashed_metric<double>(a1, a2);
  const auto conn = levi_civita(frame, g);
  const std::vector<double> vals = principal_ricci_values_diagonal(g, ricci_tensor(frame, conn));
  PointEval out;
  out.ric1 = vals[0];
  out.ric2 = vals[1];
  out.ric3 = vals[2];
  out.region = region_from_principal_values(vals, kRegionTol);
  if (want_base) out.base = cs_integral(frame, g, conn);
  return out;
}

PointEval eval_point(const LieAlgebraFrame& frame, const Rational& a1, const Rational& a2,
                     bool want_base) {
  const auto g = squashed_metric<Rational>(a1, a2);
  const auto conn = levi_civita(frame, g);
  const std::vector<Rational> vals =
      principal_ricci_values_diagonal(g, ricci_tensor(frame, conn));
  PointEval out;
  out.ric1 = scalar_traits<Rational>::to_double(vals[0]);
  out.ric2 = scalar_traits<Rational>::to_double(vals[1]);
  out.ric3 = scalar_traits<Rational>::to_double(vals[2]);
  out.region = region_from_values(vals);
  if (want_base) {
    out.base = scalar_traits<Rational>::to_double(cs_integral(frame, g, conn));
  }
  return out;
}

Rational rational_grid_point(const Rational& min, const Rational& max, int steps, int k) {
  if (steps <= 1) return min;
  return min + (max - min) * Rational(k) / Rational(steps - 1);
}

GridRange parse_range_object(const json& node, const std::string& field, bool allow_value) {
  if (!node.is_object()) {
    throw std::invalid_argument("liegeo: sweep spec field '" + field + "' must be an object");
  }
  for (const auto& item : node.items()) {
    const std::string& key = item.key();
    const bool known =
        key == "min" || key == "max" || key == "steps" || (allow_value && key == "value");
    if (!known) {
      throw std::invalid_argument("liegeo: sweep spec field '" + field + "' has unknown key '" +
                                  key + "'");
    }
  }
  GridRange out;
  if (allow_value && node.contains("value")) {
    if (node.size() != 1 || !node["value"].is_number()) {
      throw std::invalid_argument("liegeo: sweep spec field '" + field +
                                  "' with \"value\" takes exactly that one numeric key");
    }
    out.min = out.max = node["value"].get<double>();
    out.steps = 1;
    return out;
  }
  for (const char* key : {"min", "max", "steps"}) {
    if (!node.contains(key)) {
      throw std::invalid_argument("liegeo: sweep spec field '" + field + "' is missing '" + key +
                                  "'");
    }
  }
  if (!node["min"].is_number() || !node["max"].is_number() ||
      !node["steps"].is_number_integer()) {
    throw std::invalid_argument("liegeo: sweep spec field '" + field +
                                "' needs numeric min/max and integer steps");
  }
  out.min = node["min"].get<double>();
  out.max = node["max"].get<double>();
  out.steps = node["steps"].get<int>();
  return out;
}

void validate_range(const GridRange& r, const std::string& field) {
  if (!(std::isfinite(r.min) && std::isfinite(r.max))) {
    throw std::invalid_argument("liegeo: sweep range '" + field + "' must be finite");
  }
  if (!(r.min > 0.0)) {
    throw std::invalid_argument("liegeo: sweep range '" + field + "' must be strictly positive");
  }
  if (r.max < r.min) {
    throw std::invalid_argument("liegeo: sweep range '" + field + "' has max < min");
  }
  if (r.steps < 1) {
    throw std::invalid_argument("liegeo: sweep range '" + field + "' needs steps >= 1");
  }
  if (r.max > r.min && r.steps < 2) {
    throw std::invalid_argument("liegeo: sweep range '" + field +
                                "' needs steps >= 2 to span min < max");
  }
}

/// Ascending roots of f on the sampled range: samples with |f| <= kGridZeroEps
/// count directly, strict sign changes between clean samples are bisected.
std::vector<double> roots_on_grid(const std::function<double(double)>& f, const GridRange& range,
                                  double tol) {
  std::vector<double> xs(static_cast<std::size_t>(range.steps));
  std::vector<double> fs(static_cast<std::size_t>(range.steps));
  std::vector<bool> is_zero(static_cast<std::size_t>(range.steps));
  for (int k = 0; k < range.steps; ++k) {
    xs[static_cast<std::size_t>(k)] = grid_point(range, k);
    fs[static_cast<std::size_t>(k)] = f(xs[static_cast<std::size_t>(k)]);
    is_zero[static_cast<std::size_t>(k)] = std::fabs(fs[static_cast<std::size_t>(k)]) <= kGridZeroEps;
  }
  std::vector<double> roots;
  for (int k = 0; k < range.steps; ++k) {
    if (is_zero[static_cast<std::size_t>(k)]) roots.push_back(xs[static_cast<std::size_t>(k)]);
  }
  for (int k = 0; k + 1 < range.steps; ++k) {
    if (is_zero[static_cast<std::size_t>(k)] || is_zero[static_cast<std::size_t>(k + 1)]) continue;
    double lo = xs[static_cast<std::size_t>(k)];
    double hi = xs[static_cast<std::size_t>(k + 1)];
    double flo = fs[static_cast<std::size_t>(k)];
    const double fhi = fs[static_cast<std::size_t>(k + 1)];
    if ((flo < 0.0) == (fhi < 0.0)) continue;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  // Deduplicate roots closer than the resolution of the search.
  const double merge = std::max(8.0 * tol, 1e-11);
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || r - out.back() > merge) out.push_back(r);
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::runtime_error("liegeo: cannot open '" + path.string() + "' for writing");
  }
  stream << content;
  stream.flush();
  if (!stream) {
    throw std::runtime_error("liegeo: failed while writing '" + path.string() + "'");
  }
}

}  // namespace

double grid_point(const GridRange& range, int k) {
  if (range.steps <= 1) return range.min;
  return range.min +
         ((range.max - range.min) * static_cast<double>(k)) / static_cast<double>(range.steps - 1);
}

Region region_from_principal_values(const std::vector<double>& values, double tol) {
  bool zero = false;
  for (double v : values) {
    if (v < -tol) return Region::outside;
    if (v <= tol) zero = true;
  }
  return zero ? Region::boundary : Region::interior;
}

SweepSpec SweepSpec::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("liegeo: sweep spec is not valid JSON: ") +
                                err.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("liegeo: sweep spec must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    const bool known = key == "alpha1" || key == "alpha2" || key == "classes" ||
                       key == "chirality" || key == "format" || key == "mode";
    if (!known) {
      throw std::invalid_argument("liegeo: sweep spec has unknown key '" + key + "'");
    }
  }

  SweepSpec spec;
  if (!doc.contains("alpha1")) {
    throw std::invalid_argument("liegeo: sweep spec is missing 'alpha1'");
  }
  spec.alpha1 = parse_range_object(doc["alpha1"], "alpha1", /*allow_value=*/false);
  if (!doc.contains("alpha2")) {
    throw std::invalid_argument("liegeo: sweep spec is missing 'alpha2'");
  }
  spec.alpha2 = parse_range_object(doc["alpha2"], "alpha2", /*allow_value=*/true);

  if (doc.contains("classes")) {
    if (!doc["classes"].is_array()) {
      throw std::invalid_argument("liegeo: sweep spec 'classes' must be an array of strings");
    }
    for (const json& entry : doc["classes"]) {
      if (!entry.is_string()) {
        throw std::invalid_argument("liegeo: sweep spec 'classes' must be an array of strings");
      }
      spec.classes.push_back(StringClass::parse(entry.get<std::string>()));
    }
  }
  if (doc.contains("chirality")) {
    if (!doc["chirality"].is_string()) {
      throw std::invalid_argument("liegeo: sweep spec 'chirality' must be a string");
    }
    spec.chirality = parse_chirality(doc["chirality"].get<std::string>());
  }
  if (doc.contains("format")) {
    const std::string fmt = doc["format"].is_string() ? doc["format"].get<std::string>() : "";
    if (fmt == "csv") {
      spec.format = OutputFormat::csv;
    } else if (fmt == "json") {
      spec.format = OutputFormat::json;
    } else {
      throw std::invalid_argument("liegeo: sweep spec 'format' must be \"csv\" or \"json\"");
    }
  }
  if (doc.contains("mode")) {
    const std::string mode = doc["mode"].is_string() ? doc["mode"].get<std::string>() : "";
    if (mode == "float") {
      spec.mode = ArithmeticMode::floating;
    } else if (mode == "exact") {
      spec.mode = ArithmeticMode::exact;
    } else {
      throw std::invalid_argument("liegeo: sweep spec 'mode' must be \"float\" or \"exact\"");
    }
  }
  spec.validate();
  return spec;
}

void SweepSpec::validate() const {
  validate_range(alpha1, "alpha1");
  validate_range(alpha2, "alpha2");
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const LieAlgebraFrame frame =
      detail::chirality_frame(LieAlgebraFrame::su2(), spec.chirality);
  std::vector<int> offsets;
  offsets.reserve(spec.classes.size());
  for (const StringClass& cls : spec.classes) {
    offsets.push_back(detail::chirality_offset(cls, spec.chirality));
  }
  const bool want_base = !spec.classes.empty();

  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(spec.alpha1.steps) *
                  static_cast<std::size_t>(spec.alpha2.steps));

  if (spec.mode == ArithmeticMode::exact) {
    const Rational a1_min = rational_from_shortest_decimal(spec.alpha1.min);
    const Rational a1_max = rational_from_shortest_decimal(spec.alpha1.max);
    const Rational a2_min = rational_from_shortest_decimal(spec.alpha2.min);
    const Rational a2_max = rational_from_shortest_decimal(spec.alpha2.max);
    for (int i = 0; i < spec.alpha1.steps; ++i) {
      const Rational a1 = rational_grid_point(a1_min, a1_max, spec.alpha1.steps, i);
      for (int j = 0; j < spec.alpha2.steps; ++j) {
        const Rational a2 = rational_grid_point(a2_min, a2_max, spec.alpha2.steps, j);
        const PointEval pe = eval_point(frame, a1, a2, want_base);
        SweepRecord rec;
        rec.alpha1 = scalar_traits<Rational>::to_double(a1);
        rec.alpha2 = scalar_traits<Rational>::to_double(a2);
        rec.ric1 = pe.ric1;
        rec.ric2 = pe.ric2;
        rec.ric3 = pe.ric3;
        rec.region = pe.region;
        for (int off : offsets) rec.class_integrals.push_back(pe.base + off);
        records.push_back(std::move(rec));
      }
    }
    return records;
  }

  for (int i = 0; i < spec.alpha1.steps; ++i) {
    const double a1 = grid_point(spec.alpha1, i);
    for (int j = 0; j < spec.alpha2.steps; ++j) {
      const double a2 = grid_point(spec.alpha2, j);
      const PointEval pe = eval_point(frame, a1, a2, want_base);
      SweepRecord rec;
      rec.alpha1 = a1;
      rec.alpha2 = a2;
      rec.ric1 = pe.ric1;
      rec.ric2 = pe.ric2;
      rec.ric3 = pe.ric3;
      rec.region = pe.region;
      for (int off : offsets) rec.class_integrals.push_back(pe.base + off);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string render_sweep_csv(const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  std::string out = "alpha1,alpha2,ric1,ric2,ric3,ric_class";
  for (const StringClass& cls : spec.classes) out += ",H_" + cls.to_string();
  out += "\n";
  for (const SweepRecord& rec : records) {
    out += shortest_double_string(rec.alpha1);
    out += ",";
    out += shortest_double_string(rec.alpha2);
    out += ",";
    out += shortest_double_string(rec.ric1);
    out += ",";
    out += shortest_double_string(rec.ric2);
    out += ",";
    out += shortest_double_string(rec.ric3);
    out += ",";
    out += region_name(rec.region);
    for (double h : rec.class_integrals) {
      out += ",";
      out += shortest_double_string(h);
    }
    out += "\n";
  }
  return out;
}

std::string render_sweep_json(const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  ordered_json doc;
  doc["records"] = ordered_json::array();
  for (const SweepRecord& rec : records) {
    ordered_json row;
    row["alpha1"] = rec.alpha1;
    row["alpha2"] = rec.alpha2;
    row["ric"] = {rec.ric1, rec.ric2, rec.ric3};
    row["ric_class"] = region_name(rec.region);
    ordered_json h = ordered_json::object();
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
      h[spec.classes[c].to_string()] = rec.class_integrals[c];
    }
    row["H"] = std::move(h);
    doc["records"].push_back(std::move(row));
  }
  return doc.dump(1) + "\n";
}

std::string run_and_render(const SweepSpec& spec) {
  const std::vector<SweepRecord> records = run_sweep(spec);
  return spec.format == OutputFormat::json ? render_sweep_json(spec, records)
                                           : render_sweep_csv(spec, records);
}

int boundary_curve_count() { return 3; }

std::string boundary_curve_name(int curve) {
  switch (curve) {
    case 0: return "lower";
    case 1: return "upper-left";
    case 2: return "upper-right";
    default: throw std::out_of_range("liegeo: boundary curve index out of range");
  }
}

bool boundary_curve_in_domain(int curve, double alpha1) {
  switch (curve) {
    case 0: return alpha1 > 0.0;
    case 1: return alpha1 > 0.0 && alpha1 < 1.0;
    case 2: return alpha1 > 1.0;
    default: throw std::out_of_range("liegeo: boundary curve index out of range");
  }
}

double boundary_curve_alpha2(int curve, double alpha1) {
  if (!boundary_curve_in_domain(curve, alpha1)) {
    throw std::domain_error("liegeo: alpha1 outside the domain of this boundary curve");
  }
  switch (curve) {
    case 0: return alpha1 / std::sqrt(1.0 + alpha1 * alpha1);
    case 1: return alpha1 / std::sqrt(1.0 - alpha1 * alpha1);
    default: return alpha1 / std::sqrt(alpha1 * alpha1 - 1.0);
  }
}

std::vector<double> find_H_zero_berger(const StringClass& cls, Chirality chirality,
                                       const GridRange& alpha1, double tol) {
  validate_range(alpha1, "alpha1");
  const auto f = [&](double a1) {
    return string_class_integral<double>(cls, a1, 1.0, chirality);
  };
  return roots_on_grid(f, alpha1, tol);
}

std::vector<GridZeroPoint> find_H_zero_grid(const StringClass& cls, Chirality chirality,
                                            const GridRange& alpha1, const GridRange& alpha2,
                                            double tol) {
  validate_range(alpha1, "alpha1");
  validate_range(alpha2, "alpha2");
  std::vector<GridZeroPoint> points;
  for (int i = 0; i < alpha1.steps; ++i) {
    const double a1 = grid_point(alpha1, i);
    const auto f = [&](double a2) {
      return string_class_integral<double>(cls, a1, a2, chirality);
    };
    for (double a2 : roots_on_grid(f, alpha2, tol)) points.push_back({a1, a2});
  }
  return points;
}

std::vector<std::string> emit_figures(const std::string& outdir, const FigureOptions& options) {
  namespace fs = std::filesystem;
  const fs::path dir(outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("liegeo: cannot create figure directory '" + outdir +
                             "': " + ec.message());
  }

  std::vector<std::string> written;

  // fig1a: Ricci sign region over the full grid.
  {
    SweepSpec spec;
    spec.alpha1 = options.alpha1;
    spec.alpha2 = options.alpha2;
    const std::vector<SweepRecord> records = run_sweep(spec);
    std::string csv = "alpha1,alpha2,ric1,ric2,ric3,region\n";
    for (const SweepRecord& rec : records) {
      csv += shortest_double_string(rec.alpha1);
      csv += ",";
      csv += shortest_double_string(rec.alpha2);
      csv += ",";
      csv += shortest_double_string(rec.ric1);
      csv += ",";
      csv += shortest_double_string(rec.ric2);
      csv += ",";
      csv += shortest_double_string(rec.ric3);
      csv += ",";
      csv += region_name(rec.region);
      csv += "\n";
    }
    const fs::path path = dir / "fig1a_region.csv";
    write_text_file(path, csv);
    written.push_back(path.string());
  }

  // fig1b: -2 level set of the left-framing integral, bisected per column,
  // with the nearest analytic boundary curve as an independent cross-check.
  {
    const StringClass left = StringClass::left_framing();
    std::string csv = "alpha1,alpha2_zero,curve,alpha2_curve,abs_error\n";
    for (int i = 0; i < options.alpha1.steps; ++i) {
      const double a1 = grid_point(options.alpha1, i);
      const auto f = [&](double a2) {
        return string_class_integral<double>(left, a1, a2, Chirality::left) + 2.0;
      };
      for (double root : roots_on_grid(f, options.alpha2, options.tol)) {
        int best = -1;
        double best_val = 0.0;
        double best_err = 0.0;
        for (int curve = 0; curve < boundary_curve_count(); ++curve) {
          if (!boundary_curve_in_domain(curve, a1)) continue;
          const double expect = boundary_curve_alpha2(curve, a1);
          const double err = std::fabs(root - expect);
          if (best < 0 || err < best_err) {
            best = curve;
            best_val = expect;
            best_err = err;
          }
        }
        if (best < 0) continue;  // no curve passes through this column
        csv += shortest_double_string(a1);
        csv += ",";
        csv += shortest_double_string(root);
        csv += ",";
        csv += boundary_curve_name(best);
        csv += ",";
        csv += shortest_double_string(best_val);
        csv += ",";
        csv += shortest_double_string(best_err);
        csv += "\n";
      }
    }
    const fs::path path = dir / "fig1b_contours.csv";
    write_text_file(path, csv);
    written.push_back(path.string());
  }

  // fig2a / fig2b: the three anchor-class integrals on the Berger line for
  // each chirality.
  for (const Chirality chirality : {Chirality::left, Chirality::right}) {
    const LieAlgebraFrame frame =
        detail::chirality_frame(LieAlgebraFrame::su2(), chirality);
    const std::array<StringClass, 3> classes = {StringClass::left_framing(),
                                                StringClass::disk_bounding(),
                                                StringClass::right_framing()};
    std::string csv = "alpha1,H_L,H_dD4,H_R\n";
    for (int i = 0; i < options.alpha1.steps; ++i) {
      const double a1 = grid_point(options.alpha1, i);
      const auto g = squashed_metric<double>(a1, 1.0);
      const double base = cs_integral(frame, g, levi_civita(frame, g));
      csv += shortest_double_string(a1);
      for (const StringClass& cls : classes) {
        csv += ",";
        csv += shortest_double_string(base + detail::chirality_offset(cls, chirality));
      }
      csv += "\n";
    }
    const fs::path path =
        dir / (chirality == Chirality::left ? "fig2a_left_berger.csv" : "fig2b_right_berger.csv");
    write_text_file(path, csv);
    written.push_back(path.string());
  }

  return written;
}

std::string shortest_double_string(double value) {
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (result.ec != std::errc()) {
    throw std::runtime_error("liegeo: double formatting failed");
  }
  return std::string(buffer.data(), result.ptr);
}

Rational rational_from_decimal_string(const std::string& text) {
  using boost::multiprecision::cpp_int;
  std::size_t pos = 0;
  const auto fail = [&text]() -> Rational {
    throw std::invalid_argument("liegeo: malformed decimal literal '" + text + "'");
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  cpp_int mantissa = 0;
  long frac_digits = 0;
  bool any_digits = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    mantissa = mantissa * 10 + (text[pos] - '0');
    any_digits = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      mantissa = mantissa * 10 + (text[pos] - '0');
      ++frac_digits;
      any_digits = true;
      ++pos;
    }
  }
  if (!any_digits) return fail();

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    bool exp_digits = false;
    long exp_value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      exp_value = exp_value * 10 + (text[pos] - '0');
      if (exp_value > 100000) return fail();  // absurd exponent
      exp_digits = true;
      ++pos;
    }
    if (!exp_digits) return fail();
    exponent = exp_negative ? -exp_value : exp_value;
  }
  if (pos != text.size()) return fail();

  const long net = exponent - frac_digits;
  cpp_int num = mantissa;
  cpp_int den = 1;
  if (net >= 0) {
    num *= boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(net));
  } else {
    den = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(-net));
  }
  Rational out(num, den);
  return negative ? Rational(-out) : out;
}

Rational rational_from_shortest_decimal(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("liegeo: non-finite value has no decimal expansion");
  }
  return rational_from_decimal_string(shortest_double_string(value));
}

}  // namespace liegeo
