#include "liegeo/lie_algebra.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <utility>

namespace liegeo {

LieAlgebraFrame::LieAlgebraFrame(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("liegeo: frame dimension must be positive");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
}

LieAlgebraFrame LieAlgebraFrame::su2() {
  LieAlgebraFrame L(3);
  const double two[3][3] = {{0, 0, 2}, {2, 0, 0}, {0, 2, 0}};
  // [e0,e1] = 2 e2, [e1,e2] = 2 e0, [e2,e0] = 2 e1.
  L.set_bracket(0, 1, two[0]);
  L.set_bracket(1, 2, two[1]);
  L.set_bracket(2, 0, two[2]);
  return L;
}

void LieAlgebraFrame::set_bracket(int i, int j, std::span<const double> coeffs) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw std::invalid_argument("liegeo: bracket index out of range");
  }
  if (i == j) throw std::invalid_argument("liegeo: bracket of a frame vector with itself is zero");
  if (static_cast<int>(coeffs.size()) != dim_) {
    throw std::invalid_argument("liegeo: bracket coefficient vector has wrong length");
  }
  for (int k = 0; k < dim_; ++k) {
    c_[index(k, i, j)] = coeffs[k];
    c_[index(k, j, i)] = -coeffs[k];
  }
}

std::vector<double> LieAlgebraFrame::bracket(std::span<const double> x,
                                             std::span<const double> y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw std::invalid_argument("liegeo: vector length does not match frame dimension");
  }
  std::vector<double> out(static_cast<std::size_t>(dim_), 0.0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      const double xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += xy * c(k, i, j);
    }
  }
  return out;
}

StructureReport LieAlgebraFrame::check_structure(double tol) const {
  StructureReport report;
  for (int k = 0; k < dim_; ++k) {
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        const double v = std::fabs(c(k, i, j) + c(k, j, i));
        report.max_antisymmetry_violation = std::max(report.max_antisymmetry_violation, v);
      }
    }
  }
  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        for (int l = 0; l < dim_; ++l) {
          double sum = 0.0;
          for (int m = 0; m < dim_; ++m) {
            sum += c(m, i, j) * c(l, m, k) + c(m, j, k) * c(l, m, i) + c(m, k, i) * c(l, m, j);
          }
          report.max_jacobi_violation = std::max(report.max_jacobi_violation, std::fabs(sum));
        }
      }
    }
  }
  report.antisymmetric = report.max_antisymmetry_violation <= tol;
  report.jacobi = report.max_jacobi_violation <= tol;
  return report;
}

LieAlgebraFrame LieAlgebraFrame::opposite() const {
  LieAlgebraFrame out(dim_);
  for (std::size_t n = 0; n < c_.size(); ++n) out.c_[n] = -c_[n];
  return out;
}

LieAlgebraFrame LieAlgebraFrame::transported(
    const std::vector<std::vector<double>>& basis_columns) const {
  const int n = dim_;
  if (static_cast<int>(basis_columns.size()) != n) {
    throw std::invalid_argument("liegeo: basis change must provide one column per frame vector");
  }
  // Invert the column matrix B (f_j = sum_a B[a][j] e_a) by Gauss-Jordan.
  std::vector<std::vector<double>> aug(n, std::vector<double>(2 * n, 0.0));
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(basis_columns[r].size()) != n) {
      throw std::invalid_argument("liegeo: basis column has wrong length");
    }
    for (int cidx = 0; cidx < n; ++cidx) aug[r][cidx] = basis_columns[cidx][r];
    aug[r][n + r] = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) pivot = r;
    }
    if (aug[pivot][col] == 0.0) throw std::invalid_argument("liegeo: basis change is singular");
    std::swap(aug[col], aug[pivot]);
    const double inv = 1.0 / aug[col][col];
    for (int cc = 0; cc < 2 * n; ++cc) aug[col][cc] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = aug[r][col];
      if (f == 0.0) continue;
      for (int cc = 0; cc < 2 * n; ++cc) aug[r][cc] -= f * aug[col][cc];
    }
  }
  // New constants: [f_i, f_j] = sum over brackets of columns, re-expressed
  // through B^{-1}.
  LieAlgebraFrame out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::vector<double> br = bracket(basis_columns[i], basis_columns[j]);
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        for (int a = 0; a < n; ++a) v += aug[k][n + a] * br[a];
        out.c_[out.index(k, i, j)] = v;
      }
    }
  }
  return out;
}

LieAlgebraFrame LieAlgebraFrame::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("liegeo: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw std::invalid_argument("liegeo: structure-constant document needs an integer \"dim\"");
  }
  const int n = doc["dim"].get<int>();
  if (n <= 0) throw std::invalid_argument("liegeo: \"dim\" must be positive");
  LieAlgebraFrame L(n);
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) {
      throw std::invalid_argument("liegeo: \"brackets\" must be an array");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (const auto& entry : doc["brackets"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer() || !entry[2].is_array()) {
        throw std::invalid_argument(
            "liegeo: each bracket entry must be [i, j, [coefficients...]]");
      }
      const int i = entry[0].get<int>();
      const int j = entry[1].get<int>();
      if (i < 1 || j < 1 || i > n || j > n || i == j) {
        throw std::invalid_argument("liegeo: bracket indices must be distinct and in 1..dim");
      }
      if (entry[2].size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("liegeo: bracket coefficient vector must have length dim");
      }
      const std::size_t slot = static_cast<std::size_t>(std::min(i, j) - 1) * n +
                               static_cast<std::size_t>(std::max(i, j) - 1);
      if (seen[slot]) throw std::invalid_argument("liegeo: duplicate bracket pair");
      seen[slot] = true;
      std::vector<double> coeffs(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        if (!entry[2][static_cast<std::size_t>(k)].is_number()) {
          throw std::invalid_argument("liegeo: bracket coefficients must be numbers");
        }
        coeffs[static_cast<std::size_t>(k)] = entry[2][static_cast<std::size_t>(k)].get<double>();
      }
      L.set_bracket(i - 1, j - 1, coeffs);
    }
  }
  const StructureReport report = L.check_structure();
  if (!report.ok()) {
    throw std::invalid_argument(
        "liegeo: structure constants violate antisymmetry or the Jacobi identity "
        "(max Jacobi residual " +
        std::to_string(report.max_jacobi_violation) + ")");
  }
  return L;
}

}  // namespace liegeo
