// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// A Lie algebra presented by structure constants in a fixed frame. This is the
// only description of the group the library ever needs: left-invariant tensors
// on the group are identified with tensors on the algebra, and all calculus
// (differentials, connections, curvature) is evaluated through the brackets.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegeo {

/// Diagnostic result of validating structure constants.
struct StructureReport {
  double max_antisymmetry_violation = 0.0;  ///< max |c^k_ij + c^k_ji|
  double max_jacobi_violation = 0.0;        ///< max cyclic-sum residual
  bool antisymmetric = false;
  bool jacobi = false;

  bool ok() const { return antisymmetric && jacobi; }
};

/// A finite-dimensional real Lie algebra in a fixed frame e_0..e_{n-1}, with
/// brackets [e_i, e_j] = sum_k c(k,i,j) e_k. Frame indices are 0-based in the
/// C++ API; the JSON interchange format uses 1-based indices.
class LieAlgebraFrame {
 public:
  /// The abelian algebra of the given dimension (all brackets zero).
  explicit LieAlgebraFrame(int dim);

  /// The su(2) frame with [e0,e1] = 2 e2, [e1,e2] = 2 e0, [e2,e0] = 2 e1.
  /// This is the frame in which the unit round 3-sphere is the metric with
  /// identity Gram matrix.
  static LieAlgebraFrame su2();

  /// Loads a frame from a JSON document of the form
  ///   {"dim": n, "brackets": [[i, j, [c_1, ..., c_n]], ...]}
  /// where i, j are 1-based frame indices and the coefficient vector gives
  /// [e_i, e_j] in the frame. Pairs not listed have zero bracket; the reversed
  /// pair is filled in by antisymmetry. Throws std::invalid_argument on
  /// malformed documents, duplicate pairs, or structure constants that fail
  /// antisymmetry/Jacobi validation.
  static LieAlgebraFrame from_json(const std::string& text);

  int dim() const { return dim_; }

  /// Structure constant c(k,i,j): the e_k coefficient of [e_i, e_j].
  double c(int k, int i, int j) const { return c_[index(k, i, j)]; }

  /// Defines [e_i, e_j] (and [e_j, e_i] by antisymmetry). Requires i != j.
  void set_bracket(int i, int j, std::span<const double> coeffs);

  /// Bracket of two coefficient vectors expressed in the frame.
  std::vector<double> bracket(std::span<const double> x, std::span<const double> y) const;

  /// Validates antisymmetry and the Jacobi identity against `tol`.
  StructureReport check_structure(double tol = 1e-12) const;

  /// The opposite algebra (all brackets negated). Right-invariant calculus on
  /// the group is left-invariant calculus for the opposite algebra.
  LieAlgebraFrame opposite() const;

  /// The frame transported through an invertible basis change: each entry
  /// basis_columns[j] holds the e-frame coordinates of the new frame vector,
  /// f_j = sum_a basis_columns[j][a] e_a. Used to generate randomized frames
  /// that satisfy Jacobi by construction.
  LieAlgebraFrame transported(const std::vector<std::vector<double>>& basis_columns) const;

 private:
  std::size_t index(int k, int i, int j) const {
    return (static_cast<std::size_t>(k) * dim_ + i) * dim_ + j;
  }

  int dim_;
  std::vector<double> c_;  // c[k][i][j], dense
};

}  // namespace liegeo
