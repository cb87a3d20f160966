// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Milnor normal form for metrics on su(2)-type frames. Every left-invariant
// metric on a 3-dimensional unimodular algebra admits an orthonormal frame
// E_1, E_2, E_3 with [E_a, E_b] = lambda_c E_c (cyclic) and the lambda_i are
// metric invariants. When all lambda_i are positive (the su(2) case) the
// metric is isometric, up to one overall scale, to a member of the standard
// two-parameter diagonal family on the standard frame [e1,e2] = 2 e3
// (cyclic): this routine recovers those parameters and the frame map
// realising the isometry.
//
// With the Milnor eigenvalues sorted ascending, the normal form is
//   alpha1 = sqrt(lambda3 / lambda1) >= alpha2 = sqrt(lambda3 / lambda2) >= 1,
//   scale  = 4 / (lambda1 lambda2),
// and the columns f_i = a_i E_i, a_i = 2 / sqrt(lambda_j lambda_k), satisfy
// [f_1, f_2] = 2 f_3 (cyclic) with g(f_i, f_j) = scale * diag(1/alpha1^2,
// 1/alpha2^2, 1).

#pragma once

#include "liegeo/lie_algebra.hpp"
#include "liegeo/matrix.hpp"
#include "liegeo/metric.hpp"

#include <array>

namespace liegeo {

struct MilnorNormalForm {
  double alpha1 = 0.0;  ///< first squash parameter, >= alpha2
  double alpha2 = 0.0;  ///< second squash parameter, >= 1
  double scale = 0.0;   ///< overall metric scale in front of the diagonal family

  std::array<double, 3> milnor_eigenvalues{};  ///< ascending, all positive

  /// Columns express the standard frame inside the input frame: column i is
  /// f_i, with [f_1, f_2] = 2 f_3 (cyclic) and
  /// g(f_i, f_j) = scale * diag(1/alpha1^2, 1/alpha2^2, 1).
  Matrix<double> frame_map;

  double bracket_residual = 0.0;  ///< max deviation of the columns from the standard brackets
  double gram_residual = 0.0;     ///< max deviation of F^T G F from the scaled diagonal family
};

/// Computes the normal form. Throws std::invalid_argument when the frame is
/// not 3-dimensional, the Milnor matrix is not symmetric within `tol`
/// (non-unimodular frame), or some Milnor eigenvalue fails to be positive
/// (not an su(2)-type frame in the standard orientation: reversing the
/// orientation flips every eigenvalue negative, and such frames are rejected
/// rather than silently mirrored because the canonical 3-form integrals
/// change sign under mirror).
MilnorNormalForm milnor_normal_form(const LieAlgebraFrame& L,
                                    const InnerProductOnAlgebra<double>& g, double tol = 1e-9);

}  // namespace liegeo
