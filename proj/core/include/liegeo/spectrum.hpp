// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Floating-point spectral helpers. These are the only routines in the library
// that need an eigenvalue solver, so they are double-only; the exact-rational
// pipeline reaches the same classifications through principal minors instead.

#pragma once

#include "liegeo/matrix.hpp"

#include <vector>

namespace liegeo {

/// Eigenvalues of the pencil B v = lambda G v for a symmetric form B and a
/// positive definite Gram matrix G, ascending. For B = Ric these are the
/// principal Ricci curvatures (the eigenvalues of the Ricci operator
/// G^{-1} Ric).
std::vector<double> pencil_eigenvalues(const Matrix<double>& gram, const Matrix<double>& form);

/// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix<double>& m);

}  // namespace liegeo
