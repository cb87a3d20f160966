#include "liegeo/milnor.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace liegeo {

namespace {

// Cyclic complement of c in {0,1,2}: pair(c) = (a, b) with (a,b,c) cyclic.
constexpr int cyclic_a[3] = {1, 2, 0};
constexpr int cyclic_b[3] = {2, 0, 1};

}  // namespace

MilnorNormalForm milnor_normal_form(const LieAlgebraFrame& L,
                                    const InnerProductOnAlgebra<double>& g, double tol) {
  if (L.dim() != 3 || g.dim() != 3) {
    throw std::invalid_argument("liegeo: the Milnor normal form requires a 3-dimensional frame");
  }

  // Orthonormal frame E_i (columns of F0) for g.
  const Matrix<double> F0 = g.orthonormal_frame();

  // Milnor matrix: M(r, c) = g([E_a, E_b], E_r) with (a, b, c) cyclic, i.e.
  // [E_a, E_b] = sum_r M(r, c) E_r. Computing components in the E-frame needs
  // F0^{-1} (bracket results are expressed in the original frame).
  const Matrix<double> F0inv = F0.inverse();
  Matrix<double> M(3, 3);
  for (int c = 0; c < 3; ++c) {
    const int a = cyclic_a[c];
    const int b = cyclic_b[c];
    std::vector<double> Ea(3), Eb(3);
    for (int r = 0; r < 3; ++r) {
      Ea[static_cast<std::size_t>(r)] = F0(r, a);
      Eb[static_cast<std::size_t>(r)] = F0(r, b);
    }
    const std::vector<double> br = L.bracket(Ea, Eb);
    const std::vector<double> brE = F0inv.apply(br);
    for (int r = 0; r < 3; ++r) M(r, c) = brE[static_cast<std::size_t>(r)];
  }

  double sym_residual = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) sym_residual = std::max(sym_residual, std::fabs(M(i, j) - M(j, i)));
  if (sym_residual > tol) {
    throw std::invalid_argument(
        "liegeo: Milnor matrix is not symmetric; the frame is not unimodular");
  }

  Eigen::Matrix3d Me;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Me(i, j) = 0.5 * (M(i, j) + M(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(Me);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("liegeo: Milnor eigenvalue solve failed");
  }
  Eigen::Vector3d lambda = solver.eigenvalues();  // ascending
  Eigen::Matrix3d Q = solver.eigenvectors();
  if (lambda(0) <= tol) {
    throw std::invalid_argument(
        "liegeo: Milnor eigenvalues must all be positive (su(2)-type frame required)");
  }
  // A rotation (det +1) keeps the cyclic bracket pattern with positive signs.
  if (Q.determinant() < 0.0) Q.col(0) = -Q.col(0);

  MilnorNormalForm out;
  for (int i = 0; i < 3; ++i) out.milnor_eigenvalues[static_cast<std::size_t>(i)] = lambda(i);
  out.alpha1 = std::sqrt(lambda(2) / lambda(0));
  out.alpha2 = std::sqrt(lambda(2) / lambda(1));
  out.scale = 4.0 / (lambda(0) * lambda(1));

  // f_i = a_i * (F0 Q) column i with a_i = 2 / sqrt(lambda_j lambda_k).
  const double a[3] = {2.0 / std::sqrt(lambda(1) * lambda(2)),
                       2.0 / std::sqrt(lambda(0) * lambda(2)),
                       2.0 / std::sqrt(lambda(0) * lambda(1))};
  Matrix<double> F(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += F0(i, k) * Q(k, j);
      F(i, j) = v * a[j];
    }
  out.frame_map = F;

  // Residual of the standard brackets [f_a, f_b] = 2 f_c (cyclic).
  double bracket_residual = 0.0;
  for (int c = 0; c < 3; ++c) {
    const int ia = cyclic_a[c];
    const int ib = cyclic_b[c];
    std::vector<double> fa(3), fb(3);
    for (int r = 0; r < 3; ++r) {
      fa[static_cast<std::size_t>(r)] = F(r, ia);
      fb[static_cast<std::size_t>(r)] = F(r, ib);
    }
    const std::vector<double> br = L.bracket(fa, fb);
    for (int r = 0; r < 3; ++r) {
      bracket_residual = std::max(bracket_residual, std::fabs(br[static_cast<std::size_t>(r)] - 2.0 * F(r, c)));
    }
  }
  out.bracket_residual = bracket_residual;

  // Residual of F^T G F = scale * diag(1/alpha1^2, 1/alpha2^2, 1).
  const Matrix<double> pulled = F.transpose() * g.gram() * F;
  const double expected[3] = {out.scale / (out.alpha1 * out.alpha1),
                              out.scale / (out.alpha2 * out.alpha2), out.scale};
  double gram_residual = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = (i == j) ? expected[i] : 0.0;
      gram_residual = std::max(gram_residual, std::fabs(pulled(i, j) - want));
    }
  out.gram_residual = gram_residual;
  return out;
}

}  // namespace liegeo
