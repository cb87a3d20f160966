#include "liegeo/spectrum.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace liegeo {

namespace {

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

std::vector<double> pencil_eigenvalues(const Matrix<double>& gram, const Matrix<double>& form) {
  if (gram.rows() != gram.cols() || form.rows() != form.cols() || gram.rows() != form.rows()) {
    throw std::invalid_argument("liegeo: pencil requires square matrices of equal size");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      to_eigen(form), to_eigen(gram), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("liegeo: generalized eigenvalue solve failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> symmetric_eigenvalues(const Matrix<double>& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("liegeo: eigenvalues require a square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("liegeo: eigenvalue solve failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace liegeo
