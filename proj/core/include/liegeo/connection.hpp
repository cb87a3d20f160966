// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Invariant affine connections, curvature and Ricci. For invariant vector
// fields, a connection is the bilinear map (X, Y) -> nabla_X Y on the
// algebra, and the Koszul formula degenerates to a purely algebraic solve:
//
//   2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j], e_k) - g([e_j,e_k], e_i) + g([e_k,e_i], e_j)
//
// Curvature uses the convention
//   R(X, Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_{[X,Y]}
// and Ricci the trace convention Ric(X, Y) = tr(Z -> R(Z, X) Y), so that the
// unit round 3-sphere has Ric = 2 g.

#pragma once

#include "liegeo/lie_algebra.hpp"
#include "liegeo/matrix.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace liegeo {

/// Vector-valued bilinear map on the algebra, stored against the frame:
/// component(i, j, k) is the e_k-coefficient of B(e_i, e_j). For an invariant
/// connection this is the Christoffel symbol Gamma^k_{ij} of nabla_{e_i} e_j.
template <typename S>
class FrameBilinearMap {
 public:
  explicit FrameBilinearMap(int dim)
      : dim_(dim), comp_(static_cast<std::size_t>(dim) * dim * dim, S(0)) {
    if (dim <= 0) throw std::invalid_argument("liegeo: bilinear map dimension must be positive");
  }

  int dim() const { return dim_; }

  const S& component(int i, int j, int k) const { return comp_[index(i, j, k)]; }
  S& component(int i, int j, int k) { return comp_[index(i, j, k)]; }

  /// B(x, y) for frame-component vectors.
  std::vector<S> apply(const std::vector<S>& x, const std::vector<S>& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
      throw std::invalid_argument("liegeo: vector length must equal the frame dimension");
    }
    std::vector<S> out(static_cast<std::size_t>(dim_), S(0));
    for (int i = 0; i < dim_; ++i) {
      if (x[static_cast<std::size_t>(i)] == S(0)) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[static_cast<std::size_t>(j)] == S(0)) continue;
        const S f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        for (int k = 0; k < dim_; ++k) out[static_cast<std::size_t>(k)] += f * component(i, j, k);
      }
    }
    return out;
  }

  /// The operator B(e_i, .) as a matrix acting on frame components:
  /// slot_matrix(i)(k, j) = component(i, j, k).
  Matrix<S> slot_matrix(int i) const {
    Matrix<S> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m(k, j) = component(i, j, k);
    return m;
  }

  FrameBilinearMap& operator+=(const FrameBilinearMap& rhs) {
    require_same_dim(rhs);
    for (std::size_t t = 0; t < comp_.size(); ++t) comp_[t] += rhs.comp_[t];
    return *this;
  }
  FrameBilinearMap& operator-=(const FrameBilinearMap& rhs) {
    require_same_dim(rhs);
    for (std::size_t t = 0; t < comp_.size(); ++t) comp_[t] -= rhs.comp_[t];
    return *this;
  }
  FrameBilinearMap& operator*=(const S& s) {
    for (auto& v : comp_) v *= s;
    return *this;
  }
  friend FrameBilinearMap operator+(FrameBilinearMap a, const FrameBilinearMap& b) { return a += b; }
  friend FrameBilinearMap operator-(FrameBilinearMap a, const FrameBilinearMap& b) { return a -= b; }
  friend FrameBilinearMap operator*(const S& s, FrameBilinearMap a) { return a *= s; }

  double max_abs_component() const {
    double m = 0.0;
    for (const auto& v : comp_) {
      const double a = std::fabs(scalar_traits<S>::to_double(v));
      if (a > m) m = a;
    }
    return m;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_) {
      throw std::out_of_range("liegeo: bilinear map index out of range");
    }
    return (static_cast<std::size_t>(i) * dim_ + static_cast<std::size_t>(j)) * dim_ +
           static_cast<std::size_t>(k);
  }
  void require_same_dim(const FrameBilinearMap& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("liegeo: bilinear map dimension mismatch");
  }

  int dim_;
  std::vector<S> comp_;
};

/// Invariant connections are frame bilinear maps; component(i, j, k) is
/// Gamma^k_{ij}.
template <typename S>
using ConnectionCoefficients = FrameBilinearMap<S>;

/// Levi-Civita connection of an invariant metric, from the Koszul formula.
template <typename S>
ConnectionCoefficients<S> levi_civita(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g) {
  const int n = L.dim();
  if (g.dim() != n) throw std::invalid_argument("liegeo: frame and metric dimensions must agree");
  // B(i, j, k) = g([e_i, e_j], e_k).
  auto bracket_pairing = [&](int i, int j, int k) {
    S out(0);
    for (int m = 0; m < n; ++m) {
      const double c = L.c(m, i, j);
      if (c == 0.0) continue;
      out += scalar_traits<S>::from_double(c) * g.gram()(m, k);
    }
    return out;
  };
  const S half = scalar_traits<S>::from_fraction(1, 2);
  ConnectionCoefficients<S> conn(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Lowered coefficients K_k = g(nabla_{e_i} e_j, e_k), then raise by G^{-1}.
      std::vector<S> lowered(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        lowered[static_cast<std::size_t>(k)] =
            half * (bracket_pairing(i, j, k) - bracket_pairing(j, k, i) + bracket_pairing(k, i, j));
      }
      const std::vector<S> raised = g.gram_inverse().apply(lowered);
      for (int k = 0; k < n; ++k) conn.component(i, j, k) = raised[static_cast<std::size_t>(k)];
    }
  }
  return conn;
}

/// Torsion T(X, Y) = nabla_X Y - nabla_Y X - [X, Y] of an invariant
/// connection (identically zero for Levi-Civita).
template <typename S>
FrameBilinearMap<S> torsion_of_connection(const LieAlgebraFrame& L,
                                          const ConnectionCoefficients<S>& conn) {
  const int n = L.dim();
  if (conn.dim() != n) throw std::invalid_argument("liegeo: frame and connection dimensions must agree");
  FrameBilinearMap<S> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t.component(i, j, k) = conn.component(i, j, k) - conn.component(j, i, k) -
                               scalar_traits<S>::from_double(L.c(k, i, j));
      }
  return t;
}

/// Largest |g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k)| over all frame
/// triples; an invariant connection is metric precisely when this vanishes.
template <typename S>
double metric_compatibility_residual(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                                     const ConnectionCoefficients<S>& conn) {
  const int n = L.dim();
  if (g.dim() != n || conn.dim() != n) {
    throw std::invalid_argument("liegeo: frame, metric and connection dimensions must agree");
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        S r(0);
        for (int m = 0; m < n; ++m) {
          r += conn.component(i, j, m) * g.gram()(m, k);
          r += conn.component(i, k, m) * g.gram()(m, j);
        }
        const double a = std::fabs(scalar_traits<S>::to_double(r));
        if (a > worst) worst = a;
      }
  return worst;
}

/// The curvature operator R(e_i, e_j) acting on frame components,
/// R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_{[X,Y]}.
template <typename S>
Matrix<S> curvature_operator(const LieAlgebraFrame& L, const ConnectionCoefficients<S>& conn,
                             int i, int j) {
  const int n = L.dim();
  if (conn.dim() != n) throw std::invalid_argument("liegeo: frame and connection dimensions must agree");
  const Matrix<S> Ai = conn.slot_matrix(i);
  const Matrix<S> Aj = conn.slot_matrix(j);
  Matrix<S> R = Ai * Aj - Aj * Ai;
  for (int m = 0; m < n; ++m) {
    const double c = L.c(m, i, j);
    if (c == 0.0) continue;
    R -= scalar_traits<S>::from_double(c) * conn.slot_matrix(m);
  }
  return R;
}

/// Ricci bilinear form Ric(e_i, e_j) = tr(Z -> R(Z, e_i) e_j). Symmetric for
/// Levi-Civita; for metric connections with skew torsion the skew part equals
/// -1/2 (codifferential of the torsion 3-form).
template <typename S>
Matrix<S> ricci_tensor(const LieAlgebraFrame& L, const ConnectionCoefficients<S>& conn) {
  const int n = L.dim();
  Matrix<S> ric(n, n);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < n; ++i) {
      const Matrix<S> R = curvature_operator(L, conn, a, i);
      for (int j = 0; j < n; ++j) ric(i, j) += R(a, j);
    }
  }
  return ric;
}

/// Scalar curvature tr_g Ric = sum_{ij} (G^{-1})_{ij} Ric_{ij}.
template <typename S>
S scalar_curvature(const InnerProductOnAlgebra<S>& g, const Matrix<S>& ricci) {
  const int n = g.dim();
  if (ricci.rows() != n || ricci.cols() != n) {
    throw std::invalid_argument("liegeo: Ricci tensor and metric dimensions must agree");
  }
  S out(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out += g.gram_inverse()(i, j) * ricci(i, j);
  return out;
}

/// Sign classification of a symmetric bilinear form relative to a positive
/// definite metric (equivalently, of the eigenvalues of G^{-1} B).
enum class Region {
  interior,  ///< all eigenvalues strictly positive
  boundary,  ///< positive semidefinite with at least one zero eigenvalue
  outside,   ///< at least one strictly negative eigenvalue
};

inline const char* region_name(Region r) {
  switch (r) {
    case Region::interior: return "interior";
    case Region::boundary: return "boundary";
    case Region::outside: return "outside";
  }
  return "unknown";
}

/// Exact (for rational scalars) classification via principal minors:
/// positive definite iff all leading principal minors are positive;
/// positive semidefinite iff all principal minors are non-negative.
template <typename S>
Region classify_definiteness(const Matrix<S>& b) {
  const int n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("liegeo: definiteness requires a square matrix");
  bool positive_definite = true;
  for (int k = 1; k <= n; ++k) {
    Matrix<S> lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = b(i, j);
    if (!(S(0) < lead.determinant())) {
      positive_definite = false;
      break;
    }
  }
  if (positive_definite) return Region::interior;
  // All principal minors (every index subset) non-negative <=> psd.
  const int subsets = 1 << n;
  for (int mask = 1; mask < subsets; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    Matrix<S> sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = b(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    if (sub.determinant() < S(0)) return Region::outside;
  }
  return Region::boundary;
}

/// Region of an invariant metric under the sign of its Ricci form: interior
/// means positive Ricci curvature, boundary means semidefinite with a kernel,
/// outside means some principal Ricci value is negative. Exact over rational
/// scalars.
template <typename S>
Region ricci_region(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g) {
  const auto conn = levi_civita(L, g);
  return classify_definiteness(ricci_tensor(L, conn));
}

/// Ricci positivity of the diagonal family on the standard rank-3 frame.
template <typename S>
Region ricci_positivity(const S& alpha1, const S& alpha2) {
  return ricci_region(LieAlgebraFrame::su2(), squashed_metric<S>(alpha1, alpha2));
}

/// Principal Ricci values in the frame directions when the Ricci operator
/// G^{-1} Ric is diagonal in the given frame (true for the diagonal metric
/// family on the standard rank-3 frame); throws otherwise. Entry k is the
/// eigenvalue along e_k. Exact over rational scalars.
template <typename S>
std::vector<S> principal_ricci_values_diagonal(const InnerProductOnAlgebra<S>& g,
                                               const Matrix<S>& ricci) {
  const int n = g.dim();
  const Matrix<S> op = g.gram_inverse() * ricci;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && !(op(i, j) == S(0))) {
        throw std::invalid_argument(
            "liegeo: Ricci operator is not diagonal in this frame; use the numeric spectrum");
      }
    }
  std::vector<S> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = op(i, i);
  return out;
}

}  // namespace liegeo
