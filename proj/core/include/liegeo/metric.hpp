// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Invariant metrics. A left-invariant metric is an inner product on the
// algebra, stored as its Gram matrix G in the chosen frame. This header
// provides the induced inner products on forms, the Hodge star, the
// codifferential and the form Laplacian, all valid over exact rational or
// double scalars.
//
// Conventions (Riemannian signature, frame dimension n, form degree p):
//   <e^I, e^J>      = det[ (G^{-1})_{i_a j_b} ]
//   vol             = sqrt(det G) e^{1...n}
//   *(e^J)          = sqrt(det G) sum_K <e^J, e^K> sgn(K, K^c) e^{K^c}
//   delta           = (-1)^{n(p+1)+1} * d *        (adjoint of d on unimodular frames)
//   Delta           = d delta + delta d

#pragma once

#include "liegeo/detail/multi_index.hpp"
#include "liegeo/forms.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/matrix.hpp"
#include "liegeo/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liegeo {

template <typename S>
class InnerProductOnAlgebra {
 public:
  /// Construct from a Gram matrix; validates symmetry and positive
  /// definiteness (leading principal minors, exact for rational scalars).
  explicit InnerProductOnAlgebra(Matrix<S> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0) {
      throw std::invalid_argument("liegeo: Gram matrix must be square and non-empty");
    }
    const int n = gram_.rows();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!(gram_(i, j) == gram_(j, i))) {
          throw std::invalid_argument("liegeo: Gram matrix must be symmetric");
        }
      }
    }
    // Sylvester criterion: all leading principal minors strictly positive.
    for (int k = 1; k <= n; ++k) {
      Matrix<S> lead(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) lead(i, j) = gram_(i, j);
      if (!(S(0) < lead.determinant())) {
        throw std::invalid_argument("liegeo: Gram matrix must be positive definite");
      }
    }
    inverse_ = gram_.inverse();
    det_ = gram_.determinant();
  }

  static InnerProductOnAlgebra identity(int dim) {
    return InnerProductOnAlgebra(Matrix<S>::identity(dim));
  }
  static InnerProductOnAlgebra diagonal(const std::vector<S>& d) {
    return InnerProductOnAlgebra(Matrix<S>::diagonal(d));
  }

  int dim() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }
  const Matrix<S>& gram_inverse() const { return inverse_; }
  const S& det() const { return det_; }

  /// sqrt(det G); for exact scalars this throws exact_arithmetic_error when
  /// the determinant is not a perfect rational square.
  S sqrt_det() const { return scalar_traits<S>::sqrt(det_); }

  /// g(x, y) for frame-component vectors.
  S pair_vectors(const std::vector<S>& x, const std::vector<S>& y) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
      throw std::invalid_argument("liegeo: vector length must equal the frame dimension");
    }
    S out(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out += x[static_cast<std::size_t>(i)] * gram_(i, j) * y[static_cast<std::size_t>(j)];
    return out;
  }

  /// Inner product of two basis covectors raised by G^{-1}: <e^i, e^j>.
  const S& pair_covectors(int i, int j) const { return inverse_(i, j); }

  /// Induced inner product on p-forms.
  S pair_forms(const InvariantForm<S>& a, const InvariantForm<S>& b) const {
    if (a.dim() != dim() || b.dim() != dim() || a.degree() != b.degree()) {
      throw std::invalid_argument("liegeo: form pairing requires matching dimension and degree");
    }
    const int n = dim();
    const int p = a.degree();
    const auto combos = detail::combinations(n, p);
    S out(0);
    for (std::size_t ra = 0; ra < combos.size(); ++ra) {
      if (a.component(ra) == S(0)) continue;
      for (std::size_t rb = 0; rb < combos.size(); ++rb) {
        if (b.component(rb) == S(0)) continue;
        out += a.component(ra) * b.component(rb) * covector_minor(combos[ra], combos[rb]);
      }
    }
    return out;
  }

  /// Riemannian volume form sqrt(det G) e^{1...n}.
  InvariantForm<S> volume_form() const {
    const int n = dim();
    InvariantForm<S> vol(n, n);
    vol.component(0) = sqrt_det();
    return vol;
  }

  /// Columns are an orthonormal, positively oriented frame expressed in the
  /// original frame: F = L^{-T} for the Cholesky factor G = L L^T, so that
  /// F^T G F = Id. For exact scalars this exists only when every Cholesky
  /// square root is an exact rational (exact_arithmetic_error otherwise).
  Matrix<S> orthonormal_frame() const {
    return gram_.cholesky().transpose().inverse();
  }

  /// det[(G^{-1})_{I x J}] for equal-size sorted multi-indices; this is the
  /// induced inner product <e^I, e^J>.
  S covector_minor(const std::vector<int>& I, const std::vector<int>& J) const {
    const int p = static_cast<int>(I.size());
    Matrix<S> sub(p, p);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c)
        sub(r, c) = inverse_(I[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(c)]);
    return sub.determinant();
  }

 private:
  Matrix<S> gram_;
  Matrix<S> inverse_;
  S det_{0};
};

/// The two-parameter family of left-invariant metrics on the standard rank-3
/// frame with brackets [e1,e2] = 2 e3 (cyclic): the frame
/// {alpha1 e1, alpha2 e2, e3} is declared orthonormal, i.e.
/// G = diag(1/alpha1^2, 1/alpha2^2, 1). alpha1 = alpha2 = 1 is the round
/// metric of the unit 3-sphere; alpha2 = 1 gives the standard one-parameter
/// squashed family.
template <typename S>
InnerProductOnAlgebra<S> squashed_metric(const S& alpha1, const S& alpha2) {
  if (!(S(0) < alpha1) || !(S(0) < alpha2)) {
    throw std::invalid_argument("liegeo: metric parameters must be positive");
  }
  std::vector<S> d = {S(1) / (alpha1 * alpha1), S(1) / (alpha2 * alpha2), S(1)};
  return InnerProductOnAlgebra<S>::diagonal(d);
}

/// The Hodge star without its sqrt(det G) volume factor:
/// star(e^J) = sqrt(det G) * hodge_star_raised(e^J). Split out because the
/// raised part is rational whenever the metric is, while sqrt(det G) need not
/// be; compositions like the codifferential combine two raised stars with the
/// rational factor det(G) and therefore never require the square root.
template <typename S>
InvariantForm<S> hodge_star_raised(const InnerProductOnAlgebra<S>& g, const InvariantForm<S>& w) {
  const int n = g.dim();
  if (w.dim() != n) throw std::invalid_argument("liegeo: form does not match metric dimension");
  const int p = w.degree();
  InvariantForm<S> out(n, n - p);
  const auto combos = detail::combinations(n, p);
  for (std::size_t rk = 0; rk < combos.size(); ++rk) {
    const std::vector<int>& K = combos[rk];
    // Raise the coefficient: w^K = sum_J w_J <e^J, e^K>.
    S raised(0);
    for (std::size_t rj = 0; rj < combos.size(); ++rj) {
      if (w.component(rj) == S(0)) continue;
      raised += w.component(rj) * g.covector_minor(combos[rj], K);
    }
    if (raised == S(0)) continue;
    const std::vector<int> Kc = detail::combination_complement(K, n);
    if (detail::merge_sign(K, Kc) < 0) raised = -raised;
    out.coefficient(Kc) += raised;
  }
  return out;
}

/// Hodge star of an invariant p-form. For exact scalars this requires
/// sqrt(det G) to be rational (exact_arithmetic_error otherwise); the
/// codifferential and Laplacian below avoid that requirement.
template <typename S>
InvariantForm<S> hodge_star(const InnerProductOnAlgebra<S>& g, const InvariantForm<S>& w) {
  InvariantForm<S> out = hodge_star_raised(g, w);
  out *= g.sqrt_det();
  return out;
}

/// Codifferential delta = (-1)^{n(p+1)+1} * d * on p-forms (p >= 1); zero on
/// functions. This is the formal adjoint of the differential with respect to
/// the induced inner products whenever the frame is unimodular. Computed as
/// +- det(G) (raised star) d (raised star), which is rational for rational
/// metrics even when sqrt(det G) is not.
template <typename S>
InvariantForm<S> codifferential(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                                const InvariantForm<S>& w) {
  const int n = g.dim();
  if (L.dim() != n || w.dim() != n) {
    throw std::invalid_argument("liegeo: frame, metric and form dimensions must agree");
  }
  const int p = w.degree();
  if (p == 0) return InvariantForm<S>(n, 0);
  InvariantForm<S> out =
      hodge_star_raised(g, ce_differential(L, hodge_star_raised(g, w)));
  out *= g.det();
  const int exponent = n * (p + 1) + 1;
  if (exponent % 2 != 0) out *= S(-1);
  return out;
}

/// Hodge-de Rham Laplacian Delta = d delta + delta d on invariant forms.
template <typename S>
InvariantForm<S> laplacian(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                           const InvariantForm<S>& w) {
  const int n = g.dim();
  const int p = w.degree();
  InvariantForm<S> out(n, p);
  if (p > 0) out += ce_differential(L, codifferential(L, g, w));
  if (p < n) out += codifferential(L, g, ce_differential(L, w));
  return out;
}

}  // namespace liegeo
