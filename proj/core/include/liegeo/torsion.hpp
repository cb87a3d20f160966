// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Metric connections with totally skew torsion. Given an invariant 3-form H,
// the torsion tensor T is defined by g(T(X,Y), Z) = H(X,Y,Z) and the modified
// connection is nabla^T = nabla^g + (1/2) T. It is metric, has torsion
// exactly T, and its Ricci form decomposes as
//
//   Ric^T(X,Y) = Ric^g(X,Y) - (1/4) sum_{ab} (G^{-1})_{ab} g(T(e_a,X), T(e_b,Y))
//                            - (1/2) (delta H)(X,Y)
//
// where delta is the codifferential of the metric. The middle term is a Gram
// form, hence positive semidefinite and zero only for T = 0: the Levi-Civita
// connection maximises Ricci among these connections. Under the metric
// scaling g -> eps g (H fixed) the torsion scales as T -> T/eps and the
// correction term picks up 1/eps^2.

#pragma once

#include "liegeo/connection.hpp"
#include "liegeo/forms.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/matrix.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace liegeo {

/// Torsion tensor of an invariant 3-form: g(T(X,Y), Z) = H(X,Y,Z),
/// i.e. T^k_{ij} = sum_r (G^{-1})_{kr} H_{ijr}.
template <typename S>
FrameBilinearMap<S> torsion_from_three_form(const LieAlgebraFrame& L,
                                            const InnerProductOnAlgebra<S>& g,
                                            const InvariantForm<S>& H) {
  const int n = L.dim();
  if (g.dim() != n || H.dim() != n) {
    throw std::invalid_argument("liegeo: frame, metric and form dimensions must agree");
  }
  if (H.degree() != 3) throw std::invalid_argument("liegeo: torsion form must have degree 3");
  FrameBilinearMap<S> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k) {
        S v(0);
        for (int r = 0; r < n; ++r) {
          const S h = H(std::vector<int>{i, j, r});
          if (h == S(0)) continue;
          v += g.gram_inverse()(k, r) * h;
        }
        t.component(i, j, k) = v;
      }
    }
  return t;
}

/// The metric connection nabla^g + (1/2) T whose totally skew torsion is the
/// given 3-form.
template <typename S>
ConnectionCoefficients<S> connection_with_skew_torsion(const LieAlgebraFrame& L,
                                                       const InnerProductOnAlgebra<S>& g,
                                                       const InvariantForm<S>& H) {
  ConnectionCoefficients<S> conn = levi_civita(L, g);
  FrameBilinearMap<S> t = torsion_from_three_form(L, g, H);
  t *= scalar_traits<S>::from_fraction(1, 2);
  conn += t;
  return conn;
}

/// The Gram-type correction form
/// Q(X,Y) = (1/4) sum_{ab} (G^{-1})_{ab} g(T(e_a,X), T(e_b,Y)).
/// Symmetric and positive semidefinite; zero exactly when T = 0.
template <typename S>
Matrix<S> torsion_correction_form(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                                  const InvariantForm<S>& H) {
  const int n = L.dim();
  const FrameBilinearMap<S> t = torsion_from_three_form(L, g, H);
  Matrix<S> q(n, n);
  const S quarter = scalar_traits<S>::from_fraction(1, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S v(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const S& w = g.gram_inverse()(a, b);
          if (w == S(0)) continue;
          // g(T(e_a, e_i), T(e_b, e_j))
          S inner(0);
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
              inner += t.component(a, i, r) * g.gram()(r, s) * t.component(b, j, s);
            }
          v += w * inner;
        }
      q(i, j) = quarter * v;
    }
  return q;
}

/// The codifferential of H as an antisymmetric matrix, (delta H)(e_i, e_j).
template <typename S>
Matrix<S> codifferential_as_matrix(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                                   const InvariantForm<S>& H) {
  const int n = L.dim();
  const InvariantForm<S> dH = codifferential(L, g, H);
  Matrix<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dH(std::vector<int>{i, j});
  return m;
}

/// Ricci form of the torsion connection, straight from its curvature.
template <typename S>
Matrix<S> ricci_with_torsion_direct(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                                    const InvariantForm<S>& H) {
  return ricci_tensor(L, connection_with_skew_torsion(L, g, H));
}

/// Ricci form of the torsion connection via the decomposition
/// Ric^g - Q - (1/2) delta H. Independent route from the direct curvature
/// computation; the two must agree identically.
template <typename S>
Matrix<S> ricci_with_torsion_decomposed(const LieAlgebraFrame& L,
                                        const InnerProductOnAlgebra<S>& g,
                                        const InvariantForm<S>& H) {
  Matrix<S> out = ricci_tensor(L, levi_civita(L, g));
  out -= torsion_correction_form(L, g, H);
  Matrix<S> skew = codifferential_as_matrix(L, g, H);
  skew *= scalar_traits<S>::from_fraction(1, 2);
  out -= skew;
  return out;
}

/// The metric eps * g as a new inner product (H is unchanged by convention).
template <typename S>
InnerProductOnAlgebra<S> scaled_metric(const InnerProductOnAlgebra<S>& g, const S& eps) {
  if (!(S(0) < eps)) throw std::invalid_argument("liegeo: metric scale must be positive");
  Matrix<S> gram = g.gram();
  gram *= eps;
  return InnerProductOnAlgebra<S>(gram);
}

/// Ricci of the torsion connection of (eps g, H), from its curvature.
template <typename S>
Matrix<S> scaled_ricci_direct(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                              const InvariantForm<S>& H, const S& eps) {
  const InnerProductOnAlgebra<S> ge = scaled_metric(g, eps);
  return ricci_tensor(L, connection_with_skew_torsion(L, ge, H));
}

/// Ricci of the torsion connection of (eps g, H) via the closed scaling law:
/// the Levi-Civita part is scale invariant, T scales as 1/eps, so
///
///   Ric^{eps g, H} = Ric^g - (1/eps^2) Q - (1/2) delta_{eps g} H.
///
/// Must agree with scaled_ricci_direct for every eps > 0.
template <typename S>
Matrix<S> scaled_ricci_scaling_law(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                                   const InvariantForm<S>& H, const S& eps) {
  const InnerProductOnAlgebra<S> ge = scaled_metric(g, eps);
  Matrix<S> out = ricci_tensor(L, levi_civita(L, g));
  Matrix<S> q = torsion_correction_form(L, g, H);
  q *= S(1) / (eps * eps);
  out -= q;
  Matrix<S> skew = codifferential_as_matrix(L, ge, H);
  skew *= scalar_traits<S>::from_fraction(1, 2);
  out -= skew;
  return out;
}

}  // namespace liegeo
