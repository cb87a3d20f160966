// Hand-derived closed forms for the diagonal metric family on the standard
// rank-3 frame ([e1,e2] = 2 e3 cyclic, Gram diag(1/a1^2, 1/a2^2, 1)).
//
// These expressions are the independent pencil-and-paper side of the dual
// route checks: the suites compare the geometric pipelines (Koszul ->
// curvature -> Ricci, and connection forms -> Chern-Simons trace form ->
// integral) against the formulas below, so a regression on either side shows
// up as disagreement. Nothing in the library consults this header.

#pragma once

#include "liegeo/scalar.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace liegeo::testing::oracle {

/// Principal Ricci values along (e1, e2, e3) for the family metric: with
/// u = a1 a2, v = a1/a2, w = a2/a1 and
///   A = u + v - w,  B = u - v + w,  C = -u + v + w,
/// the Ricci operator is diagonal with eigenvalues (2BC, 2CA, 2AB).
template <typename S>
std::array<S, 3> principal_ricci(const S& a1, const S& a2) {
  const S u = a1 * a2;
  const S v = a1 / a2;
  const S w = a2 / a1;
  const S A = u + v - w;
  const S B = u - v + w;
  const S C = -u + v + w;
  const S two(2);
  return {two * B * C, two * C * A, two * A * B};
}

/// Closed form of the left-framing canonical 3-form integral for the family
/// metric with left-invariant chirality:
///   -(a1^6 a2^6 - a1^6 a2^4 - a1^4 a2^6 - a1^6 a2^2 - a1^2 a2^6
///     - a1^4 a2^2 - a1^2 a2^4 + 4 a1^4 a2^4 + a1^6 + a2^6) / (a1^4 a2^4).
/// Values: (1,1) -> -1, (2,1) -> -25/16, (2,2) -> -10.
template <typename S>
S left_framing_integral(const S& a1, const S& a2) {
  const S p2 = a1 * a1;
  const S q2 = a2 * a2;
  const S p4 = p2 * p2;
  const S q4 = q2 * q2;
  const S p6 = p4 * p2;
  const S q6 = q4 * q2;
  const S numerator = p6 * q6 - p6 * q4 - p4 * q6 - p6 * q2 - p2 * q6 - p4 * q2 - p2 * q4 +
                      S(4) * p4 * q4 + p6 + q6;
  return -numerator / (p4 * q4);
}

/// The one-parameter profile x(a1) = (2 a1^2 - 1) / a1^4 controlling the
/// anchored integrals on the a2 = 1 line:
///   left chirality:  H_L = x - 2,  H_dD4 = x - 1,  H_R = x;
///   right chirality: H_L = -x,     H_dD4 = 1 - x,  H_R = 2 - x.
template <typename S>
S berger_profile(const S& a1) {
  const S p2 = a1 * a1;
  return (S(2) * p2 - S(1)) / (p2 * p2);
}

/// The three curves bounding the positive-Ricci region, as graphs a2(a1):
/// index 0 for all a1 > 0, index 1 for a1 < 1, index 2 for a1 > 1. On each
/// curve exactly one principal Ricci value vanishes.
inline bool boundary_in_domain(int curve, double a1) {
  switch (curve) {
    case 0: return a1 > 0.0;
    case 1: return a1 > 0.0 && a1 < 1.0;
    case 2: return a1 > 1.0;
    default: throw std::out_of_range("oracle: boundary curve index out of range");
  }
}

inline double boundary_alpha2(int curve, double a1) {
  if (!boundary_in_domain(curve, a1)) {
    throw std::domain_error("oracle: alpha1 outside the curve domain");
  }
  switch (curve) {
    case 0: return a1 / std::sqrt(1.0 + a1 * a1);
    case 1: return a1 / std::sqrt(1.0 - a1 * a1);
    default: return a1 / std::sqrt(a1 * a1 - 1.0);
  }
}

}  // namespace liegeo::testing::oracle
