// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Chern-Simons 3-forms of invariant metric connections on the standard
// rank-3 frame ([e1,e2] = 2 e3 cyclic; the frame whose identity-Gram metric
// is the unit round 3-sphere, with integral of e1^e2^e3 equal to 2 pi^2).
//
// The normalized form is
//
//   CS(Theta) = (-1/16 pi^2) <Theta ^ dTheta + (2/3) Theta ^ Theta ^ Theta>
//
// where Theta is the connection 1-form in an orthonormal frame (so(3)-valued)
// and <...> is an Ad-invariant pairing given by a trace. Two independent
// trace routes are provided and must agree:
//
//   * the frame route: ordinary 3x3 matrix trace of the connection matrix in
//     the defining representation (conjugation-invariant, so it can be
//     evaluated in the structure frame without orthonormalizing);
//   * the spin route: the two-dimensional lift rho(L_a) = -i sigma_a / 2,
//     whose traces are 1/kappa of the frame traces with a single constant
//     kappa (= 4) for both the quadratic and the cubic pairing. SpinPairing
//     derives kappa from the quadratic ratio, verifies the cubic ratio
//     matches, and is calibrated so the round-metric pipeline returns exactly
//     -1; it fails loudly otherwise instead of rescaling.
//
// Because every object is invariant, integrals over the 3-sphere reduce to
// the top-form coefficient: int CS = (-1/16 pi^2) * coeff * 2 pi^2 =
// -coeff / 8, which is rational whenever the inputs are.

#pragma once

#include "liegeo/connection.hpp"
#include "liegeo/forms.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/matrix.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/scalar.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace liegeo {

/// Integral of e1^e2^e3 over the 3-sphere in the standard frame
/// normalization: the volume 2 pi^2 of the unit round 3-sphere.
inline constexpr double standard_frame_volume = 2.0 * std::numbers::pi * std::numbers::pi;

/// Minimal complex number over an arbitrary real scalar (Gaussian rationals
/// when S is exact). Only ring operations are needed.
template <typename S>
struct Complex {
  S re{0};
  S im{0};

  Complex() = default;
  Complex(int n) : re(n), im(0) {}  // NOLINT(google-explicit-constructor): scalar ring literal
  Complex(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    const S r = re * o.re - im * o.im;
    const S i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator-(Complex a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// The standard so(3) generators in the defining representation,
/// (L_a)_{ij} = -epsilon_{aij}, satisfying [L_a, L_b] = epsilon_{abc} L_c.
template <typename S>
Matrix<S> so3_generator(int a) {
  if (a < 0 || a > 2) throw std::out_of_range("liegeo: so(3) generator index out of range");
  Matrix<S> L(3, 3);
  const int b = (a + 1) % 3;
  const int c = (a + 2) % 3;
  L(b, c) = S(-1);  // -epsilon_{a b c} = -1
  L(c, b) = S(1);
  return L;
}

/// Ad-invariant pairing constants used by the Chern-Simons evaluation:
/// p2(a,b) pairs theta^a ^ dtheta^b terms, p3(a,b,c) the cubic terms.
template <typename S>
struct PairingConstants {
  std::array<S, 9> p2{};
  std::array<S, 27> p3{};

  const S& pair2(int a, int b) const { return p2[static_cast<std::size_t>(3 * a + b)]; }
  S& pair2(int a, int b) { return p2[static_cast<std::size_t>(3 * a + b)]; }
  const S& pair3(int a, int b, int c) const {
    return p3[static_cast<std::size_t>(9 * a + 3 * b + c)];
  }
  S& pair3(int a, int b, int c) { return p3[static_cast<std::size_t>(9 * a + 3 * b + c)]; }
};

/// Pairing constants of the frame (defining 3x3) representation with the
/// ordinary matrix trace: p2(a,b) = Tr(L_a L_b) = -2 delta_ab,
/// p3(a,b,c) = Tr(L_a L_b L_c) = -epsilon_abc. Computed, not hard-coded.
template <typename S>
PairingConstants<S> frame_pairing_constants() {
  std::array<Matrix<S>, 3> L = {so3_generator<S>(0), so3_generator<S>(1), so3_generator<S>(2)};
  PairingConstants<S> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Matrix<S> P = L[static_cast<std::size_t>(a)] * L[static_cast<std::size_t>(b)];
      S tr(0);
      for (int i = 0; i < 3; ++i) tr += P(i, i);
      out.pair2(a, b) = tr;
      for (int c = 0; c < 3; ++c) {
        const Matrix<S> Q = P * L[static_cast<std::size_t>(c)];
        S tr3(0);
        for (int i = 0; i < 3; ++i) tr3 += Q(i, i);
        out.pair3(a, b, c) = tr3;
      }
    }
  return out;
}

/// The two-dimensional spin lift rho_a = -i sigma_a / 2 of the so(3) basis,
/// with the trace normalization constant kappa relating its pairings to the
/// frame-representation pairings. Construction validates:
///   * the commutation relations [rho_a, rho_b] = epsilon_abc rho_c,
///   * that the quadratic and cubic trace ratios agree on a single kappa,
///   * kappa-normalized pairings are real.
/// standard() additionally calibrates the full pipeline: the round metric
/// with its Levi-Civita connection must integrate to exactly -1.
template <typename S>
class SpinPairing {
 public:
  SpinPairing() {
    const S half = scalar_traits<S>::from_fraction(1, 2);
    // rho_1 = [[0, -i/2], [-i/2, 0]], rho_2 = [[0, -1/2], [1/2, 0]],
    // rho_3 = [[-i/2, 0], [0, i/2]]  (rho_a = -i sigma_a / 2).
    for (auto& m : rho_) m = Matrix<Complex<S>>(2, 2);
    rho_[0](0, 1) = Complex<S>(S(0), -half);
    rho_[0](1, 0) = Complex<S>(S(0), -half);
    rho_[1](0, 1) = Complex<S>(-half, S(0));
    rho_[1](1, 0) = Complex<S>(half, S(0));
    rho_[2](0, 0) = Complex<S>(S(0), -half);
    rho_[2](1, 1) = Complex<S>(S(0), half);

    // Commutation relations [rho_a, rho_b] = epsilon_abc rho_c.
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Matrix<Complex<S>> comm = rho(a) * rho(b) - rho(b) * rho(a);
        for (int c = 0; c < 3; ++c) {
          const S eps = epsilon(a, b, c);
          if (eps == S(0)) continue;
          Matrix<Complex<S>> expect = rho(c);
          expect *= Complex<S>(eps, S(0));
          comm -= expect;
        }
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            if (!(comm(i, j) == Complex<S>(0))) {
              throw std::logic_error("liegeo: spin lift fails the so(3) commutation relations");
            }
          }
      }

    // Spin traces; must be real.
    PairingConstants<S> spin;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        spin.pair2(a, b) = real_trace(rho(a) * rho(b));
        for (int c = 0; c < 3; ++c) {
          spin.pair3(a, b, c) = real_trace(rho(a) * rho(b) * rho(c));
        }
      }

    // Derive kappa from the quadratic ratio against the frame representation
    // and verify one constant serves every quadratic AND cubic entry.
    const PairingConstants<S> frame = frame_pairing_constants<S>();
    if (spin.pair2(0, 0) == S(0)) {
      throw std::logic_error("liegeo: degenerate spin quadratic pairing");
    }
    kappa_ = frame.pair2(0, 0) / spin.pair2(0, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (!(frame.pair2(a, b) == kappa_ * spin.pair2(a, b))) {
          throw std::logic_error("liegeo: spin/frame quadratic pairings are not proportional");
        }
        for (int c = 0; c < 3; ++c) {
          if (!(frame.pair3(a, b, c) == kappa_ * spin.pair3(a, b, c))) {
            throw std::logic_error(
                "liegeo: quadratic and cubic trace normalizations disagree; a single kappa "
                "cannot calibrate this representation");
          }
        }
      }

    constants_ = spin;
    for (auto& v : constants_.p2) v *= kappa_;
    for (auto& v : constants_.p3) v *= kappa_;
  }

  /// The calibrated shared instance; first use runs the round-metric
  /// calibration and throws std::logic_error when it does not return -1.
  static const SpinPairing& standard();

  const Matrix<Complex<S>>& rho(int a) const { return rho_[static_cast<std::size_t>(a)]; }
  const S& kappa() const { return kappa_; }

  /// kappa-normalized pairing constants (equal to the frame-representation
  /// pairings; derived from the genuine 2x2 matrices, not hard-coded).
  const PairingConstants<S>& constants() const { return constants_; }

 private:
  static S epsilon(int a, int b, int c) {
    if (a == b || b == c || a == c) return S(0);
    return ((b - a + 3) % 3 == 1) ? S(1) : S(-1);
  }

  static S real_trace(const Matrix<Complex<S>>& m) {
    Complex<S> tr(0);
    for (int i = 0; i < m.rows(); ++i) tr += m(i, i);
    if (!(tr.im == S(0))) {
      throw std::logic_error("liegeo: spin pairing trace is not real");
    }
    return tr.re;
  }

  std::array<Matrix<Complex<S>>, 3> rho_;
  S kappa_{0};
  PairingConstants<S> constants_;
};

/// Connection 1-forms of a metric connection in an orthonormal frame,
/// decomposed against the so(3) basis: with F = g.orthonormal_frame(), the
/// connection matrix omega^i_j = sum_k Gamma-hat^i_{kj} f^k (f^k the
/// orthonormal coframe) is skew and equals sum_c theta^c L_c; returns
/// (theta^1, theta^2, theta^3). Throws when the connection is not metric for
/// g (skewness violated beyond `tol`), or - for exact scalars - when g has no
/// exact orthonormal frame.
template <typename S>
std::array<InvariantForm<S>, 3> spin_connection_forms(const LieAlgebraFrame& L,
                                                      const InnerProductOnAlgebra<S>& g,
                                                      const ConnectionCoefficients<S>& conn,
                                                      double tol = 1e-9) {
  const int n = L.dim();
  if (n != 3 || g.dim() != 3 || conn.dim() != 3) {
    throw std::invalid_argument("liegeo: spin connection forms require a 3-dimensional frame");
  }
  const Matrix<S> F = g.orthonormal_frame();
  const Matrix<S> Finv = F.inverse();

  // Gamma-hat^i_{kj}: components of nabla_{F_k} F_j in the orthonormal frame.
  std::array<std::array<std::array<S, 3>, 3>, 3> gh{};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      std::vector<S> Fk(3), Fj(3);
      for (int r = 0; r < 3; ++r) {
        Fk[static_cast<std::size_t>(r)] = F(r, k);
        Fj[static_cast<std::size_t>(r)] = F(r, j);
      }
      const std::vector<S> v = Finv.apply(conn.apply(Fk, Fj));
      for (int i = 0; i < 3; ++i) gh[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
    }

  // Metric connections give skew matrices: Gamma-hat^i_{kj} = -Gamma-hat^j_{ki}.
  double worst = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double r = scalar_traits<S>::to_double(
            gh[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] +
            gh[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
        worst = std::max(worst, std::fabs(r));
      }
  if (worst > tol) {
    throw std::invalid_argument(
        "liegeo: connection is not metric for this inner product (orthonormal connection "
        "matrix is not skew)");
  }

  // omega^i_j = sum_k gh^i_{kj} f^k with f^k = sum_b Finv(k, b) e^b;
  // theta^c = omega^b_a for (c, a, b) cyclic, antisymmetrized for robustness.
  const S half = scalar_traits<S>::from_fraction(1, 2);
  std::array<InvariantForm<S>, 3> theta = {InvariantForm<S>(3, 1), InvariantForm<S>(3, 1),
                                           InvariantForm<S>(3, 1)};
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3;
    const int b = (c + 2) % 3;
    for (int k = 0; k < 3; ++k) {
      const S coeff = half * (gh[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] -
                              gh[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)][static_cast<std::size_t>(b)]);
      if (coeff == S(0)) continue;
      for (int e = 0; e < 3; ++e) {
        theta[static_cast<std::size_t>(c)].coefficient({e}) += coeff * Finv(k, e);
      }
    }
  }
  return theta;
}

/// The paired trace form <Theta ^ dTheta + (2/3) Theta^3> for Theta given by
/// so(3) coefficients theta^c, with the supplied pairing constants:
///   sum_ab p2(a,b) theta^a ^ d theta^b
///   + (2/3) sum_abc p3(a,b,c) theta^a ^ theta^b ^ theta^c.
template <typename S>
InvariantForm<S> cs_trace_form(const LieAlgebraFrame& L,
                               const std::array<InvariantForm<S>, 3>& theta,
                               const PairingConstants<S>& pairing) {
  InvariantForm<S> out(3, 3);
  std::array<InvariantForm<S>, 3> dtheta = {ce_differential(L, theta[0]),
                                            ce_differential(L, theta[1]),
                                            ce_differential(L, theta[2])};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const S& p = pairing.pair2(a, b);
      if (p == S(0)) continue;
      out += p * wedge(theta[static_cast<std::size_t>(a)], dtheta[static_cast<std::size_t>(b)]);
    }
  // Accumulate the cubic sum first and fold in 2/3 once at the end: whenever
  // the sum is an integer multiple of 3 (every structurally exact input, in
  // particular the round metric) the result stays exact even in floating
  // point, which per-term 2/3 factors would not.
  InvariantForm<S> cubic(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const InvariantForm<S> ab = wedge(theta[static_cast<std::size_t>(a)], theta[static_cast<std::size_t>(b)]);
      for (int c = 0; c < 3; ++c) {
        const S& p = pairing.pair3(a, b, c);
        if (p == S(0)) continue;
        cubic += p * wedge(ab, theta[static_cast<std::size_t>(c)]);
      }
    }
  cubic *= S(2);
  out.coefficient({0, 1, 2}) += cubic.component(0) / S(3);
  return out;
}

/// Integral over the 3-sphere of (-1/16 pi^2) * trace_form in the standard
/// frame normalization: the 2 pi^2 volume cancels the pi's, leaving
/// -coefficient / 8. Exact for exact scalars.
template <typename S>
S cs_integral_of_trace_form(const InvariantForm<S>& trace_form) {
  if (trace_form.dim() != 3 || trace_form.degree() != 3) {
    throw std::invalid_argument("liegeo: trace form must be a 3-form on a 3-dimensional frame");
  }
  return -trace_form.component(0) / S(8);
}

/// End-to-end spin-route Chern-Simons integral of a metric connection over
/// the 3-sphere in the standard frame normalization. Exact for exact inputs
/// whose metric has an exact orthonormal frame.
template <typename S>
S cs_integral(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
              const ConnectionCoefficients<S>& conn,
              const PairingConstants<S>& pairing = SpinPairing<S>::standard().constants()) {
  return cs_integral_of_trace_form(cs_trace_form(L, spin_connection_forms(L, g, conn), pairing));
}

/// Independent frame-trace route: evaluates the ordinary 3x3 trace of the
/// connection matrix Theta^i_j = Gamma^i_{kj} e^k directly in the structure
/// frame. The trace is conjugation invariant, so no orthonormalization (and
/// no metric at all) is needed; for metric connections this must agree with
/// cs_integral exactly. Valid for any invariant connection; the flat
/// connection returns 0.
template <typename S>
S cs_integral_frame_trace(const LieAlgebraFrame& L, const ConnectionCoefficients<S>& conn) {
  const int n = L.dim();
  if (n != 3 || conn.dim() != 3) {
    throw std::invalid_argument("liegeo: frame-trace route requires a 3-dimensional frame");
  }
  // Theta(i, j) = sum_k Gamma^i_{kj} e^k as a matrix of 1-forms.
  std::array<std::array<InvariantForm<S>, 3>, 3> Th{{
      {InvariantForm<S>(3, 1), InvariantForm<S>(3, 1), InvariantForm<S>(3, 1)},
      {InvariantForm<S>(3, 1), InvariantForm<S>(3, 1), InvariantForm<S>(3, 1)},
      {InvariantForm<S>(3, 1), InvariantForm<S>(3, 1), InvariantForm<S>(3, 1)},
  }};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Th[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].coefficient({k}) +=
            conn.component(k, j, i);
      }
  // Tr(Theta ^ dTheta): sum_ij Theta^i_j ^ d Theta^j_i.
  InvariantForm<S> out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out += wedge(Th[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   ce_differential(L, Th[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
    }
  // (2/3) Tr(Theta^3): sum_ijk Theta^i_j ^ Theta^j_k ^ Theta^k_i, with the
  // 2/3 folded in once after summing (exactness: see cs_trace_form).
  S cubic(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const InvariantForm<S>& ij = Th[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k < 3; ++k) {
        cubic += wedge(wedge(ij, Th[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]),
                       Th[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)])
                     .component(0);
      }
    }
  out.coefficient({0, 1, 2}) += S(2) * cubic / S(3);
  return cs_integral_of_trace_form(out);
}

/// The coefficient c with CS form = c * e1^e2^e3 for a metric connection:
/// c = (integral over the 3-sphere) / (2 pi^2). Double-valued because of the
/// pi's; the round Levi-Civita connection gives -1/(2 pi^2).
template <typename S>
double cs_frame_coefficient(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                            const ConnectionCoefficients<S>& conn,
                            const PairingConstants<S>& pairing = SpinPairing<S>::standard().constants()) {
  return scalar_traits<S>::to_double(cs_integral(L, g, conn, pairing)) / standard_frame_volume;
}

/// Integral over the 3-sphere of the transgression form between two metric
/// connections of the same inner product, along the straight path
/// A_t = conn0 + t (conn1 - conn0):
///
///   CS(conn1) - CS(conn0) = (-1/16 pi^2) int_0^1 2 <beta ^ F_t> dt,
///   F_t = d A_t + A_t ^ A_t,  beta = A_1 - A_0.
///
/// The integrand is quadratic in t, so Simpson's rule is exact; with conn0
/// the flat connection this equals cs_integral(conn1) identically (invariant
/// exact 3-forms vanish on the standard rank-3 frame, so the boundary term
/// drops pointwise, not just in cohomology).
template <typename S>
S cs_transgression_integral(const LieAlgebraFrame& L, const InnerProductOnAlgebra<S>& g,
                            const ConnectionCoefficients<S>& conn0,
                            const ConnectionCoefficients<S>& conn1,
                            const PairingConstants<S>& pairing = SpinPairing<S>::standard().constants()) {
  const std::array<InvariantForm<S>, 3> t0 = spin_connection_forms(L, g, conn0);
  const std::array<InvariantForm<S>, 3> t1 = spin_connection_forms(L, g, conn1);
  std::array<InvariantForm<S>, 3> beta = {t1[0] - t0[0], t1[1] - t0[1], t1[2] - t0[2]};
  std::array<InvariantForm<S>, 3> dt0 = {ce_differential(L, t0[0]), ce_differential(L, t0[1]),
                                         ce_differential(L, t0[2])};
  std::array<InvariantForm<S>, 3> dbeta = {ce_differential(L, beta[0]), ce_differential(L, beta[1]),
                                           ce_differential(L, beta[2])};

  // 2 <beta ^ F_t> as a 3-form, evaluated at a fixed rational t.
  auto integrand = [&](const S& t) {
    std::array<InvariantForm<S>, 3> at = {t0[0] + t * beta[0], t0[1] + t * beta[1],
                                          t0[2] + t * beta[2]};
    std::array<InvariantForm<S>, 3> dat = {dt0[0] + t * dbeta[0], dt0[1] + t * dbeta[1],
                                           dt0[2] + t * dbeta[2]};
    InvariantForm<S> out(3, 3);
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) {
        const S& p = pairing.pair2(c, d);
        if (p == S(0)) continue;
        out += p * wedge(beta[static_cast<std::size_t>(c)], dat[static_cast<std::size_t>(d)]);
      }
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a) {
        const InvariantForm<S> ca = wedge(beta[static_cast<std::size_t>(c)], at[static_cast<std::size_t>(a)]);
        for (int b = 0; b < 3; ++b) {
          const S& p = pairing.pair3(c, a, b);
          if (p == S(0)) continue;
          out += p * wedge(ca, at[static_cast<std::size_t>(b)]);
        }
      }
    out *= S(2);
    return out;
  };

  // Simpson: exact for the quadratic-in-t integrand.
  const S sixth = scalar_traits<S>::from_fraction(1, 6);
  const S half = scalar_traits<S>::from_fraction(1, 2);
  InvariantForm<S> total = integrand(S(0)) + S(4) * integrand(half) + integrand(S(1));
  total *= sixth;
  return cs_integral_of_trace_form(total);
}

template <typename S>
const SpinPairing<S>& SpinPairing<S>::standard() {
  static const SpinPairing<S> instance = [] {
    SpinPairing<S> p;
    // Calibration: the full pipeline on the round metric must return exactly
    // -1 (to roundoff in floating point).
    const LieAlgebraFrame frame = LieAlgebraFrame::su2();
    const auto round = InnerProductOnAlgebra<S>::identity(3);
    const S value = cs_integral(frame, round, levi_civita(frame, round), p.constants());
    const double err = std::fabs(scalar_traits<S>::to_double(value) + 1.0);
    const double tol = scalar_traits<S>::is_exact ? 0.0 : 1e-12;
    if (err > tol) {
      throw std::logic_error(
          "liegeo: spin pairing calibration failed: round-metric Chern-Simons integral is "
          "not -1");
    }
    return p;
  }();
  return instance;
}

}  // namespace liegeo
