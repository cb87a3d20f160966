// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// String classes on the 3-sphere as an integer torsor, their canonical
// 3-forms and integrals for left- or right-invariant metrics, and the
// e-invariant in Q/Z.
//
// The torsor is anchored by three distinguished classes: the left-framing
// class L, the disk-bounding class dD4 = L + 1, and the right-framing class
// R = L + 2. For a left-invariant metric the integral of the canonical
// 3-form of L is the Chern-Simons integral of the Levi-Civita connection in
// the left-invariant frame, and shifting the class by j adds j to the
// integral. Right-invariant metrics are evaluated by the same machinery on
// the opposite algebra (negated structure constants) anchored at R; the
// left/right mirror identity (equal Grams give opposite base integrals) is
// then a theorem the tests check, not an assumption the code makes.

#pragma once

#include "liegeo/chern_simons.hpp"
#include "liegeo/connection.hpp"
#include "liegeo/forms.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/scalar.hpp"

#include <string>

namespace liegeo {

/// Which translations make the metric (and framing) invariant.
enum class Chirality { left, right };

/// "left" / "right".
std::string chirality_name(Chirality c);

/// Parses "left" or "right"; throws std::invalid_argument otherwise.
Chirality parse_chirality(const std::string& text);

/// A string class on the 3-sphere: an anchor plus an integer offset in the
/// generator of H^3(S^3; Z). The three anchors satisfy dD4 = L + 1 and
/// R = L + 2, so every class has a unique L-anchored normal form
/// (left_offset); equality compares normal forms, while printing keeps the
/// anchor the class was built with.
class StringClass {
 public:
  enum class Anchor { left_framing, disk_bounding, right_framing };

  StringClass() = default;
  explicit StringClass(Anchor anchor, int offset = 0) : anchor_(anchor), offset_(offset) {}

  static StringClass left_framing() { return StringClass(Anchor::left_framing); }
  static StringClass disk_bounding() { return StringClass(Anchor::disk_bounding); }
  static StringClass right_framing() { return StringClass(Anchor::right_framing); }

  /// Parses "L", "dD4", "R", optionally followed by a signed integer offset:
  /// "L+3", "dD4-1", "R+0". Throws std::invalid_argument on anything else.
  static StringClass parse(const std::string& text);

  Anchor anchor() const { return anchor_; }
  int offset() const { return offset_; }

  /// Offset of this class from the left-framing anchor (the normal form).
  int left_offset() const {
    switch (anchor_) {
      case Anchor::left_framing: return offset_;
      case Anchor::disk_bounding: return offset_ + 1;
      case Anchor::right_framing: return offset_ + 2;
    }
    return offset_;  // unreachable
  }

  /// Offset of this class from the right-framing anchor.
  int right_offset() const { return left_offset() - 2; }

  /// Torsor action: this + j.
  StringClass shifted(int j) const { return StringClass(anchor_, offset_ + j); }

  /// Torsor difference: a - b as an integer.
  friend int difference(const StringClass& a, const StringClass& b) {
    return a.left_offset() - b.left_offset();
  }

  /// Inverse of parse: "L", "L+3", "dD4-1", ... ("+0" omitted).
  std::string to_string() const;

  friend bool operator==(const StringClass& a, const StringClass& b) {
    return a.left_offset() == b.left_offset();
  }
  friend bool operator!=(const StringClass& a, const StringClass& b) { return !(a == b); }

 private:
  Anchor anchor_ = Anchor::left_framing;
  int offset_ = 0;
};

/// An exact rational considered modulo the integers; the stored
/// representative is reduced into [0, 1).
class RationalModZ {
 public:
  RationalModZ() = default;
  explicit RationalModZ(const Rational& value);

  /// The representative in [0, 1).
  const Rational& representative() const { return rep_; }

  /// Reduced-fraction rendering of the representative: "0", "1/2", "23/24".
  std::string to_string() const;

  friend bool operator==(const RationalModZ& a, const RationalModZ& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const RationalModZ& a, const RationalModZ& b) { return !(a == b); }

 private:
  Rational rep_{0};
};

/// e-invariant of a string class on the 3-sphere, in Q/Z: the canonical
/// 3-form integral at the round metric divided by 24. Computed through the
/// torsor normal form: (left_offset - 1) / 24 mod Z, since the round
/// left-framing integral is -1.
RationalModZ e_invariant(const StringClass& cls);

namespace detail {

/// The structure frame a chirality evaluates on: the given frame for left
/// invariance, the opposite (negated-bracket) frame for right invariance.
inline LieAlgebraFrame chirality_frame(const LieAlgebraFrame& frame, Chirality chirality) {
  return chirality == Chirality::left ? frame : frame.opposite();
}

/// Anchor offset of a class for a chirality: classes are measured from L for
/// left-invariant metrics and from R for right-invariant ones.
inline int chirality_offset(const StringClass& cls, Chirality chirality) {
  return chirality == Chirality::left ? cls.left_offset() : cls.right_offset();
}

}  // namespace detail

/// Integral over the 3-sphere of the canonical 3-form of the string class
/// for the diagonal family metric g_{alpha1, alpha2} (Gram
/// diag(1/alpha1^2, 1/alpha2^2, 1) on the standard frame). Exact for exact
/// scalars. The base anchor integral is the Chern-Simons integral of the
/// Levi-Civita connection via the spin route; the class offset shifts it by
/// an integer.
template <typename S>
S string_class_integral(const StringClass& cls, const S& alpha1, const S& alpha2,
                        Chirality chirality = Chirality::left) {
  const LieAlgebraFrame frame =
      detail::chirality_frame(LieAlgebraFrame::su2(), chirality);
  const InnerProductOnAlgebra<S> g = squashed_metric<S>(alpha1, alpha2);
  const S base = cs_integral(frame, g, levi_civita(frame, g));
  return base + scalar_traits<S>::from_int(detail::chirality_offset(cls, chirality));
}

/// Same integral for an arbitrary inner product on an arbitrary standard
/// rank-3 frame, evaluated by the frame-trace Chern-Simons route (needs no
/// orthonormal frame, hence stays exact for every rational Gram — including
/// scalings whose determinant has no rational square root).
template <typename S>
S string_class_integral(const StringClass& cls, const LieAlgebraFrame& frame,
                        const InnerProductOnAlgebra<S>& g,
                        Chirality chirality = Chirality::left) {
  const LieAlgebraFrame eval_frame = detail::chirality_frame(frame, chirality);
  const S base = cs_integral_frame_trace(eval_frame, levi_civita(eval_frame, g));
  return base + scalar_traits<S>::from_int(detail::chirality_offset(cls, chirality));
}

/// Floating-point integral for an arbitrary Gram matrix, routed through the
/// Milnor normal form: the metric is first brought to the diagonal family
/// (validating that it is positive-definite on a standard rank-3 frame) and
/// the family integral is evaluated at the recovered (alpha1, alpha2) —
/// legitimate because the integral is invariant under orientation-preserving
/// frame rotations and under scaling.
double string_class_integral_via_normal_form(const StringClass& cls,
                                             const LieAlgebraFrame& frame,
                                             const InnerProductOnAlgebra<double>& g,
                                             Chirality chirality = Chirality::left);

/// The canonical harmonic 3-form of the class: (integral / Vol(g)) * dvol_g.
/// The square-root volume factors cancel, leaving
/// (integral / 2 pi^2) e1^e2^e3; double-valued because of the pi's.
template <typename S>
InvariantForm<double> canonical_three_form(const StringClass& cls, const S& alpha1,
                                           const S& alpha2,
                                           Chirality chirality = Chirality::left) {
  const S integral = string_class_integral(cls, alpha1, alpha2, chirality);
  InvariantForm<double> out = InvariantForm<double>::basis(3, {0, 1, 2});
  out *= scalar_traits<S>::to_double(integral) / standard_frame_volume;
  return out;
}

}  // namespace liegeo
