// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Invariant differential forms. A left-invariant p-form on the group is
// determined by its values on the frame, i.e. by an alternating p-tensor on
// the algebra; the de Rham differential restricted to invariant forms needs
// only the brackets:
//
//   (d w)(X_0,..,X_p) = sum_{a<b} (-1)^{a+b} w([X_a,X_b], X_0,..,^X_a,..,^X_b,..)
//
// Components are stored against lexicographic increasing multi-indices, so a
// p-form in dimension n has C(n,p) coefficients.

#pragma once

#include "liegeo/detail/multi_index.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace liegeo {

template <typename S>
class InvariantForm {
 public:
  /// The zero p-form in dimension n.
  InvariantForm(int dim, int degree)
      : dim_(dim), degree_(degree), comp_(detail::binomial(dim, degree), S(0)) {
    if (dim <= 0) throw std::invalid_argument("liegeo: form dimension must be positive");
    if (degree < 0 || degree > dim) {
      throw std::invalid_argument("liegeo: form degree must lie in 0..dim");
    }
  }

  /// The basis form e^{i_1} ^ ... ^ e^{i_p} for strictly increasing 0-based
  /// indices.
  static InvariantForm basis(int dim, std::initializer_list<int> indices) {
    InvariantForm out(dim, static_cast<int>(indices.size()));
    std::vector<int> idx(indices);
    for (std::size_t i = 1; i < idx.size(); ++i) {
      if (idx[i - 1] >= idx[i]) {
        throw std::invalid_argument("liegeo: basis multi-index must be strictly increasing");
      }
    }
    if (!idx.empty() && (idx.front() < 0 || idx.back() >= dim)) {
      throw std::invalid_argument("liegeo: basis multi-index out of range");
    }
    out.comp_[detail::combination_rank(idx, dim)] = S(1);
    return out;
  }

  /// The constant function 1 viewed as a 0-form.
  static InvariantForm one(int dim) {
    InvariantForm out(dim, 0);
    out.comp_[0] = S(1);
    return out;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t component_count() const { return comp_.size(); }

  const S& component(std::size_t rank) const { return comp_[rank]; }
  S& component(std::size_t rank) { return comp_[rank]; }

  /// Coefficient of the (sorted) basis multi-index I.
  const S& coefficient(const std::vector<int>& sorted_index) const {
    return comp_[detail::combination_rank(sorted_index, dim_)];
  }
  S& coefficient(const std::vector<int>& sorted_index) {
    return comp_[detail::combination_rank(sorted_index, dim_)];
  }

  /// Value on an ordered tuple of frame vectors (possibly unsorted); fully
  /// antisymmetric, zero on repeated indices.
  S operator()(std::vector<int> index) const {
    if (static_cast<int>(index.size()) != degree_) {
      throw std::invalid_argument("liegeo: evaluation arity must equal the form degree");
    }
    const int sign = detail::sort_index_sign(index);
    if (sign == 0) return S(0);
    return sign > 0 ? coefficient(index) : S(-coefficient(index));
  }

  InvariantForm& operator+=(const InvariantForm& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += rhs.comp_[i];
    return *this;
  }
  InvariantForm& operator-=(const InvariantForm& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= rhs.comp_[i];
    return *this;
  }
  InvariantForm& operator*=(const S& scalar) {
    for (auto& v : comp_) v *= scalar;
    return *this;
  }

  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
  friend InvariantForm operator*(const S& s, InvariantForm a) { return a *= s; }
  friend InvariantForm operator*(InvariantForm a, const S& s) { return a *= s; }
  friend InvariantForm operator-(InvariantForm a) { return a *= S(-1); }

  /// Largest absolute component (coercing exact scalars through double only
  /// for reporting).
  double max_abs_component() const {
    double m = 0.0;
    for (const auto& v : comp_) {
      const double a = std::fabs(scalar_traits<S>::to_double(v));
      if (a > m) m = a;
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& v : comp_) {
      if (!(v == S(0))) return false;
    }
    return true;
  }

  /// Human-readable rendering, e.g. "-2 e1^e2" (frame indices printed 1-based
  /// to match the usual mathematical notation).
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    const auto combos = detail::combinations(dim_, degree_);
    for (std::size_t r = 0; r < comp_.size(); ++r) {
      if (comp_[r] == S(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << scalar_traits<S>::to_string(comp_[r]);
      if (degree_ > 0) {
        os << ' ';
        for (std::size_t k = 0; k < combos[r].size(); ++k) {
          if (k > 0) os << '^';
          os << 'e' << (combos[r][k] + 1);
        }
      }
    }
    if (first) os << '0';
    return os.str();
  }

 private:
  void require_same_shape(const InvariantForm& rhs) const {
    if (rhs.dim_ != dim_ || rhs.degree_ != degree_) {
      throw std::invalid_argument("liegeo: form shape mismatch");
    }
  }

  int dim_;
  int degree_;
  std::vector<S> comp_;
};

/// Wedge product of invariant forms.
template <typename S>
InvariantForm<S> wedge(const InvariantForm<S>& a, const InvariantForm<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("liegeo: form dimension mismatch");
  const int n = a.dim();
  const int p = a.degree();
  const int q = b.degree();
  if (p + q > n) {
    throw std::invalid_argument("liegeo: wedge degree exceeds the frame dimension");
  }
  InvariantForm<S> out(n, p + q);
  const auto ai = detail::combinations(n, p);
  const auto bi = detail::combinations(n, q);
  for (std::size_t ra = 0; ra < ai.size(); ++ra) {
    if (a.component(ra) == S(0)) continue;
    for (std::size_t rb = 0; rb < bi.size(); ++rb) {
      if (b.component(rb) == S(0)) continue;
      // Skip overlapping multi-indices.
      std::vector<int> merged;
      merged.reserve(static_cast<std::size_t>(p + q));
      std::merge(ai[ra].begin(), ai[ra].end(), bi[rb].begin(), bi[rb].end(),
                 std::back_inserter(merged));
      bool overlap = false;
      for (std::size_t k = 1; k < merged.size(); ++k) {
        if (merged[k - 1] == merged[k]) {
          overlap = true;
          break;
        }
      }
      if (overlap) continue;
      const int sign = detail::merge_sign(ai[ra], bi[rb]);
      S term = a.component(ra) * b.component(rb);
      if (sign < 0) term = -term;
      out.coefficient(merged) += term;
    }
  }
  return out;
}

/// Differential of an invariant form, computed from the brackets alone.
template <typename S>
InvariantForm<S> ce_differential(const LieAlgebraFrame& L, const InvariantForm<S>& w) {
  const int n = L.dim();
  if (w.dim() != n) throw std::invalid_argument("liegeo: form does not match frame dimension");
  const int p = w.degree();
  if (p >= n) {
    // Top-degree forms are closed; the image space Lambda^{n+1} is trivial and
    // not representable here, so callers handle that degree themselves.
    throw std::invalid_argument("liegeo: differential of a top-degree form is identically zero");
  }
  InvariantForm<S> out(n, p + 1);
  const auto targets = detail::combinations(n, p + 1);
  for (std::size_t rt = 0; rt < targets.size(); ++rt) {
    const std::vector<int>& K = targets[rt];
    S value(0);
    for (int a = 0; a < p + 1; ++a) {
      for (int b = a + 1; b < p + 1; ++b) {
        // rest = K without positions a, b.
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(p - 1));
        for (int t = 0; t < p + 1; ++t) {
          if (t != a && t != b) rest.push_back(K[t]);
        }
        const int outer_sign = ((a + b) % 2 == 0) ? 1 : -1;  // (-1)^{a+b}
        for (int m = 0; m < n; ++m) {
          const double cm = L.c(m, K[a], K[b]);
          if (cm == 0.0) continue;
          std::vector<int> args;
          args.reserve(static_cast<std::size_t>(p));
          args.push_back(m);
          args.insert(args.end(), rest.begin(), rest.end());
          const S wval = w(args);
          if (wval == S(0)) continue;
          S term = scalar_traits<S>::from_double(cm) * wval;
          if (outer_sign < 0) term = -term;
          value += term;
        }
      }
    }
    out.component(rt) = value;
  }
  return out;
}

}  // namespace liegeo
