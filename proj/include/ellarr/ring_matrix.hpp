#pragma once

#include "ellarr/int_matrix.hpp"
#include "ellarr/quadratic_order.hpp"
#include "ellarr/subset.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ellarr {

/// k x n matrix with entries in R = <1, N tau>; a homomorphism E^n -> E^k.
class RingMatrix {
 public:
  RingMatrix(CurveParams curve, std::size_t k, std::size_t n)
      : curve_(std::move(curve)), k_(k), n_(n), entries_(k * n) {}
  RingMatrix(CurveParams curve, std::size_t k, std::size_t n, std::vector<RingElement> entries)
      : curve_(std::move(curve)), k_(k), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != k_ * n_) throw input_error("matrix", "entry count does not match shape");
  }
  RingMatrix(CurveParams curve, std::initializer_list<std::initializer_list<RingElement>> rows)
      : curve_(std::move(curve)), k_(rows.size()), n_(rows.size() ? rows.begin()->size() : 0) {
    for (const auto& r : rows) {
      if (r.size() != n_) throw input_error("matrix", "ragged rows");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static RingMatrix identity(const CurveParams& curve, std::size_t k) {
    RingMatrix m(curve, k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = RingElement{1};
    return m;
  }

  const CurveParams& curve() const { return curve_; }
  std::size_t rows() const { return k_; }
  std::size_t cols() const { return n_; }

  RingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  CurveParams curve_;
  std::size_t k_;
  std::size_t n_;
  std::vector<RingElement> entries_;
};

namespace detail {

// Writes [[X, top_right*Y], [bottom_left*Y, X + trace_prime*Y]] into a 2k x 2n matrix.
inline IntMatrix expand_blocks(const RingMatrix& a, const Integer& top_right,
                               const Integer& bottom_left) {
  const std::size_t k = a.rows(), n = a.cols();
  const Integer s = a.curve().trace_prime();
  IntMatrix out(2 * k, 2 * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RingElement& e = a(i, j);
      out(i, j) = e.x;
      out(i, n + j) = top_right * e.y;
      out(k + i, j) = bottom_left * e.y;
      out(k + i, n + j) = e.x + s * e.y;
    }
  return out;
}

}  // namespace detail

/// A as a Z-linear map Z^{2n} -> Z^{2k} in the lattice basis {e_j, tau e_j}.
/// Rows and columns are blocked: all 1-coordinates first, then all
/// tau-coordinates, each block in ascending index order.
inline IntMatrix expand_lambda(const RingMatrix& a) {
  const CurveParams& c = a.curve();
  return detail::expand_blocks(a, -c.delta_prime, c.N);
}

/// Same map in the order basis {e_j, N tau e_j}.
inline IntMatrix expand_order(const RingMatrix& a) {
  const CurveParams& c = a.curve();
  return detail::expand_blocks(a, -c.delta_prime * c.N, Integer(1));
}

inline RingMatrix conj_transpose(const RingMatrix& a) {
  RingMatrix out(a.curve(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a.curve(), a(i, j));
  return out;
}

/// pi_S o A: the rows indexed by S in ascending order.
inline RingMatrix row_select(const RingMatrix& a, Subset s) {
  if (!s.within(a.rows())) throw input_error("subset " + s.to_string() + " out of range");
  std::vector<RingElement> entries;
  entries.reserve(s.size() * a.cols());
  for (std::size_t i : s.elements())
    for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a(i, j));
  return RingMatrix(a.curve(), s.size(), a.cols(), std::move(entries));
}

/// Stacks `top` over `bottom`; both must live over the same curve.
inline RingMatrix vstack(const RingMatrix& top, const RingMatrix& bottom) {
  if (!(top.curve() == bottom.curve())) throw input_error("cannot stack matrices over different curves");
  if (top.cols() != bottom.cols()) throw input_error("cannot stack matrices with different column counts");
  RingMatrix out(top.curve(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

inline RingMatrix multiply(const RingMatrix& l, const RingMatrix& r) {
  if (!(l.curve() == r.curve())) throw input_error("cannot multiply matrices over different curves");
  if (l.cols() != r.rows()) throw input_error("inner dimensions differ");
  const CurveParams& c = l.curve();
  RingMatrix out(c, l.rows(), r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      RingElement acc;
      for (std::size_t t = 0; t < l.cols(); ++t) acc = ring_add(c, acc, ring_mul(c, l(i, t), r(t, j)));
      out(i, j) = acc;
    }
  return out;
}

}  // namespace ellarr
