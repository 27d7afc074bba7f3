#pragma once

#include "ellarr/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ellarr {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged IntMatrix initializer");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix select_rows(const std::vector<std::size_t>& idx) const {
    IntMatrix out(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(idx[r], j);
    return out;
  }

  IntMatrix select_cols(const std::vector<std::size_t>& idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < idx.size(); ++c) out(i, c) = (*this)(i, idx[c]);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Invariant factors d_1 | d_2 | ... | d_rank (all positive) of an integer
/// matrix viewed as a map Z^cols -> Z^rows.
struct SmithForm {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;

  /// The factors > 1: the cyclic decomposition of tor coker.
  std::vector<Integer> torsion_factors() const {
    std::vector<Integer> out;
    for (const auto& d : invariant_factors)
      if (d > 1) out.push_back(d);
    return out;
  }

  Integer torsion_order() const {
    Integer p = 1;
    for (const auto& d : invariant_factors) p *= d;
    return p;
  }

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

namespace detail {

// Smallest nonzero |entry| in the trailing block starting at (t, t).
inline bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& v = a(i, j);
      if (v == 0) continue;
      Integer av = abs(v);
      if (!found || av < best) {
        found = true;
        best = std::move(av);
        pi = i;
        pj = j;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace detail

/// Diagonalizes by elementary row and column operations, always pivoting on
/// the entry of least absolute value. Exact for any entry size.
inline SmithForm smith_form(IntMatrix a) {
  SmithForm out;
  const std::size_t bound = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!detail::find_pivot(a, t, pi, pj)) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        if (q != 0) a.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        if (q != 0) a.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder in row or column t is now smaller than the pivot
        std::size_t best_i = t, best_j = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) best = abs(a(i, t)), best_i = i, best_j = t;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) best = abs(a(t, j)), best_i = t, best_j = j;
        a.swap_rows(t, best_i);
        a.swap_cols(t, best_j);
        continue;
      }

      // Row and column t are clear; enforce d_t | every remaining entry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

inline std::size_t rank(const IntMatrix& m) { return smith_form(m).rank; }

/// Order of the torsion subgroup of coker(m).
inline Integer torsion_order(const IntMatrix& m) { return smith_form(m).torsion_order(); }

}  // namespace ellarr
