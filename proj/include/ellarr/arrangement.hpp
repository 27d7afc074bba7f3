#pragma once

#include "ellarr/int_matrix.hpp"
#include "ellarr/ring_matrix.hpp"
#include "ellarr/subset.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ellarr {

/// Everything known about the intersection A_S of the divisors in S.
struct SubsetReport {
  Subset subset;
  std::size_t rank = 0;
  Integer multiplicity = 1;
  std::size_t layer_dim = 0;
  std::vector<Integer> torsion_invariants;
};

/// k divisors H_i = ker(alpha_i) in E^n, one per row of a k x n matrix over
/// R = End(E). Immutable; per-subset reports are memoized and the memo is
/// shared between copies.
class EllipticArrangement {
 public:
  explicit EllipticArrangement(RingMatrix a)
      : matrix_(std::move(a)), expansion_(expand_lambda(matrix_)), memo_(std::make_shared<Memo>()) {
    if (matrix_.rows() > Subset::max_width)
      throw input_error("matrix.rows", "at most 32 divisors are supported");
  }

  const CurveParams& curve() const { return matrix_.curve(); }
  const RingMatrix& matrix() const { return matrix_; }
  /// 2k x 2n lattice expansion of the whole matrix.
  const IntMatrix& expansion() const { return expansion_; }
  std::size_t size() const { return matrix_.rows(); }
  std::size_t ambient_dim() const { return matrix_.cols(); }
  Subset ground_set() const { return Subset::full(size()); }

  /// Rows of the cached expansion belonging to pi_S o A.
  IntMatrix expansion_of(Subset s) const {
    check(s);
    const std::size_t k = size();
    std::vector<std::size_t> rows;
    for (std::size_t i : s.elements()) rows.push_back(i);
    for (std::size_t i : s.elements()) rows.push_back(k + i);
    return expansion_.select_rows(rows);
  }

  SubsetReport report(Subset s) const {
    check(s);
    {
      std::lock_guard lock(memo_->mutex);
      if (auto it = memo_->table.find(s.bits()); it != memo_->table.end()) return it->second;
    }
    const SmithForm snf = smith_form(expansion_of(s));
    SubsetReport r;
    r.subset = s;
    r.rank = snf.rank / 2;
    r.multiplicity = snf.torsion_order();
    r.layer_dim = ambient_dim() - r.rank;
    r.torsion_invariants = snf.torsion_factors();
    std::lock_guard lock(memo_->mutex);
    memo_->table.insert_or_assign(s.bits(), r);
    return r;
  }

  std::size_t rank_of(Subset s) const { return report(s).rank; }
  Integer multiplicity(Subset s) const { return report(s).multiplicity; }
  std::vector<Integer> torsion_invariants(Subset s) const { return report(s).torsion_invariants; }
  std::size_t layer_dimension(Subset s) const { return report(s).layer_dim; }

  bool is_essential() const { return rank_of(ground_set()) == ambient_dim(); }

 private:
  struct Memo {
    std::mutex mutex;
    std::unordered_map<std::uint32_t, SubsetReport> table;
  };

  void check(Subset s) const {
    if (!s.within(size()))
      throw input_error("subset " + s.to_string() + " is not contained in the " +
                        std::to_string(size()) + " divisors");
  }

  RingMatrix matrix_;
  IntMatrix expansion_;
  std::shared_ptr<Memo> memo_;
};

/// The stacked arrangement (I_k over A^H) of k+n divisors in E^k, with T the
/// indices of the A^H rows. Contracting its matroid by T gives the dual of
/// the original arithmetic matroid.
struct DualArrangement {
  EllipticArrangement stacked;
  Subset contraction_set;
};

inline DualArrangement dual_arrangement(const EllipticArrangement& arr) {
  const std::size_t k = arr.size(), n = arr.ambient_dim();
  RingMatrix b = vstack(RingMatrix::identity(arr.curve(), k), conj_transpose(arr.matrix()));
  Subset t;
  for (std::size_t j = 0; j < n; ++j) t = t.with(k + j);
  return {EllipticArrangement(std::move(b)), t};
}

}  // namespace ellarr
