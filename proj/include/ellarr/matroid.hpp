#pragma once

// Arithmetic matroids (E, rk, m) on a small ground set, stored as dense
// tables indexed by subset bitmask.
//
// Costs: tables have 2^k entries; molecule scans visit every nested pair
// X <= Y (3^k pairs) and check the interval [X, Y] for each, so the axiom
// verifiers are exponential by nature. k is capped at 20 by default.

#include "ellarr/arrangement.hpp"
#include "ellarr/integer.hpp"
#include "ellarr/polynomial.hpp"
#include "ellarr/subset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ellarr {

inline constexpr std::size_t default_ground_set_cap = 20;

class ArithmeticMatroid {
 public:
  ArithmeticMatroid() : ArithmeticMatroid(0, {0}, {Integer(1)}) {}
  ArithmeticMatroid(std::size_t k, std::vector<int> rk, std::vector<Integer> m)
      : k_(k), rk_(std::move(rk)), m_(std::move(m)) {
    if (k_ >= Subset::max_width) throw input_error("ground set too large for dense tables");
    const std::size_t n = std::size_t{1} << k_;
    if (rk_.size() != n || m_.size() != n) throw input_error("rank/multiplicity tables must have 2^k entries");
    for (const auto& v : m_)
      if (v < 1) throw input_error("multiplicities must be positive");
  }

  std::size_t size() const { return k_; }
  Subset ground_set() const { return Subset::full(k_); }
  std::size_t table_size() const { return rk_.size(); }

  int rk(Subset s) const { return rk_.at(s.index()); }
  const Integer& m(Subset s) const { return m_.at(s.index()); }
  int rank() const { return rk(ground_set()); }

  const std::vector<int>& rank_table() const { return rk_; }
  const std::vector<Integer>& multiplicity_table() const { return m_; }

  friend bool operator==(const ArithmeticMatroid&, const ArithmeticMatroid&) = default;

 private:
  std::size_t k_;
  std::vector<int> rk_;
  std::vector<Integer> m_;
};

inline ArithmeticMatroid from_arrangement(const EllipticArrangement& arr,
                                          std::size_t cap = default_ground_set_cap) {
  const std::size_t k = arr.size();
  if (k > cap)
    throw input_error("arrangement has " + std::to_string(k) + " divisors, above the cap of " +
                      std::to_string(cap));
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> rk(n);
  std::vector<Integer> m(n);
  for (std::size_t s = 0; s < n; ++s) {
    SubsetReport r = arr.report(Subset(static_cast<std::uint32_t>(s)));
    rk[s] = static_cast<int>(r.rank);
    m[s] = std::move(r.multiplicity);
  }
  return {k, std::move(rk), std::move(m)};
}

// ---------------------------------------------------------------------------
// Verification reports

struct Violation {
  Subset first;
  Subset second;
  std::string detail;
};

struct AxiomReport {
  std::string axiom;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

inline AxiomReport verify_matroid(const ArithmeticMatroid& mat) {
  AxiomReport rep{"rank", {}};
  const Subset e = mat.ground_set();
  if (mat.rk(Subset{}) != 0)
    rep.violations.push_back({Subset{}, Subset{}, "r1: rk({}) = " + std::to_string(mat.rk(Subset{}))});

  for (std::size_t s = 0; s < mat.table_size(); ++s) {
    const Subset x(static_cast<std::uint32_t>(s));
    for (std::size_t i : (e - x).elements()) {
      const int lo = mat.rk(x), hi = mat.rk(x.with(i));
      if (hi < lo || hi > lo + 1)
        rep.violations.push_back({x, x.with(i), "r2: rk jumps from " + std::to_string(lo) + " to " +
                                                    std::to_string(hi)});
    }
  }

  auto submodular = [&](Subset x, Subset y) {
    if (mat.rk(x | y) + mat.rk(x & y) > mat.rk(x) + mat.rk(y))
      rep.violations.push_back({x, y, "r3: rk(X u Y) + rk(X n Y) > rk X + rk Y"});
  };
  if (mat.size() <= 12) {
    for (std::size_t a = 0; a < mat.table_size(); ++a)
      for (std::size_t b = a + 1; b < mat.table_size(); ++b)
        submodular(Subset(static_cast<std::uint32_t>(a)), Subset(static_cast<std::uint32_t>(b)));
  } else {
    // Local form: rk(S+i) + rk(S+j) >= rk(S+i+j) + rk(S), equivalent for any set function.
    for (std::size_t s = 0; s < mat.table_size(); ++s) {
      const Subset x(static_cast<std::uint32_t>(s));
      const auto rest = (e - x).elements();
      for (std::size_t p = 0; p < rest.size(); ++p)
        for (std::size_t q = p + 1; q < rest.size(); ++q) submodular(x.with(rest[p]), x.with(rest[q]));
    }
  }
  return rep;
}

inline AxiomReport verify_A1(const ArithmeticMatroid& mat) {
  AxiomReport rep{"A1", {}};
  const Subset e = mat.ground_set();
  for (std::size_t s = 0; s < mat.table_size(); ++s) {
    const Subset x(static_cast<std::uint32_t>(s));
    for (std::size_t i : (e - x).elements()) {
      const Subset xi = x.with(i);
      const bool same_rank = mat.rk(xi) == mat.rk(x);
      const Integer& divisor = same_rank ? mat.m(xi) : mat.m(x);
      const Integer& multiple = same_rank ? mat.m(x) : mat.m(xi);
      if (multiple % divisor != 0)
        rep.violations.push_back({x, xi, "m = " + to_string(divisor) + " does not divide m = " +
                                             to_string(multiple)});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Molecules

/// Interval [X, Y] with Y = X + F + T such that rk(S) = rk(X) + |S n F| on it.
struct Molecule {
  Subset lower;      // X
  Subset upper;      // Y
  Subset free_part;  // F: become coloops after contracting X
  Subset torsion;    // T: become loops after contracting X

  friend bool operator==(const Molecule&, const Molecule&) = default;
};

/// The split of Y \ X is forced by single-element rank jumps over X; the
/// candidate is returned only if the rank condition holds on all of [X, Y].
inline std::optional<Molecule> find_molecule(const ArithmeticMatroid& mat, Subset x, Subset y) {
  if (!x.subset_of(y)) throw input_error("find_molecule: X " + x.to_string() + " is not inside Y " + y.to_string());
  if (!y.within(mat.size())) throw input_error("find_molecule: Y outside the ground set");
  const int base = mat.rk(x);
  Subset f, t;
  for (std::size_t i : (y - x).elements()) {
    if (mat.rk(x.with(i)) == base)
      t = t.with(i);
    else
      f = f.with(i);
  }
  bool ok = true;
  for_each_subset_of(y - x, [&](Subset d) {
    if (ok && mat.rk(x | d) != base + static_cast<int>((d & f).size())) ok = false;
  });
  if (!ok) return std::nullopt;
  return Molecule{x, y, f, t};
}

/// (-1)^|T| * sum over S in [X, Y] of (-1)^(|Y| - |S|) m(S).
inline Integer rho(const ArithmeticMatroid& mat, const Molecule& mol) {
  Integer sum = 0;
  const std::size_t top = mol.upper.size();
  for_each_subset_of(mol.upper - mol.lower, [&](Subset d) {
    const Subset s = mol.lower | d;
    if ((top - s.size()) % 2 == 0)
      sum += mat.m(s);
    else
      sum -= mat.m(s);
  });
  return mol.torsion.size() % 2 == 0 ? sum : Integer(-sum);
}

/// Calls f(molecule) for every molecule [X, Y] of the matroid.
template <typename F>
void for_each_molecule(const ArithmeticMatroid& mat, F&& f) {
  for (std::size_t yb = 0; yb < mat.table_size(); ++yb) {
    const Subset y(static_cast<std::uint32_t>(yb));
    for_each_subset_of(y, [&](Subset x) {
      if (auto mol = find_molecule(mat, x, y)) f(*mol);
    });
  }
}

inline AxiomReport verify_A2(const ArithmeticMatroid& mat) {
  AxiomReport rep{"A2", {}};
  for_each_molecule(mat, [&](const Molecule& mol) {
    const Integer lhs = mat.m(mol.lower) * mat.m(mol.upper);
    const Integer rhs = mat.m(mol.lower | mol.free_part) * mat.m(mol.lower | mol.torsion);
    if (lhs != rhs)
      rep.violations.push_back({mol.lower, mol.upper, "m(X)m(Y) = " + to_string(lhs) +
                                                          " but m(X u F)m(X u T) = " + to_string(rhs)});
  });
  return rep;
}

inline AxiomReport verify_P(const ArithmeticMatroid& mat) {
  AxiomReport rep{"P", {}};
  for_each_molecule(mat, [&](const Molecule& mol) {
    const Integer r = rho(mat, mol);
    if (r < 0) rep.violations.push_back({mol.lower, mol.upper, "rho = " + to_string(r)});
  });
  return rep;
}

namespace detail {

inline void check_equal_rank_rho(const ArithmeticMatroid& mat, AxiomReport& rep) {
  for (std::size_t yb = 0; yb < mat.table_size(); ++yb) {
    const Subset y(static_cast<std::uint32_t>(yb));
    for_each_subset_of(y, [&](Subset x) {
      if (mat.rk(x) != mat.rk(y)) return;
      const Integer r = rho(mat, Molecule{x, y, Subset{}, y - x});
      if (r < 0) rep.violations.push_back({x, y, "rho = " + to_string(r)});
    });
  }
}

}  // namespace detail

inline ArithmeticMatroid dual(const ArithmeticMatroid& mat);

/// rho(X, Y) >= 0 whenever rk X = rk Y.
inline AxiomReport verify_P1(const ArithmeticMatroid& mat) {
  AxiomReport rep{"P1", {}};
  detail::check_equal_rank_rho(mat, rep);
  return rep;
}

/// P1 for the dual matroid.
inline AxiomReport verify_P2(const ArithmeticMatroid& mat) {
  AxiomReport rep{"P2", {}};
  detail::check_equal_rank_rho(dual(mat), rep);
  return rep;
}

/// Flags a disagreement between P and (A2 and P1 and P2); the two are
/// equivalent for arithmetic matroids.
inline AxiomReport verify_P_equivalence(const ArithmeticMatroid& mat) {
  AxiomReport rep{"P<=>A2+P1+P2", {}};
  const bool p = verify_P(mat).passed();
  const bool split = verify_A2(mat).passed() && verify_P1(mat).passed() && verify_P2(mat).passed();
  if (p != split)
    rep.violations.push_back({Subset{}, mat.ground_set(),
                              std::string("P ") + (p ? "holds" : "fails") + " but A2+P1+P2 " +
                                  (split ? "holds" : "fails")});
  return rep;
}

// ---------------------------------------------------------------------------
// Duality and minors

/// rk*(S) = |S| - (rk(E) - rk(E \ S)),  m*(S) = m(E \ S).
inline ArithmeticMatroid dual(const ArithmeticMatroid& mat) {
  const Subset e = mat.ground_set();
  std::vector<int> rk(mat.table_size());
  std::vector<Integer> m(mat.table_size());
  for (std::size_t s = 0; s < mat.table_size(); ++s) {
    const Subset x(static_cast<std::uint32_t>(s));
    rk[s] = static_cast<int>(x.size()) - (mat.rank() - mat.rk(e - x));
    m[s] = mat.m(e - x);
  }
  return {mat.size(), std::move(rk), std::move(m)};
}

namespace detail {

// Maps subsets of the remaining elements (renumbered in ascending order) back
// to subsets of the original ground set.
inline Subset lift(Subset compact, const std::vector<std::size_t>& remaining) {
  Subset out;
  for (std::size_t i : compact.elements()) out = out.with(remaining[i]);
  return out;
}

}  // namespace detail

/// M / T on E \ T: rk(A) = rk(A u T) - rk(T), m(A) = m(A u T).
/// Remaining elements are renumbered in ascending order.
inline ArithmeticMatroid contraction(const ArithmeticMatroid& mat, Subset t) {
  if (!t.within(mat.size())) throw input_error("contraction set " + t.to_string() + " outside the ground set");
  const auto remaining = (mat.ground_set() - t).elements();
  const std::size_t k = remaining.size(), n = std::size_t{1} << k;
  std::vector<int> rk(n);
  std::vector<Integer> m(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Subset full = detail::lift(Subset(static_cast<std::uint32_t>(s)), remaining) | t;
    rk[s] = mat.rk(full) - mat.rk(t);
    m[s] = mat.m(full);
  }
  return {k, std::move(rk), std::move(m)};
}

/// M \ T: both tables restricted to subsets of E \ T.
inline ArithmeticMatroid deletion(const ArithmeticMatroid& mat, Subset t) {
  if (!t.within(mat.size())) throw input_error("deletion set " + t.to_string() + " outside the ground set");
  const auto remaining = (mat.ground_set() - t).elements();
  const std::size_t k = remaining.size(), n = std::size_t{1} << k;
  std::vector<int> rk(n);
  std::vector<Integer> m(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Subset full = detail::lift(Subset(static_cast<std::uint32_t>(s)), remaining);
    rk[s] = mat.rk(full);
    m[s] = mat.m(full);
  }
  return {k, std::move(rk), std::move(m)};
}

// ---------------------------------------------------------------------------
// GCD property

struct GcdCheck {
  bool holds = true;
  std::optional<Subset> witness;
  Integer multiplicity;  // m(witness)
  Integer basis_gcd;     // gcd over maximal independent subsets of the witness
};

/// m(S) = gcd{ m(I) : I <= S, |I| = rk(I) = rk(S) } for every S; reports
/// the first S (in bitmask order) where it fails.
inline GcdCheck gcd_property(const ArithmeticMatroid& mat) {
  for (std::size_t sb = 0; sb < mat.table_size(); ++sb) {
    const Subset s(static_cast<std::uint32_t>(sb));
    const int r = mat.rk(s);
    Integer g = 0;
    for_each_subset_of(s, [&](Subset i) {
      if (static_cast<int>(i.size()) == r && mat.rk(i) == r) g = gcd(g, mat.m(i));
    });
    if (g != mat.m(s)) return {false, s, mat.m(s), g};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Polynomials

namespace detail {

inline Integer binomial(std::size_t n, std::size_t k) {
  Integer r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace detail

/// T(x, y) = sum_S m(S) (x-1)^(rk E - rk S) (y-1)^(|S| - rk S).
inline BiPoly tutte(const ArithmeticMatroid& mat) {
  // Aggregate m(S) by exponent pair before expanding the binomials.
  std::map<BiPoly::Exponents, Integer> shifted;
  const int r = mat.rank();
  for (std::size_t sb = 0; sb < mat.table_size(); ++sb) {
    const Subset s(static_cast<std::uint32_t>(sb));
    const auto a = static_cast<std::size_t>(r - mat.rk(s));
    const auto b = static_cast<std::size_t>(static_cast<int>(s.size()) - mat.rk(s));
    shifted[{a, b}] += mat.m(s);
  }
  BiPoly out;
  for (const auto& [e, c] : shifted) {
    const auto [a, b] = e;
    for (std::size_t i = 0; i <= a; ++i)
      for (std::size_t j = 0; j <= b; ++j) {
        Integer term = c * detail::binomial(a, i) * detail::binomial(b, j);
        if ((a - i + b - j) % 2) term = -term;
        out.add_term(i, j, term);
      }
  }
  return out;
}

/// chi(t) = (-1)^r T(1 - t, 0) with r = rk(E).
inline Polynomial char_poly(const ArithmeticMatroid& mat) {
  const Polynomial one_minus_t({1, -1});
  Polynomial chi = tutte(mat).compose(one_minus_t, Polynomial{});
  return mat.rank() % 2 == 0 ? chi : Integer(-1) * chi;
}

/// Euler characteristic of the complement of an arrangement in E^n whose
/// matroid is `mat`. Non-essential arrangements (rk E < n) have complement
/// fibred with elliptic-curve factors, hence Euler characteristic 0.
inline Integer euler_characteristic(const ArithmeticMatroid& mat, std::size_t ambient_n, bool essential) {
  if (!essential) return 0;
  if (static_cast<std::size_t>(mat.rank()) != ambient_n)
    throw input_error("essential arrangement must have rank equal to the ambient dimension");
  const Integer t10 = tutte(mat)(1, 0);
  return mat.rank() % 2 == 0 ? t10 : Integer(-t10);
}

/// Bigraded Poincare polynomial of the E_2 page in (t, s):
/// sum_i (-1)^i chi_i (1+t)^(2(r-i)) s^i where chi(q) = sum_i chi_i q^(r-i).
/// Requires an essential arrangement (rk E = ambient_n).
inline BiPoly e2_poincare(const ArithmeticMatroid& mat, std::size_t ambient_n) {
  const auto r = static_cast<std::size_t>(mat.rank());
  if (r != ambient_n) throw input_error("E2 Poincare polynomial needs an essential arrangement");
  const Polynomial chi = char_poly(mat);
  BiPoly out;
  for (std::size_t i = 0; i <= r; ++i) {
    Integer ci = chi.coeff(r - i);
    if (i % 2) ci = -ci;
    const std::size_t e = 2 * (r - i);
    for (std::size_t p = 0; p <= e; ++p) out.add_term(p, i, ci * detail::binomial(e, p));
  }
  return out;
}

}  // namespace ellarr
