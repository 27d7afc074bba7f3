#pragma once

#include "ellarr/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ellarr {

/// Univariate polynomial with integer coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Integer c) { return Polynomial({std::move(c)}); }
  static Polynomial variable() { return Polynomial({0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer operator()(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Integer> out(l.coeffs_.size() + r.coeffs_.size() - 1);
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Integer& s, const Polynomial& p) { return Polynomial::constant(s) * p; }

  Polynomial pow(std::size_t e) const {
    Polynomial out = constant(1);
    for (std::size_t i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// "t - 6" style, highest degree first.
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;
};

/// Bivariate integer polynomial sum c_{ij} x^i y^j; only nonzero terms are stored.
class BiPoly {
 public:
  using Exponents = std::pair<std::size_t, std::size_t>;

  void add_term(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coeff(std::size_t i, std::size_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Integer(0) : it->second;
  }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer operator()(const Integer& x, const Integer& y) const {
    Integer acc = 0;
    for (const auto& [e, c] : terms_) acc += c * boost::multiprecision::pow(x, static_cast<unsigned>(e.first)) *
                                         boost::multiprecision::pow(y, static_cast<unsigned>(e.second));
    return acc;
  }

  /// Substitutes univariate polynomials for both variables.
  Polynomial compose(const Polynomial& px, const Polynomial& py) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out += c * (px.pow(e.first) * py.pow(e.second));
    return out;
  }

  /// Sorted term list "c x^i y^j + ...", highest total degree first, then
  /// higher x-degree first. "0" for the zero polynomial.
  std::string to_term_list(const std::string& xv = "x", const std::string& yv = "y") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : sorted_terms()) {
      if (!s.empty()) s += " + ";
      s += ellarr::to_string(c) + " " + xv + "^" + std::to_string(e.first) + " " + yv + "^" +
           std::to_string(e.second);
    }
    return s;
  }

  /// Human-readable form, e.g. "x + 2*y + 5".
  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : sorted_terms()) {
      Integer mag = abs(c);
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      std::string mono;
      auto power = [](const std::string& v, std::size_t p) {
        return p == 1 ? v : v + "^" + std::to_string(p);
      };
      if (e.first) mono += power(xv, e.first);
      if (e.second) mono += (mono.empty() ? "" : "*") + power(yv, e.second);
      if (mono.empty())
        s += ellarr::to_string(mag);
      else if (mag == 1)
        s += mono;
      else
        s += ellarr::to_string(mag) + "*" + mono;
    }
    return s;
  }

  /// (coeff, i, j) triples in to_term_list order.
  std::vector<std::pair<Exponents, Integer>> sorted_terms() const {
    std::vector<std::pair<Exponents, Integer>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
      const auto dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
      if (dl != dr) return dl > dr;
      return l.first.first > r.first.first;
    });
    return v;
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::map<Exponents, Integer> terms_;
};

inline std::string Polynomial::to_string(const std::string& var) const {
  BiPoly as_bi;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) as_bi.add_term(i, 0, coeffs_[i]);
  return as_bi.to_string(var, "_");
}

}  // namespace ellarr
