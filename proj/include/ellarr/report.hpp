#pragma once

// Text and JSON renderings of arrangement data. Field order is fixed so
// reports can be diffed against golden files.

#include "ellarr/arrangement.hpp"
#include "ellarr/matroid.hpp"
#include "ellarr/polynomial.hpp"
#include "ellarr/quadratic_order.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace ellarr::report {

using Json = nlohmann::ordered_json;

inline Json integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json subset(Subset s) {
  Json idx = Json::array();
  for (std::size_t e : s.elements()) idx.push_back(e + 1);
  return idx;
}

/// "2 | 4"; "-" for the trivial group.
inline std::string divisor_chain(const std::vector<Integer>& factors) {
  if (factors.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " | " : "") + factors[i].str();
  return s;
}

inline Json polynomial_terms(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.sorted_terms()) terms.push_back(Json::array({integer(c), e.first, e.second}));
  return terms;
}

inline Json polynomial_terms(const Polynomial& p) {
  Json terms = Json::array();
  for (std::size_t i = p.coeffs().size(); i-- > 0;)
    if (p.coeffs()[i] != 0) terms.push_back(Json::array({integer(p.coeffs()[i]), i}));
  return terms;
}

inline std::string tau_string(const CurveParams& c) {
  std::ostringstream os;
  os << "(" << c.a << " + " << c.b << "*w)/" << c.c;
  return os.str();
}

inline std::string omega_string(const FieldParams& f) {
  return f.half_integral() ? "(1 + sqrt(-" + f.m.str() + "))/2" : "sqrt(-" + f.m.str() + ")";
}

inline Json order_info(const CurveParams& c) {
  const IntQuadratic q = min_poly(c);
  Json j;
  j["m"] = integer(c.field.m);
  j["omega"] = omega_string(c.field);
  j["tau"] = Json{{"a", integer(c.a)}, {"b", integer(c.b)}, {"c", integer(c.c)}};
  j["trace_num"] = integer(c.trace_num);
  j["det_num"] = integer(c.det_num);
  j["g"] = integer(c.g);
  j["c_prime"] = integer(c.c_prime);
  j["delta_prime"] = integer(c.delta_prime);
  j["N"] = integer(c.N);
  j["conductor"] = integer(c.conductor);
  j["min_poly"] = Json::array({integer(q.lead), integer(q.lin), integer(q.constant)});
  j["discriminant"] = integer(q.discriminant());
  return j;
}

inline std::string order_info_text(const CurveParams& c) {
  const IntQuadratic q = min_poly(c);
  std::ostringstream os;
  os << "field            K = Q(sqrt(-" << c.field.m << ")), omega = " << omega_string(c.field) << "\n"
     << "tau              " << tau_string(c) << "\n"
     << "c*trace(tau)     " << c.trace_num << "\n"
     << "c^2*det(tau)     " << c.det_num << "\n"
     << "N                " << c.N << "\n"
     << "order            R = <1, " << c.N << "*tau>\n"
     << "conductor        " << c.conductor << (c.maximal_order() ? " (maximal order)" : "") << "\n"
     << "min poly         " << to_string(q) << "\n"
     << "discriminant     " << q.discriminant() << "\n";
  return os.str();
}

inline Json subset_row(const SubsetReport& r) {
  Json j;
  j["bitmask"] = r.subset.bits();
  j["subset"] = subset(r.subset);
  j["rank"] = r.rank;
  j["multiplicity"] = integer(r.multiplicity);
  j["layer_dim"] = r.layer_dim;
  Json tor = Json::array();
  for (const auto& d : r.torsion_invariants) tor.push_back(integer(d));
  j["torsion_invariants"] = tor;
  return j;
}

/// Renders rows of cells as left-aligned columns separated by two spaces.
inline std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string subset_table_text(const std::vector<SubsetReport>& rows) {
  std::vector<std::vector<std::string>> cells{{"subset", "rank", "mult", "layer_dim", "torsion"}};
  for (const auto& r : rows)
    cells.push_back({r.subset.to_string(), std::to_string(r.rank), r.multiplicity.str(),
                     std::to_string(r.layer_dim), divisor_chain(r.torsion_invariants)});
  return aligned(cells);
}

inline Json matroid_tables(const ArithmeticMatroid& mat) {
  Json rows = Json::array();
  for (std::size_t s = 0; s < mat.table_size(); ++s) {
    const Subset x(static_cast<std::uint32_t>(s));
    rows.push_back(Json{{"bitmask", x.bits()}, {"subset", subset(x)}, {"rank", mat.rk(x)},
                        {"multiplicity", integer(mat.m(x))}});
  }
  return rows;
}

inline std::string matroid_tables_text(const ArithmeticMatroid& mat) {
  std::vector<std::vector<std::string>> cells{{"subset", "rank", "mult"}};
  for (std::size_t s = 0; s < mat.table_size(); ++s) {
    const Subset x(static_cast<std::uint32_t>(s));
    cells.push_back({x.to_string(), std::to_string(mat.rk(x)), mat.m(x).str()});
  }
  return aligned(cells);
}

inline Json axiom_report(const AxiomReport& r) {
  Json v = Json::array();
  for (const auto& w : r.violations)
    v.push_back(Json{{"first", subset(w.first)}, {"second", subset(w.second)}, {"detail", w.detail}});
  return Json{{"axiom", r.axiom}, {"passed", r.passed()}, {"violations", v}};
}

inline std::string axiom_report_text(const AxiomReport& r, std::size_t max_listed = 10) {
  std::string s = r.axiom + std::string(r.axiom.size() < 14 ? 14 - r.axiom.size() : 1, ' ') +
                  (r.passed() ? "PASS" : "FAIL (" + std::to_string(r.violations.size()) + " violations)") + "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < max_listed; ++i) {
    const auto& w = r.violations[i];
    s += "    " + w.first.to_string() + " " + w.second.to_string() + ": " + w.detail + "\n";
  }
  if (r.violations.size() > max_listed) s += "    ...\n";
  return s;
}

inline Json gcd_report(const GcdCheck& g) {
  Json j;
  j["holds"] = g.holds;
  if (g.witness) {
    j["witness"] = subset(*g.witness);
    j["witness_bitmask"] = g.witness->bits();
    j["multiplicity"] = integer(g.multiplicity);
    j["basis_gcd"] = integer(g.basis_gcd);
  }
  return j;
}

inline std::string gcd_report_text(const GcdCheck& g) {
  if (g.holds) return "GCD property: PASS\n";
  return "GCD property: FAIL\nwitness " + g.witness->to_string() + ": m = " + g.multiplicity.str() +
         ", gcd over maximal independent subsets = " + g.basis_gcd.str() + "\n";
}

}  // namespace ellarr::report
