#pragma once

// Command-line driver. Exit codes: 0 success, 1 verification failure,
// 2 input error.

#include "ellarr/arrangement.hpp"
#include "ellarr/io.hpp"
#include "ellarr/matroid.hpp"
#include "ellarr/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ellarr::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, bad_input = 2 };

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"rank", "a1", "a2", "p", "p1", "p2", "p-equiv", "dual", "coker-xcheck"};
  return names;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline CurveParams curve_from_flags(const std::string& m, const std::string& tau) {
  const auto parts = split_list(tau);
  if (parts.size() != 3) throw input_error("--tau", "expected a,b,c");
  auto num = [](const std::string& s, const std::string& what) {
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() <= start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw input_error(what, "not an integer: '" + s + "'");
    return Integer(s);
  };
  return make_curve(make_field(num(m, "--m")), num(parts[0], "--tau"), num(parts[1], "--tau"),
                    num(parts[2], "--tau"));
}

/// Checks every subset's torsion invariants along the lattice expansion, the
/// order expansion and the conjugate transpose.
inline AxiomReport cokernel_cross_check(const EllipticArrangement& arr) {
  AxiomReport rep{"coker-xcheck", {}};
  for (std::size_t sb = 0; sb < (std::size_t{1} << arr.size()); ++sb) {
    const Subset s(static_cast<std::uint32_t>(sb));
    const RingMatrix sub = row_select(arr.matrix(), s);
    const auto lambda = smith_form(expand_lambda(sub)).torsion_factors();
    const auto order = smith_form(expand_order(sub)).torsion_factors();
    const auto herm = smith_form(expand_lambda(conj_transpose(sub))).torsion_factors();
    if (lambda != order)
      rep.violations.push_back({s, s, "lattice " + report::divisor_chain(lambda) + " vs order " +
                                          report::divisor_chain(order)});
    if (lambda != herm)
      rep.violations.push_back({s, s, "A " + report::divisor_chain(lambda) + " vs A^H " +
                                          report::divisor_chain(herm)});
  }
  return rep;
}

/// dual(M_A) against the contraction of the stacked arrangement's matroid by T.
inline AxiomReport dual_cross_check(const EllipticArrangement& arr, const ArithmeticMatroid& mat) {
  AxiomReport rep{"dual", {}};
  const DualArrangement d = dual_arrangement(arr);
  const ArithmeticMatroid contracted = contraction(from_arrangement(d.stacked), d.contraction_set);
  const ArithmeticMatroid expected = dual(mat);
  for (std::size_t sb = 0; sb < expected.table_size(); ++sb) {
    const Subset s(static_cast<std::uint32_t>(sb));
    if (expected.rk(s) != contracted.rk(s) || expected.m(s) != contracted.m(s))
      rep.violations.push_back({s, s, "dual (rk, m) = (" + std::to_string(expected.rk(s)) + ", " +
                                          expected.m(s).str() + ") but M_B/T gives (" +
                                          std::to_string(contracted.rk(s)) + ", " + contracted.m(s).str() + ")"});
  }
  return rep;
}

inline std::vector<AxiomReport> run_checks(const EllipticArrangement& arr, const std::vector<std::string>& checks) {
  const ArithmeticMatroid mat = from_arrangement(arr);
  std::vector<AxiomReport> out;
  for (const auto& c : checks) {
    if (c == "rank") out.push_back(verify_matroid(mat));
    else if (c == "a1") out.push_back(verify_A1(mat));
    else if (c == "a2") out.push_back(verify_A2(mat));
    else if (c == "p") out.push_back(verify_P(mat));
    else if (c == "p1") out.push_back(verify_P1(mat));
    else if (c == "p2") out.push_back(verify_P2(mat));
    else if (c == "p-equiv") out.push_back(verify_P_equivalence(mat));
    else if (c == "dual") out.push_back(dual_cross_check(arr, mat));
    else if (c == "coker-xcheck") out.push_back(cokernel_cross_check(arr));
    else throw input_error("--axioms", "unknown check '" + c + "'");
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw input_error(path, "cannot open for writing");
  f << contents;
  if (!f) throw input_error(path, "write failed");
}

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic matroids of elliptic arrangements over CM curves", "ellarr"};
  app.require_subcommand(1);

  std::string file, axioms, emit, out_path, m_flag, tau_flag;
  bool json = false;
  std::size_t k = 0, n = 0;
  std::int64_t bound = 1;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "Per-subset rank, multiplicity, layer dimension and torsion");
  analyze->add_option("FILE", file, "Arrangement file")->required();
  analyze->add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Check the arithmetic matroid axioms");
  verify->add_option("FILE", file, "Arrangement file")->required();
  verify->add_option("--axioms", axioms, "Comma-separated checks: rank,a1,a2,p,p1,p2,p-equiv,dual,coker-xcheck");
  verify->add_flag("--json", json, "Machine-readable output");

  auto* tutte_cmd = app.add_subcommand("tutte", "Arithmetic Tutte and characteristic polynomials");
  tutte_cmd->add_option("FILE", file, "Arrangement file")->required();
  tutte_cmd->add_flag("--json", json, "Machine-readable output");

  auto* euler = app.add_subcommand("euler", "Euler characteristic of the complement");
  euler->add_option("FILE", file, "Arrangement file")->required();
  euler->add_flag("--json", json, "Machine-readable output");

  auto* gcd_cmd = app.add_subcommand("gcd-check", "Test the GCD property of the multiplicity function");
  gcd_cmd->add_option("FILE", file, "Arrangement file")->required();
  gcd_cmd->add_flag("--json", json, "Machine-readable output");

  auto* dual_cmd = app.add_subcommand("dual", "Dual arithmetic matroid and its realizing stacked arrangement");
  dual_cmd->add_option("FILE", file, "Arrangement file")->required();
  dual_cmd->add_option("--emit-arrangement", emit, "Write the stacked arrangement to this file");
  dual_cmd->add_flag("--json", json, "Machine-readable output");

  auto* order = app.add_subcommand("order-info", "Constants of the order R = <1, N tau>");
  order->add_option("--m", m_flag, "Square-free m > 0")->required();
  order->add_option("--tau", tau_flag, "a,b,c with tau = (a + b*omega)/c")->required();
  order->add_flag("--json", json, "Machine-readable output");

  auto* random = app.add_subcommand("random", "Seeded random arrangement file");
  random->add_option("--k", k, "Number of divisors")->required();
  random->add_option("--n", n, "Ambient dimension")->required();
  random->add_option("--m", m_flag, "Square-free m > 0")->required();
  random->add_option("--tau", tau_flag, "a,b,c with tau = (a + b*omega)/c")->required();
  random->add_option("--bound", bound, "Coordinates drawn from [-B, B]")->required();
  random->add_option("--seed", seed, "RNG seed")->required();
  random->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }

  try {
    if (order->parsed()) {
      const CurveParams c = curve_from_flags(m_flag, tau_flag);
      out << (json ? report::order_info(c).dump(2) + "\n" : report::order_info_text(c));
      return ok;
    }
    if (random->parsed()) {
      if (bound < 0) throw input_error("--bound", "must be non-negative");
      if (k > Subset::max_width) throw input_error("--k", "at most 32 divisors");
      const CurveParams c = curve_from_flags(m_flag, tau_flag);
      const std::string text = serialize_arrangement(random_matrix(c, k, n, bound, seed));
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      return ok;
    }

    const EllipticArrangement arr = read_arrangement_file(file);

    if (analyze->parsed()) {
      std::vector<SubsetReport> rows;
      for (std::size_t s = 0; s < (std::size_t{1} << arr.size()); ++s)
        rows.push_back(arr.report(Subset(static_cast<std::uint32_t>(s))));
      if (json) {
        report::Json j;
        j["order"] = report::order_info(arr.curve());
        j["k"] = arr.size();
        j["n"] = arr.ambient_dim();
        j["essential"] = arr.is_essential();
        report::Json table = report::Json::array();
        for (const auto& r : rows) table.push_back(report::subset_row(r));
        j["subsets"] = table;
        out << j.dump(2) << "\n";
      } else {
        out << "k = " << arr.size() << " divisors in E^" << arr.ambient_dim() << ", N = " << arr.curve().N
            << ", conductor = " << arr.curve().conductor << "\n\n"
            << report::subset_table_text(rows);
      }
      return ok;
    }

    if (verify->parsed()) {
      std::vector<std::string> checks = axioms.empty() ? known_checks() : split_list(axioms);
      const auto reports = run_checks(arr, checks);
      const bool all = std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.passed(); });
      if (json) {
        report::Json j;
        j["passed"] = all;
        report::Json list = report::Json::array();
        for (const auto& r : reports) list.push_back(report::axiom_report(r));
        j["checks"] = list;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& r : reports) out << report::axiom_report_text(r);
        out << (all ? "all checks passed\n" : "verification FAILED\n");
      }
      return all ? ok : verification_failed;
    }

    const ArithmeticMatroid mat = from_arrangement(arr);

    if (tutte_cmd->parsed()) {
      const BiPoly t = tutte(mat);
      const Polynomial chi = char_poly(mat);
      if (json) {
        report::Json j;
        j["tutte"] = report::polynomial_terms(t);
        j["char_poly"] = report::polynomial_terms(chi);
        out << j.dump(2) << "\n";
      } else {
        out << "T(x, y) = " << t.to_string() << "\n"
            << "terms    " << t.to_term_list() << "\n"
            << "chi(t)   = " << chi.to_string() << "\n";
      }
      return ok;
    }

    if (euler->parsed()) {
      const bool essential = arr.is_essential();
      const Integer e = euler_characteristic(mat, arr.ambient_dim(), essential);
      if (json) {
        report::Json j;
        j["euler_characteristic"] = report::integer(e);
        j["essential"] = essential;
        j["rank"] = mat.rank();
        j["n"] = arr.ambient_dim();
        if (essential) j["e2_poincare"] = report::polynomial_terms(e2_poincare(mat, arr.ambient_dim()));
        out << j.dump(2) << "\n";
      } else {
        out << e;
        if (!essential)
          out << "  (not essential: rank " << mat.rank() << " < n = " << arr.ambient_dim() << ")";
        out << "\n";
        if (essential) out << "E2 Poincare: " << e2_poincare(mat, arr.ambient_dim()).to_string("t", "s") << "\n";
      }
      return ok;
    }

    if (gcd_cmd->parsed()) {
      const GcdCheck g = gcd_property(mat);
      out << (json ? report::gcd_report(g).dump(2) + "\n" : report::gcd_report_text(g));
      return ok;
    }

    if (dual_cmd->parsed()) {
      const ArithmeticMatroid d = dual(mat);
      const DualArrangement realization = dual_arrangement(arr);
      const std::string stacked = serialize_arrangement(realization.stacked);
      if (!emit.empty()) write_file(emit, stacked);
      if (json) {
        report::Json j;
        j["dual"] = report::matroid_tables(d);
        j["contraction_set"] = report::subset(realization.contraction_set);
        j["stacked_arrangement"] = report::Json::parse(stacked);
        out << j.dump(2) << "\n";
      } else {
        out << "dual matroid\n"
            << report::matroid_tables_text(d) << "\nrealized as M_B / T with T = "
            << realization.contraction_set.to_string() << "\n";
        if (emit.empty()) out << "\n" << stacked;
      }
      return ok;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ellarr::cli
