// Acceptance run: one PASS/FAIL line per criterion, exit status nonzero on any
// unexpected failure.
#include "ellarr/cli.hpp"
#include "ellarr/io.hpp"
#include "ellarr/matroid.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace ellarr;

namespace {

std::string fixture(const std::string& name) { return std::string(ELLARR_FIXTURE_DIR) + "/" + name; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

// Criterion 8 cannot hold as stated; see README.
const std::set<int> known_failures{8};

bool in_n(const CurveParams& c, std::initializer_list<long> allowed) {
  for (long v : allowed)
    if (c.N == v) return true;
  return false;
}

const std::vector<oracle::CorpusItem>& cokernel_corpus() {
  static const auto items =
      oracle::corpus(500, 4, 4, 5, 20240601, [](const CurveParams& c) { return in_n(c, {1, 4, 9}); });
  return items;
}

const std::vector<oracle::CorpusItem>& axiom_corpus() {
  static const auto items = oracle::corpus(200, 5, 4, 5, 20240602);
  return items;
}

nlohmann::json cli_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != cli::ok) throw std::runtime_error("cli failed: " + err.str());
  return nlohmann::json::parse(out.str());
}

Outcome two_divisors() {
  const auto t0 = Clock::now();
  const auto sq = read_arrangement_file(fixture("two_divisors_sqrt3.json"));
  const auto om = read_arrangement_file(fixture("two_divisors_omega.json"));
  const auto g_sq = cli_json({"gcd-check", fixture("two_divisors_sqrt3.json"), "--json"});
  const auto g_om = cli_json({"gcd-check", fixture("two_divisors_omega.json"), "--json"});
  const double dt = seconds_since(t0);

  const bool sq_ok = sq.multiplicity(Subset{}) == 1 && sq.multiplicity(Subset{0}) == 4 &&
                     sq.multiplicity(Subset{1}) == 4 && sq.multiplicity(Subset{0, 1}) == 2;
  const bool om_ok = om.multiplicity(Subset{0}) == 4 && om.multiplicity(Subset{1}) == 4 && om.multiplicity(Subset{0, 1}) == 4;
  const bool gcd_ok = g_sq.at("holds") == false && g_sq.at("witness") == nlohmann::json::array({1, 2}) &&
                      g_om.at("holds") == true;
  std::ostringstream d;
  d << "m over Z[sqrt(-3)] = (" << sq.multiplicity(Subset{}) << "," << sq.multiplicity(Subset{0}) << ","
    << sq.multiplicity(Subset{1}) << "," << sq.multiplicity(Subset{0, 1}) << "), gcd-check "
    << (g_sq.at("holds") == true ? "PASS" : "FAIL " + g_sq.value("witness", nlohmann::json()).dump())
    << "; over Z[omega] m({1,2}) = " << om.multiplicity(Subset{0, 1}) << ", gcd-check "
    << (g_om.at("holds") == true ? "PASS" : "FAIL") << "; " << dt << " s";
  return {sq_ok && om_ok && gcd_ok && dt < 1.0, d.str()};
}

Outcome sequence_expansion() {
  const auto arr = read_arrangement_file(fixture("row_2_1plus_sqrt3.json"));
  const IntMatrix blocked = arr.expansion();
  const IntMatrix interleaved = blocked.select_cols({0, 2, 1, 3});
  const IntMatrix expected{{2, 0, 1, -3}, {0, 2, 1, 1}};
  const SmithForm s = smith_form(blocked);
  const bool ok = interleaved == expected && s.torsion_order() == 2 &&
                  s.invariant_factors == std::vector<Integer>{1, 2} && arr.curve().N == 1;
  std::ostringstream d;
  d << "interleaved expansion " << (interleaved == expected ? "matches" : "differs") << ", torsion order "
    << s.torsion_order() << ", factors (" << s.invariant_factors.at(0) << "," << s.invariant_factors.at(1) << ")";
  return {ok, d.str()};
}

Outcome n_computation() {
  const CurveParams sq = make_curve(make_field(3), -1, 2, 1);
  const CurveParams ih = make_curve(make_field(1), 0, 1, 2);
  const Integer bf_sq = oracle::brute_force_N(3, -1, 2, 1);
  const Integer bf_ih = oracle::brute_force_N(1, 0, 1, 2);
  std::ostringstream d;
  d << "sqrt(-3): N = " << sq.N << " (oracle " << bf_sq << "); i/2: N = " << ih.N << " (oracle " << bf_ih << ")";
  return {sq.N == 1 && bf_sq == 1 && ih.N == 4 && bf_ih == 4, d.str()};
}

Outcome cokernels_coincide() {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  for (const auto& item : cokernel_corpus())
    if (smith_form(expand_lambda(item.matrix)).torsion_factors() != smith_form(expand_order(item.matrix)).torsion_factors())
      ++bad;
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << cokernel_corpus().size() << " matrices, " << bad << " mismatches, " << dt << " s";
  return {bad == 0 && dt < 30.0, d.str()};
}

Outcome conjugate_transpose() {
  std::size_t bad = 0;
  for (const auto& item : cokernel_corpus())
    if (smith_form(expand_lambda(item.matrix)).torsion_factors() !=
        smith_form(expand_lambda(conj_transpose(item.matrix))).torsion_factors())
      ++bad;
  std::ostringstream d;
  d << cokernel_corpus().size() << " matrices, " << bad << " mismatches";
  return {bad == 0, d.str()};
}

Outcome axiom_suite() {
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  std::string first;
  for (const auto& item : axiom_corpus()) {
    const auto m = from_arrangement(EllipticArrangement(item.matrix));
    for (const AxiomReport& r : {verify_matroid(m), verify_A1(m), verify_A2(m), verify_P(m), verify_P1(m), verify_P2(m),
                                 verify_P_equivalence(m)}) {
      violations += r.violations.size();
      if (!r.passed() && first.empty()) first = r.axiom + ": " + r.violations.front().detail;
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << axiom_corpus().size() << " arrangements, " << violations << " violations";
  if (!first.empty()) d << " (first " << first << ")";
  d << ", " << dt << " s";
  return {violations == 0 && dt < 120.0, d.str()};
}

Outcome dual_contraction() {
  std::size_t bad = 0;
  for (const auto& item : axiom_corpus()) {
    const EllipticArrangement arr(item.matrix);
    const DualArrangement d = dual_arrangement(arr);
    if (contraction(from_arrangement(d.stacked), d.contraction_set) != dual(from_arrangement(arr))) ++bad;
  }
  std::ostringstream d;
  d << axiom_corpus().size() << " arrangements, " << bad << " mismatches";
  return {bad == 0, d.str()};
}

Outcome gcd_over_maximal_orders() {
  std::size_t tested = 0, bad = 0;
  std::string first;
  auto run = [&](const std::vector<oracle::CorpusItem>& items) {
    for (const auto& item : items) {
      if (item.curve.conductor != 1) continue;
      ++tested;
      const GcdCheck g = gcd_property(from_arrangement(EllipticArrangement(item.matrix)));
      if (g.holds) continue;
      ++bad;
      if (first.empty()) {
        std::ostringstream w;
        w << "m = " << item.curve.field.m << ", rows";
        for (std::size_t i = 0; i < item.matrix.rows(); ++i) {
          w << " (";
          for (std::size_t j = 0; j < item.matrix.cols(); ++j) w << (j ? " " : "") << item.matrix(i, j);
          w << ")";
        }
        w << ", witness " << g.witness->to_string() << ": m = " << g.multiplicity << " vs gcd " << g.basis_gcd;
        first = w.str();
      }
    }
  };
  run(cokernel_corpus());
  run(axiom_corpus());
  std::ostringstream d;
  d << tested << " conductor-1 arrangements, " << bad << " violations";
  if (!first.empty()) d << " (first: " << first << ")";
  return {bad == 0, d.str()};
}

// Points of E killed by some row, listed per row inside E[norm] = ((1/norm)Z)^2 / Z^2 in {1, tau}
// coordinates and merged as reduced fractions.
std::size_t union_point_count(const RingMatrix& a) {
  std::set<std::pair<oracle::Rational, oracle::Rational>> points;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const RingMatrix row = row_select(a, Subset::singleton(i));
    const IntMatrix m = expand_lambda(row);
    const long d = static_cast<long>(norm(a.curve(), row(0, 0)));
    for (long u = 0; u < d; ++u)
      for (long v = 0; v < d; ++v)
        if ((m(0, 0) * u + m(0, 1) * v) % d == 0 && (m(1, 0) * u + m(1, 1) * v) % d == 0)
          points.emplace(oracle::Rational(u, d), oracle::Rational(v, d));
  }
  return points.size();
}

Outcome euler_characteristic_check() {
  const auto arr = read_arrangement_file(fixture("two_divisors_sqrt3.json"));
  const auto m = from_arrangement(arr);
  const Integer e = euler_characteristic(m, arr.ambient_dim(), arr.is_essential());
  const Integer t10 = -tutte(m)(1, 0);
  const Integer chi0 = char_poly(m)(0);
  const Integer points = m.m(Subset{0}) + m.m(Subset{1}) - m.m(Subset{0, 1});
  const Integer direct = union_point_count(arr.matrix());
  bool ok = e == -6 && t10 == -6 && chi0 == -6 && points == 6 && direct == 6;

  SeededSampler rng(20240609);
  const auto& curves = oracle::corpus_curves();
  std::size_t tested = 0, bad = 0;
  while (tested < 50) {
    const CurveParams c = oracle::make(curves[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(curves.size()) - 1))]);
    const auto k = static_cast<std::size_t>(rng.uniform(1, 4));
    const RingMatrix a = random_matrix(c, k, 1, 3, rng);
    bool loop_free = true;
    for (std::size_t i = 0; i < k; ++i) loop_free = loop_free && !a(i, 0).is_zero();
    if (!loop_free) continue;
    const EllipticArrangement sample(a);
    const auto sm = from_arrangement(sample);
    Integer union_size = 0;
    for (std::size_t sb = 1; sb < sm.table_size(); ++sb) {
      const Subset s(static_cast<std::uint32_t>(sb));
      union_size += (s.size() % 2 == 1 ? 1 : -1) * sm.m(s);
    }
    const Integer euler = euler_characteristic(sm, 1, sample.is_essential());
    if (!sample.is_essential() || euler != -union_size || union_size != union_point_count(a)) ++bad;
    ++tested;
  }
  ok = ok && bad == 0;
  std::ostringstream d;
  d << "fixture: euler " << e << ", -T(1,0) " << t10 << ", chi(0) " << chi0 << ", points " << points << " (direct count "
    << direct << "); " << tested << " n = 1 arrangements, " << bad << " mismatches";
  return {ok, d.str()};
}

Outcome determinantal_divisors() {
  std::size_t checked = 0, bad = 0;
  auto check = [&](const IntMatrix& x) {
    if (std::min(x.rows(), x.cols()) > 4) return;
    ++checked;
    if (torsion_order(x) != oracle::minor_gcd(x).divisor) ++bad;
  };
  for (const auto* items : {&cokernel_corpus(), &axiom_corpus()})
    for (const auto& item : *items) {
      const EllipticArrangement arr(item.matrix);
      for (std::size_t sb = 0; sb < (std::size_t{1} << arr.size()); ++sb) {
        const Subset s(static_cast<std::uint32_t>(sb));
        check(arr.expansion_of(s));
        check(expand_order(row_select(item.matrix, s)));
      }
    }
  std::ostringstream d;
  d << checked << " matrices, " << bad << " mismatches";
  return {bad == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example multiplicities and gcd-check", two_divisors},
      {"sequence expansion and Smith form", sequence_expansion},
      {"N for sqrt(-3) and i/2", n_computation},
      {"lattice vs order cokernels", cokernels_coincide},
      {"A vs conjugate transpose cokernels", conjugate_transpose},
      {"arithmetic matroid axioms", axiom_suite},
      {"dual equals contraction of stacked arrangement", dual_contraction},
      {"GCD property over maximal orders", gcd_over_maximal_orders},
      {"Euler characteristic", euler_characteristic_check},
      {"torsion order vs minor gcd", determinantal_divisors},
  };

  int unexpected = 0, known = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << criteria[i].first << ": " << o.detail;
    if (!o.pass && known_failures.count(id)) std::cout << "  (known failure, see README)";
    std::cout << std::endl;
    if (!o.pass) ++(known_failures.count(id) ? known : unexpected);
  }
  std::cout << criteria.size() - static_cast<std::size_t>(unexpected + known) << "/" << criteria.size() << " passed";
  if (known) std::cout << ", " << known << " known failure";
  std::cout << "\n";
  return unexpected == 0 ? 0 : 1;
}
