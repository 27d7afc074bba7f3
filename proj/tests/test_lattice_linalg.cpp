#include "ellarr/int_matrix.hpp"
#include "ellarr/ring_matrix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ellarr;

namespace {

CurveParams sqrt_minus_3() { return make_curve(make_field(3), -1, 2, 1); }
CurveParams i_half() { return make_curve(make_field(1), 0, 1, 2); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Random unimodular row or column operation.
void scramble(IntMatrix& a, SeededSampler& rng) {
  const bool rows = rng.uniform(0, 1) == 0;
  const std::size_t dim = rows ? a.rows() : a.cols();
  if (dim < 2) return;
  const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dim) - 1));
  auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dim) - 2));
  if (j >= i) ++j;
  switch (rng.uniform(0, 2)) {
    case 0:
      rows ? a.swap_rows(i, j) : a.swap_cols(i, j);
      break;
    case 1: {
      const Integer f = rng.uniform(-3, 3);
      rows ? a.add_row_multiple(i, j, f) : a.add_col_multiple(i, j, f);
      break;
    }
    default:
      // negate a line
      if (rows)
        a.add_row_multiple(i, i, -2);
      else
        a.add_col_multiple(i, i, -2);
  }
}

}  // namespace

TEST(SmithForm, Basics) {
  EXPECT_EQ(smith_form(IntMatrix::identity(2)), (SmithForm{2, ints({1, 1})}));
  EXPECT_EQ(smith_form(IntMatrix{{2, 0, 1, -3}, {0, 2, 1, 1}}), (SmithForm{2, ints({1, 2})}));
  EXPECT_EQ(smith_form(IntMatrix{{2, 0}, {0, 0}}), (SmithForm{1, ints({2})}));
  EXPECT_EQ(smith_form(IntMatrix(3, 2)), (SmithForm{0, {}}));
  EXPECT_EQ(smith_form(IntMatrix(0, 4)), (SmithForm{0, {}}));
  EXPECT_EQ(smith_form(IntMatrix{{2, 0}, {0, 3}}), (SmithForm{2, ints({1, 6})}));
  EXPECT_EQ(smith_form(IntMatrix{{4, 0}, {0, 6}}), (SmithForm{2, ints({2, 12})}));
}

TEST(SmithForm, HandlesLargeEntries) {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("1000000000000000000000000000007");
  a(1, 1) = Integer("1000000000000000000000000000007") * 6;
  a(0, 1) = 3;
  const SmithForm s = smith_form(a);
  EXPECT_EQ(s.rank, 2u);
  EXPECT_EQ(s.torsion_order(), abs(oracle::laplace_det(a)));
}

TEST(TorsionOrder, Examples) {
  EXPECT_EQ(torsion_order(IntMatrix{{2, 0, 1, -3}, {0, 2, 1, 1}}), 2);
  EXPECT_EQ(torsion_order(IntMatrix(3, 3)), 1);
  EXPECT_EQ(torsion_order(IntMatrix{{1, -3}, {1, 1}}), 4);
}

TEST(SmithForm, DivisibilityChainAndDeterminantalDivisors) {
  SeededSampler rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, 4));
    const auto c = static_cast<std::size_t>(rng.uniform(0, 5));
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = rng.uniform(0, 3) == 0 ? 0 : rng.uniform(-6, 6);
    const SmithForm s = smith_form(a);
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
      EXPECT_EQ(s.invariant_factors[i + 1] % s.invariant_factors[i], 0);
    for (const auto& d : s.invariant_factors) EXPECT_GE(d, 1);
    const auto dd = oracle::minor_gcd(a);
    EXPECT_EQ(s.rank, dd.rank) << a;
    EXPECT_EQ(s.torsion_order(), dd.divisor) << a;
  }
}

TEST(SmithForm, InvariantUnderUnimodularOperations) {
  SeededSampler rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) a(i, j) = rng.uniform(-4, 4);
    const SmithForm ref = smith_form(a);
    for (int seq = 0; seq < 50; ++seq) {
      IntMatrix b = a;
      for (int step = 0; step < 8; ++step) scramble(b, rng);
      EXPECT_EQ(smith_form(b), ref);
    }
  }
}

TEST(ExpandLambda, InterleavedColumnsMatchHandExpansion) {
  const CurveParams c = sqrt_minus_3();
  const RingMatrix a(c, {{RingElement{2}, RingElement{1, 1}}});
  const IntMatrix blocked = expand_lambda(a);
  EXPECT_EQ(blocked, (IntMatrix{{2, 1, 0, -3}, {0, 1, 2, 1}}));
  // interleave columns (e1, tau e1, e2, tau e2)
  EXPECT_EQ(blocked.select_cols({0, 2, 1, 3}), (IntMatrix{{2, 0, 1, -3}, {0, 2, 1, 1}}));
  EXPECT_EQ(smith_form(blocked), (SmithForm{2, ints({1, 2})}));
}

TEST(ExpandLambda, ZeroAndScalarMatrices) {
  const CurveParams c = i_half();
  EXPECT_EQ(expand_lambda(RingMatrix(c, 2, 3)), IntMatrix(4, 6));
  // 2i * 1 = 4 tau and 2i * tau = -1; determinant 4 = |2i|^2
  EXPECT_EQ(expand_lambda(RingMatrix(c, {{RingElement{0, 1}}})), (IntMatrix{{0, -1}, {4, 0}}));
  EXPECT_EQ(expand_order(RingMatrix(c, {{RingElement{0, 1}}})), (IntMatrix{{0, -4}, {1, 0}}));
  EXPECT_EQ(expand_order(RingMatrix(c, {{RingElement{2}}})), (IntMatrix{{2, 0}, {0, 2}}));
  EXPECT_EQ(torsion_order(expand_lambda(RingMatrix(sqrt_minus_3(), {{RingElement{1, 1}}}))), 4);
}

TEST(ExpandOrder, CoincidesWithLambdaWhenNIsOne) {
  SeededSampler rng(3);
  for (const auto& cc : oracle::corpus_curves()) {
    const CurveParams c = oracle::make(cc);
    if (c.N != 1) continue;
    const RingMatrix a = random_matrix(c, 3, 2, 5, rng);
    EXPECT_EQ(expand_lambda(a), expand_order(a));
  }
}

TEST(ExpandLambda, ColumnsAreImagesOfLatticeBasis) {
  // Column for e_j (resp. tau*e_j) must be A e_j (resp. A tau e_j) in {1, tau} coordinates.
  SeededSampler rng(8);
  for (const auto& cc : oracle::corpus_curves()) {
    const CurveParams c = oracle::make(cc);
    const RingMatrix a = random_matrix(c, 2, 2, 4, rng);
    const IntMatrix e = expand_lambda(a);
    const auto tau = oracle::tau_in_field(c.field.m, c.a, c.b, c.c);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto alpha = oracle::to_field(c, a(i, j));
        const auto image_tau = oracle::mul(alpha, tau, c.field.m);
        auto coords = [&](std::size_t col) {
          return oracle::add({oracle::Rational(e(i, col)), 0},
                             oracle::mul({oracle::Rational(e(2 + i, col)), 0}, tau, c.field.m));
        };
        EXPECT_EQ(coords(j), alpha);
        EXPECT_EQ(coords(2 + j), image_tau);
      }
  }
}

TEST(ConjTranspose, ExamplesAndInvolution) {
  const CurveParams c = sqrt_minus_3();
  const RingMatrix col(c, {{RingElement{2}}, {RingElement{1, 1}}});
  EXPECT_EQ(conj_transpose(col), RingMatrix(c, {{RingElement{2}, RingElement{1, -1}}}));
  EXPECT_EQ(conj_transpose(RingMatrix::identity(c, 3)), RingMatrix::identity(c, 3));

  SeededSampler rng(41);
  for (const auto& cc : oracle::corpus_curves()) {
    const RingMatrix a = random_matrix(oracle::make(cc), 3, 3, 5, rng);
    EXPECT_EQ(conj_transpose(conj_transpose(a)), a);
  }
}

TEST(RowSelect, Examples) {
  const CurveParams c = sqrt_minus_3();
  const RingMatrix col(c, {{RingElement{2}}, {RingElement{1, 1}}});
  EXPECT_EQ(row_select(col, Subset{0, 1}), col);
  EXPECT_EQ(row_select(col, Subset{}).rows(), 0u);
  EXPECT_EQ(row_select(col, Subset{}).cols(), 1u);
  EXPECT_EQ(row_select(col, Subset{1}), RingMatrix(c, {{RingElement{1, 1}}}));
  EXPECT_THROW(row_select(col, Subset{2}), input_error);
}

TEST(LatticeProperties, CokernelsAgreeAcrossExpansionsAndConjugateTranspose) {
  const auto items = oracle::corpus(200, 4, 4, 5, 1234);
  for (const auto& item : items) {
    const auto lambda = smith_form(expand_lambda(item.matrix));
    EXPECT_EQ(lambda.rank % 2, 0u);
    EXPECT_EQ(lambda.torsion_factors(), smith_form(expand_order(item.matrix)).torsion_factors());
    EXPECT_EQ(lambda.torsion_factors(), smith_form(expand_lambda(conj_transpose(item.matrix))).torsion_factors());
  }
}

TEST(RingMatrix, MixedCurvesRejected) {
  const RingMatrix a = RingMatrix::identity(sqrt_minus_3(), 2);
  const RingMatrix b = RingMatrix::identity(i_half(), 2);
  EXPECT_THROW(vstack(a, b), input_error);
  EXPECT_THROW(multiply(a, b), input_error);
}
