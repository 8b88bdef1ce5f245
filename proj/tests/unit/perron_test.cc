#include <random>

#include "oracle.h"
#include "sgf/aperiodicity.h"
#include "sgf/perron.h"
#include "sgf/realroots.h"
#include "sgf/substitution.h"
#include "test_util.h"

namespace sgf {
namespace {

const Rational kWidth(Integer(1), Integer("1000000000000"));

TEST(Primitivity, Examples) {
  EXPECT_EQ(is_primitive(IntMatrix({{1, 1}, {1, 0}})), 2u);
  EXPECT_EQ(is_primitive(IntMatrix({{1, 1, 2}, {2, 1, 2}, {2, 1, 1}})), 1u);
  EXPECT_EQ(is_primitive(substitution_matrix(parse_substitution("a->ab\nb->b"))), std::nullopt);
  EXPECT_SGF_ERROR(require_primitive(parse_substitution("a->ab\nb->b")), ErrorCode::NotPrimitive);
}

// Exhaustive check against integer powers for random 0/1/2 matrices, k <= 4.
TEST(Primitivity, AgreesWithExplicitPowers) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::vector<long>> m(k, std::vector<long>(k));
    IntMatrix im(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] = (rng() % 3 == 0) ? static_cast<long>(rng() % 3) : 0;
        im(i, j) = m[i][j];
      }
    }
    std::optional<unsigned> expected;
    auto p = m;
    for (unsigned e = 1; e <= (k - 1) * k + 1; ++e) {
      bool positive = true;
      for (auto& row : p) {
        for (long x : row) positive = positive && x > 0;
      }
      if (positive) {
        expected = e;
        break;
      }
      p = oracle::multiply(p, m);
      for (auto& row : p) {
        for (long& x : row) x = x > 0 ? 1 : 0;
      }
    }
    EXPECT_EQ(is_primitive(im), expected);
  }
}

TEST(PF, Fibonacci) {
  PFData pf = pf_data(IntMatrix({{1, 1}, {1, 0}}));
  EXPECT_EQ(pf.min_poly_of_pf, Polynomial({-1, -1, 1}));
  EXPECT_FALSE(pf.is_rational);
  EXPECT_GT(pf.pf_lower, Rational(1618033, 1000000));
  EXPECT_LT(pf.pf_upper, Rational(1618034, 1000000));
  EXPECT_LE(pf.pf_upper - pf.pf_lower, kWidth);
  EXPECT_NE(pf.min_poly_of_pf.sign_at(pf.pf_lower), pf.min_poly_of_pf.sign_at(pf.pf_upper));
  EXPECT_EQ(pf.primitivity_witness, 2u);
}

TEST(PF, XyzAndInduced) {
  PFData xyz = pf_data(IntMatrix({{1, 2, 1}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(xyz.min_poly_of_pf, Polynomial({1, -3, 1}));
  EXPECT_LT(xyz.pf_lower, Rational(2618034, 1000000));
  EXPECT_GT(xyz.pf_upper, Rational(2618033, 1000000));
  PFData rst = pf_data(IntMatrix({{1, 1, 2}, {2, 1, 2}, {2, 1, 1}}));
  EXPECT_EQ(rst.min_poly_of_pf, Polynomial({-1, -4, 1}));  // (2+sqrt5) and its conjugate
  EXPECT_GT(rst.pf_upper, Rational(4236067, 1000000));
  EXPECT_LT(rst.pf_lower, Rational(4236068, 1000000));
}

TEST(PF, RationalEigenvalue) {
  PFData pf = pf_data(IntMatrix({{1, 1}, {1, 1}}));
  EXPECT_TRUE(pf.is_rational);
  EXPECT_EQ(pf.pf_exact, Rational(2));
  EXPECT_EQ(pf.min_poly_of_pf.degree(), 1);
}

TEST(PF, EnclosureInvariantOnRandomPrimitiveMatrices) {
  std::mt19937 rng(3);
  int tested = 0;
  while (tested < 40) {
    const std::size_t k = 2 + rng() % 4;
    IntMatrix m(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m(i, j) = static_cast<long>(rng() % 3);
    }
    if (!is_primitive(m)) continue;
    ++tested;
    PFData pf = pf_data(m);
    EXPECT_LE(pf.pf_upper - pf.pf_lower, kWidth);
    EXPECT_NE(pf.min_poly_of_pf.sign_at(pf.pf_lower), pf.min_poly_of_pf.sign_at(pf.pf_upper));
    // The factor divides the characteristic polynomial.
    EXPECT_TRUE(divmod(pf.char_poly, pf.min_poly_of_pf).second.is_zero());
    // No root of the characteristic polynomial beyond the enclosure.
    EXPECT_EQ(count_roots(pf.char_poly, pf.pf_upper, pf.pf_upper + 1000), 0);
    EXPECT_EQ(pf.is_rational, pf.min_poly_of_pf.degree() == 1);
  }
}

TEST(GapBound, Fibonacci) { EXPECT_EQ(gap_bound(parse_substitution("a->ab\nb->a")), 6u); }

TEST(GapBound, BoundsMeasuredGaps) {
  const char* texts[] = {"a->ab\nb->a", "x->xyzy\ny->xy\nz->zy", "a->ab\nb->ba", "r->rstt\ns->rsttr\nt->rstr"};
  const oracle::Rules rules[] = {oracle::fibonacci(), oracle::xyz(), oracle::thue_morse(),
                                 {{'r', "rstt"}, {'s', "rsttr"}, {'t', "rstr"}}};
  for (int i = 0; i < 4; ++i) {
    Substitution s = parse_substitution(texts[i]);
    const std::string word = oracle::fixed_prefix(rules[i], s.alphabet().letter(0), 100000);
    for (char c : s.alphabet().letters()) {
      EXPECT_LE(oracle::max_gap(word, c), static_cast<long>(gap_bound(s))) << texts[i] << " " << c;
    }
  }
}

TEST(Aperiodicity, Verdicts) {
  Substitution fib = parse_substitution("a->ab\nb->a");
  EXPECT_EQ(aperiodicity_verdict(fib, 1000, 200).kind, AperiodicityVerdict::Kind::AperiodicByIrrationalPF);
  AperiodicityVerdict periodic = aperiodicity_verdict(parse_substitution("a->ab\nb->ab"), 1000, 200);
  EXPECT_EQ(periodic.kind, AperiodicityVerdict::Kind::EventuallyPeriodic);
  EXPECT_EQ(periodic.preperiod, 0u);
  EXPECT_EQ(periodic.period, 2u);
  AperiodicityVerdict tm = aperiodicity_verdict(parse_substitution("a->ab\nb->ba"), 10000, 1000);
  EXPECT_EQ(tm.kind, AperiodicityVerdict::Kind::InconclusiveUpTo);
  EXPECT_EQ(tm.prefix_bound, 10000u);
  EXPECT_EQ(tm.period_bound, 1000u);
}

}  // namespace
}  // namespace sgf
