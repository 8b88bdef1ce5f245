#include "oracle.h"
#include "sgf/genfun.h"
#include "sgf/perron.h"
#include "sgf/recursive.h"
#include "sgf/series.h"
#include "test_util.h"

namespace sgf {
namespace {

Substitution fib() { return parse_substitution("a->ab\nb->a"); }
Substitution xyz() { return parse_substitution("x->xyzy\ny->xy\nz->zy"); }

TEST(PrefixPoly, Characteristic) {
  EXPECT_EQ(char_prefix_poly("abaababa", 'a'), Polynomial({1, 0, 1, 1, 0, 1, 0, 1}));
  EXPECT_EQ(char_prefix_poly("bbb", 'a'), Polynomial());
  EXPECT_EQ(char_prefix_poly("abaababaab", 'a'), Polynomial({1, 0, 1, 1}) * Polynomial({1, 0, 0, 0, 0, 1}));
}

TEST(PrefixPoly, Position) {
  EXPECT_EQ(position_prefix_poly("abaababa", 'a'), Polynomial({0, 0, 2, 3, 5, 7}));
  EXPECT_EQ(position_prefix_poly("xyzyxyzy", 'y'), Polynomial({0, 1, 3, 5, 7}));
  EXPECT_EQ(position_prefix_poly("b", 'a'), Polynomial());
}

TEST(Series, CharacteristicExamples) {
  auto s = fib();
  auto seed = fixed_point_seed(s);
  EXPECT_EQ(longs_of(char_series(s, seed, 'a', 7).coefficients()), (std::vector<long>{1, 0, 1, 1, 0, 1, 0, 1}));
  EXPECT_EQ(longs_of(char_series(s, seed, 'b', 7).coefficients()), (std::vector<long>{0, 1, 0, 0, 1, 0, 1, 0}));
  auto x = xyz();
  EXPECT_EQ(longs_of(char_series(x, fixed_point_seed(x), 'y', 7).coefficients()),
            (std::vector<long>{0, 1, 0, 1, 0, 1, 0, 1}));
}

TEST(Series, Weighted) {
  auto s = fib();
  auto seed = fixed_point_seed(s);
  TruncatedSeries w = weighted_series(s, seed, {{'a', 2}, {'b', -1}}, 4);
  EXPECT_EQ(longs_of(w.coefficients()), (std::vector<long>{2, -1, 2, 2, -1}));
  EXPECT_EQ(weighted_series(s, seed, {{'a', 1}, {'b', 0}}, 100), char_series(s, seed, 'a', 100));
  EXPECT_SGF_ERROR(weighted_series(s, seed, {{'a', 1}}, 4), ErrorCode::InvalidArgument);
}

TEST(Series, SumOfCharacteristicSeriesIsGeometric) {
  const char* corpus[] = {"a->ab\nb->a", "x->xyzy\ny->xy\nz->zy", "a->ab\nb->ab", "a->ab\nb->ba"};
  for (const char* text : corpus) {
    auto s = parse_substitution(text);
    auto seed = fixed_point_seed(s);
    LetterWeighting ones;
    for (char c : s.alphabet().letters()) ones[c] = 1;
    TruncatedSeries sum = weighted_series(s, seed, ones, 10000);
    for (const auto& c : sum.coefficients()) ASSERT_EQ(c, 1) << text;
  }
}

TEST(Series, PositionExamples) {
  auto s = fib();
  auto seed = fixed_point_seed(s);
  EXPECT_EQ(longs_of(position_series(s, seed, 'a', 6).coefficients()), (std::vector<long>{0, 0, 2, 3, 5, 7, 8}));
  EXPECT_EQ(longs_of(position_series(s, seed, 'b', 4).coefficients()), (std::vector<long>{0, 1, 4, 6, 9}));
  auto x = xyz();
  EXPECT_EQ(longs_of(position_series(x, fixed_point_seed(x), 'y', 4).coefficients()),
            (std::vector<long>{0, 1, 3, 5, 7}));
}

TEST(Series, ReconstructionAndLeftInverse) {
  auto s = fib();
  auto seed = fixed_point_seed(s);
  const std::size_t order = 10000;
  TruncatedSeries c = char_series(s, seed, 'a', order);
  TruncatedSeries running = summatory_transform(c);
  TruncatedSeries p = position_series(s, seed, 'a', 6000);
  std::vector<Rational> rebuilt(order + 1);
  for (std::size_t n = 1; n <= p.order(); ++n) {
    const auto pos = p[n].get_num().get_ui();
    if (pos > order) break;
    rebuilt[pos] += 1;
    EXPECT_EQ(running[pos], Rational(static_cast<long>(n)));
  }
  const auto covered = p[p.order()].get_num().get_ui();
  ASSERT_LE(covered, order);
  for (std::size_t n = 0; n <= covered; ++n) EXPECT_EQ(rebuilt[n], c[n]) << n;
}

TEST(Transforms, DifferenceAndSummatory) {
  TruncatedSeries py(std::vector<Rational>{0, 1, 3, 5, 7, 9});
  EXPECT_EQ(longs_of(difference_transform(py, 1).coefficients()), (std::vector<long>{0, 1, 2, 2, 2, 2}));
  EXPECT_EQ(difference_transform(py, 0), py);
  TruncatedSeries ones(std::vector<Rational>(6, 1));
  EXPECT_EQ(longs_of(summatory_transform(ones).coefficients()), (std::vector<long>{1, 2, 3, 4, 5, 6}));
  auto s = fib();
  TruncatedSeries ca = char_series(s, fixed_point_seed(s), 'a', 5);
  EXPECT_EQ(longs_of(summatory_transform(ca).coefficients()), (std::vector<long>{1, 1, 2, 3, 3, 4}));
  for (unsigned m = 0; m <= 4; ++m) {
    TruncatedSeries t = difference_transform(ca, m);
    for (unsigned i = 0; i < m; ++i) t = summatory_transform(t);
    EXPECT_EQ(t, ca) << m;
  }
}

TEST(Transforms, FibonacciGapsBounded) {
  auto s = fib();
  auto seed = fixed_point_seed(s);
  TruncatedSeries d = difference_transform(position_series(s, seed, 'a', 10000), 1);
  for (std::size_t n = 2; n <= d.order(); ++n) {
    EXPECT_TRUE(d[n] == 1 || d[n] == 2 || d[n] == 3) << n;
  }
}

TEST(Concat, Characteristic) {
  EXPECT_EQ(concat_char(Polynomial({1, 0, 1, 1}), Polynomial({1, 0, 1}), 5), char_prefix_poly("abaababa", 'a'));
  EXPECT_EQ(concat_char(Polynomial(), Polynomial({1, 1}), 3), Polynomial({0, 0, 0, 1, 1}));
  EXPECT_EQ(concat_char(Polynomial({1, 1}), Polynomial(), 3), Polynomial({1, 1}));
  EXPECT_SGF_ERROR(concat_char(Polynomial({0, 0, 1}), Polynomial({1}), 2), ErrorCode::DegreeOverflow);
}

TEST(Concat, Position) {
  EXPECT_EQ(concat_pos(Polynomial(), Polynomial(), 2, 1, 1), position_prefix_poly("aba", 'a'));
  EXPECT_EQ(concat_pos(position_prefix_poly("abaab", 'a'), position_prefix_poly("aba", 'a'), 5, 3, 2),
            Polynomial({0, 0, 2, 3, 5, 7}));
  EXPECT_EQ(concat_pos(Polynomial({0, 0, 2}), Polynomial(), 4, 2, 0), Polynomial({0, 0, 2}));
  EXPECT_SGF_ERROR(concat_pos(Polynomial({0, 0, 2}), Polynomial(), 4, 1, 0), ErrorCode::CountMismatch);
}

TEST(Concat, PositionAgainstBruteForceOnRandomWords) {
  std::string letters = "ab";
  unsigned state = 5;
  auto next = [&state] { return state = state * 1103515245u + 12345u; };
  for (int trial = 0; trial < 500; ++trial) {
    std::string u, v;
    for (unsigned i = 0, n = next() % 12; i < n; ++i) u += letters[(next() >> 8) % 2];
    for (unsigned i = 0, n = next() % 12; i < n; ++i) v += letters[(next() >> 8) % 2];
    const auto cu = static_cast<std::size_t>(std::count(u.begin(), u.end(), 'a'));
    const auto cv = static_cast<std::size_t>(std::count(v.begin(), v.end(), 'a'));
    EXPECT_EQ(concat_pos(position_prefix_poly(u, 'a'), position_prefix_poly(v, 'a'), u.size(), cu, cv),
              position_prefix_poly(u + v, 'a'))
        << u << "|" << v;
  }
}

TEST(Recursive, Examples) {
  auto s = fib();
  EXPECT_EQ(recursive_char_poly(s, 'a', 'a', 3), Polynomial({1, 0, 1, 1}));
  EXPECT_EQ(recursive_pos_poly(s, 'a', 'a', 2), Polynomial({0, 0, 2}));
  EXPECT_EQ(recursive_pos_poly(s, 'b', 'a', 3), Polynomial({0, 1, 4}));
  EXPECT_EQ(recursive_char_poly(s, 'a', 'a', 0), Polynomial({1}));
  EXPECT_EQ(recursive_char_poly(s, 'b', 'a', 0), Polynomial());
  EXPECT_EQ(recursive_pos_poly(s, 'a', 'a', 0), Polynomial());
  for (unsigned m = 1; m <= 10; ++m) {
    EXPECT_EQ(recursive_char_poly(s, 'a', 'b', m), recursive_char_poly(s, 'a', 'a', m - 1));
  }
}

TEST(Recursive, LengthsAndCountsFromMatrixPowers) {
  RecursivePolynomials r(xyz());
  for (unsigned m = 0; m <= 8; ++m) {
    for (char src : std::string("xyz")) {
      const std::string word = oracle::iterate(oracle::xyz(), std::string(1, src), m);
      EXPECT_EQ(r.length(src, m), word.size());
      for (char t : std::string("xyz")) {
        EXPECT_EQ(r.count(t, src, m), static_cast<std::size_t>(std::count(word.begin(), word.end(), t)));
      }
    }
  }
}

TEST(Recursive, AgreesWithExpandedWords) {
  for (const auto* rules : {&oracle::fibonacci(), &oracle::xyz()}) {
    std::string letters;
    std::string text;
    for (const auto& [c, image] : *rules) {
      letters += c;
      text += std::string(1, c) + "->" + image + "\n";
    }
    Substitution s = parse_substitution(text);
    RecursivePolynomials r(s);
    const unsigned max_level = rules == &oracle::fibonacci() ? 18 : 9;
    for (unsigned m = 0; m <= max_level; ++m) {
      for (char src : letters) {
        const std::string word = oracle::iterate(*rules, std::string(1, src), m);
        for (char t : letters) {
          std::vector<long> c = oracle::indicator(word, t);
          ASSERT_EQ(r.char_poly(t, src, m), poly_of(oracle::trim(c))) << t << src << m;
          std::vector<long> p = oracle::positions(word, t);
          ASSERT_EQ(r.pos_poly(t, src, m), poly_of(oracle::trim(p))) << t << src << m;
        }
      }
    }
  }
}

}  // namespace
}  // namespace sgf
