#include "oracle.h"
#include "sgf/matrix.h"
#include "sgf/substitution.h"
#include "test_util.h"

namespace sgf {
namespace {

TEST(Parse, FibonacciRules) {
  Substitution s = parse_substitution("a->ab\nb->a");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.alphabet().letters(), "ab");
  EXPECT_EQ(s.image('a'), "ab");
  EXPECT_EQ(s.image('b'), "a");
}

TEST(Parse, CommentsBlankLinesAndSpaces) {
  Substitution s = parse_substitution("# comment\n\n  x -> xyzy   # trailing\r\ny->xy\nz ->zy\n");
  EXPECT_EQ(s.alphabet().letters(), "xyz");
  EXPECT_EQ(s.image('x'), "xyzy");
  EXPECT_EQ(s.image('z'), "zy");
}

TEST(Parse, SingleLetterIdentity) {
  Substitution s = parse_substitution("a->a");
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.image('a'), "a");
}

TEST(Parse, EmptyImage) { EXPECT_SGF_ERROR(parse_substitution("a->\n"), ErrorCode::EmptyImage); }

TEST(Parse, DuplicateRule) { EXPECT_SGF_ERROR(parse_substitution("a->ab\nb->a\na->b"), ErrorCode::DuplicateRule); }

TEST(Parse, UnknownLetterInImage) { EXPECT_SGF_ERROR(parse_substitution("a->ac\n"), ErrorCode::UnknownLetterInImage); }

TEST(Parse, SyntaxErrorCarriesLocation) {
  try {
    parse_substitution("a->ab\nb - a\n");
    FAIL() << "no throw";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parse, MultiCharacterLetterRejected) {
  EXPECT_SGF_ERROR(parse_substitution("ab->a\n"), ErrorCode::SyntaxError);
}

TEST(Parse, NoRules) { EXPECT_SGF_ERROR(parse_substitution("# nothing\n"), ErrorCode::SyntaxError); }

TEST(Parse, RoundTripThroughRules) {
  Substitution s = parse_substitution("x->xyzy\ny->xy\nz->zy");
  EXPECT_EQ(parse_substitution(s.to_rules()), s);
}

TEST(Substitution, IterateMatchesOracle) {
  Substitution s = parse_substitution("a->ab\nb->a");
  for (unsigned m = 0; m <= 15; ++m) {
    EXPECT_EQ(s.iterate("a", m), oracle::iterate(oracle::fibonacci(), "a", m));
  }
  EXPECT_SGF_ERROR(s.iterate("a", 60, 1000), ErrorCode::TooLarge);
}

TEST(Matrix, Examples) {
  EXPECT_EQ(substitution_matrix(parse_substitution("a->ab\nb->a")), IntMatrix({{1, 1}, {1, 0}}));
  EXPECT_EQ(substitution_matrix(parse_substitution("x->xyzy\ny->xy\nz->zy")),
            IntMatrix({{1, 2, 1}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(substitution_matrix(parse_substitution("a->a")), IntMatrix({{1}}));
  EXPECT_EQ(IntMatrix({{1, 1}, {1, 0}}).to_string(), "[[1,1],[1,0]]");
}

TEST(Matrix, PowerOfSubstitutionMatchesMatrixPower) {
  const char* corpus[] = {"a->ab\nb->a", "x->xyzy\ny->xy\nz->zy", "a->ab\nb->ab", "a->ab\nb->ba",
                          "r->rstt\ns->rsttr\nt->rstr"};
  for (const char* text : corpus) {
    Substitution s = parse_substitution(text);
    IntMatrix a = substitution_matrix(s);
    for (unsigned m = 1; m <= 10; ++m) {
      if (m > 6 && s.size() == 3) break;  // keep image lengths small
      EXPECT_EQ(substitution_matrix(s.power(m)), a.power(m)) << text << " m=" << m;
    }
  }
}

TEST(Matrix, CharacteristicPolynomial) {
  EXPECT_EQ(characteristic_polynomial(IntMatrix({{1, 1}, {1, 0}})), Polynomial({-1, -1, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix({{1, 1, 2}, {2, 1, 2}, {2, 1, 1}})), Polynomial({-1, -5, -3, 1}));
  // Cayley-Hamilton on the xyz matrix.
  IntMatrix m({{1, 2, 1}, {1, 1, 0}, {0, 1, 1}});
  Polynomial chi = characteristic_polynomial(m);
  IntMatrix sum(3);
  IntMatrix power = IntMatrix::identity(3);
  for (int i = 0; i <= chi.degree(); ++i) {
    long c = chi.coefficient(i).get_num().get_si();
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t col = 0; col < 3; ++col) sum(r, col) += c * power(r, col);
    }
    power = power * m;
  }
  EXPECT_EQ(sum, IntMatrix(3));
}

}  // namespace
}  // namespace sgf
