#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgf/polynomial.h"
#include "sgf/rational.h"
#include "sgf/realroots.h"
#include "sgf/substitution.h"

namespace sgf {

// a -> ab, b -> a.
Substitution fibonacci_substitution();

// f_1 = f_2 = 1. TooLarge past f_92.
Integer fibonacci_number(unsigned n);

enum class Supertile { A, B };

// A_n = sigma^n(a), B_n = sigma^n(b) = A_{n-1}. TooLarge for n > 40.
Word supertile_word(unsigned n, Supertile which);

// Adjacent pairs of level-3n supertiles: R = A B, S = A A, T = B A.
enum class Pair { R, S, T };
char to_char(Pair pair);

struct SupertilePolys {
  unsigned level = 0;
  // C_a restricted to each pair word, indexed by Pair.
  Polynomial r;
  Polynomial s;
  Polynomial t;
  std::size_t r_length = 0;
  std::size_t s_length = 0;
  std::size_t t_length = 0;

  const Polynomial& polynomial(Pair pair) const;
  std::size_t length(Pair pair) const;
};

// Words R_n, S_n, T_n expanded explicitly.
Word pair_word(unsigned n, Pair pair);

// Level 1 from the words, then R' = RSTT, S' = RSTTR, T' = RSTR on the
// polynomials. Levels 1..6.
SupertilePolys pair_polynomials(unsigned n);

// r -> rstt, s -> rsttr, t -> rstr.
Substitution induced_three_letter_substitution();

struct DecompositionCheck {
  bool matches = false;
  bool offsets_even = false;
  std::size_t blocks = 0;
  // Start of each pair block in the fixed word, up to the truncation.
  std::vector<std::size_t> offsets;

  bool ok() const { return matches && offsets_even; }
};

// The N-truncation of C_a against the sum of X^offset C_block over the
// blocks of the induced r/s/t fixed word.
DecompositionCheck verify_decomposition(unsigned n, std::size_t order);

struct IdentityRecord {
  std::string name;
  // Printed variants are recorded but not required.
  bool required = true;
  bool holds = false;
  // Smallest failing index when !holds.
  std::optional<std::size_t> first_failure;
};

// Occurrence positions p_a(1..), p_b(1..) read from an order-length prefix
// of the fixed word, with S_a(m) = #a in w_0..w_m.
struct PositionIdentityReport {
  std::size_t order = 0;
  std::size_t a_terms = 0;
  std::size_t b_terms = 0;
  std::vector<IdentityRecord> records;

  bool all_required_hold() const;
};

// Records the printed forms alongside the forms fixed by the word scan;
// only the latter are required to hold.
PositionIdentityReport fib_position_identities(std::size_t order);

struct PositivityBound {
  unsigned level = 0;
  // Every root of the three polynomials in (-1, 0) is <= alpha_hat, and the
  // largest lies in (alpha_lower, alpha_hat].
  Rational alpha_hat;
  Rational alpha_lower;
  Pair binding = Pair::R;
  // Positivity on (alpha_hat, 0) for R, S, T in that order.
  std::vector<ExclusionCertificate> certificates;
  // Roots in (-1, 0] per polynomial, R, S, T.
  std::vector<int> roots_in_unit_interval;
  // Certificates on (-1, 0) for the polynomials with no root there.
  std::vector<std::pair<Pair, ExclusionCertificate>> wide_certificates;
};

// NoRootInInterval when none of the three polynomials has a root in (-1, 0).
PositivityBound positivity_bound(unsigned n, const Rational& tolerance = Rational(1, 100000000));

// Whether alpha_hat is non-increasing (up to tolerance) along the levels.
bool bounds_non_increasing(const std::vector<PositivityBound>& bounds, const Rational& tolerance);

}  // namespace sgf
