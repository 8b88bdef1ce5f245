#pragma once

#include <optional>

#include "sgf/matrix.h"
#include "sgf/polynomial.h"
#include "sgf/rational.h"
#include "sgf/substitution.h"

namespace sgf {

// Smallest m <= (k-1)*k + 1 with M^m strictly positive, found by boolean
// reachability; nullopt when the matrix is not primitive.
std::optional<unsigned> is_primitive(const SubstitutionMatrix& m);

// Throws NotPrimitive; returns the witness power otherwise.
unsigned require_primitive(const Substitution& s);

struct PFData {
  Polynomial char_poly;
  // Irreducible factor of char_poly over Q that vanishes at the PF eigenvalue.
  Polynomial min_poly_of_pf;
  // Open enclosure (pf_lower, pf_upper) of width <= 1e-12; min_poly_of_pf
  // changes sign across it.
  Rational pf_lower;
  Rational pf_upper;
  bool is_rational = false;
  // Set when is_rational.
  std::optional<Rational> pf_exact;
  std::optional<unsigned> primitivity_witness;
};

// Requires a primitive matrix (NotPrimitive otherwise).
PFData pf_data(const SubstitutionMatrix& m);

// Twice the longest sigma^m(letter), m the primitivity witness. Any letter
// recurs in the fixed word with gaps at most this large.
unsigned long gap_bound(const Substitution& s);

}  // namespace sgf
