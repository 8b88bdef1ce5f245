#include "sgf/fibonacci.h"

#include <algorithm>

#include "sgf/error.h"
#include "sgf/genfun.h"
#include "sgf/word_stream.h"

namespace sgf {

namespace {

constexpr unsigned kMaxSupertileLevel = 40;
constexpr unsigned kMaxPairLevel = 6;

Polynomial concat_all(const std::vector<const Polynomial*>& parts, const std::vector<std::size_t>& lengths) {
  Polynomial out = *parts.front();
  std::size_t offset = lengths.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = concat_char(out, *parts[i], offset);
    offset += lengths[i];
  }
  return out;
}

}  // namespace

Substitution fibonacci_substitution() { return Substitution(Alphabet("ab"), {"ab", "a"}); }

Integer fibonacci_number(unsigned n) {
  if (n > 92) throw Error(ErrorCode::TooLarge, "Fibonacci index too large");
  Integer a = 0;
  Integer b = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Word supertile_word(unsigned n, Supertile which) {
  if (n > kMaxSupertileLevel) throw Error(ErrorCode::TooLarge, "supertile level " + std::to_string(n) + " exceeds 40");
  return fibonacci_substitution().iterate(which == Supertile::A ? "a" : "b", n);
}

char to_char(Pair pair) {
  switch (pair) {
    case Pair::R: return 'R';
    case Pair::S: return 'S';
    case Pair::T: return 'T';
  }
  return '?';
}

const Polynomial& SupertilePolys::polynomial(Pair pair) const {
  switch (pair) {
    case Pair::R: return r;
    case Pair::S: return s;
    case Pair::T: return t;
  }
  return r;
}

std::size_t SupertilePolys::length(Pair pair) const {
  switch (pair) {
    case Pair::R: return r_length;
    case Pair::S: return s_length;
    case Pair::T: return t_length;
  }
  return 0;
}

Word pair_word(unsigned n, Pair pair) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "pair level must be at least 1");
  if (3 * n > kMaxSupertileLevel) throw Error(ErrorCode::TooLarge, "pair level too large to expand");
  const Word a = supertile_word(3 * n, Supertile::A);
  const Word b = supertile_word(3 * n, Supertile::B);
  switch (pair) {
    case Pair::R: return a + b;
    case Pair::S: return a + a;
    case Pair::T: return b + a;
  }
  return {};
}

SupertilePolys pair_polynomials(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "pair level must be at least 1");
  if (n > kMaxPairLevel) throw Error(ErrorCode::TooLarge, "pair levels above 6 are not supported");
  SupertilePolys out;
  out.level = 1;
  const Word r = pair_word(1, Pair::R);
  const Word s = pair_word(1, Pair::S);
  const Word t = pair_word(1, Pair::T);
  out.r = char_prefix_poly(r, 'a');
  out.s = char_prefix_poly(s, 'a');
  out.t = char_prefix_poly(t, 'a');
  out.r_length = r.size();
  out.s_length = s.size();
  out.t_length = t.size();
  while (out.level < n) {
    const std::size_t lr = out.r_length;
    const std::size_t ls = out.s_length;
    const std::size_t lt = out.t_length;
    SupertilePolys next;
    next.level = out.level + 1;
    next.r = concat_all({&out.r, &out.s, &out.t, &out.t}, {lr, ls, lt, lt});
    next.s = concat_all({&out.r, &out.s, &out.t, &out.t, &out.r}, {lr, ls, lt, lt, lr});
    next.t = concat_all({&out.r, &out.s, &out.t, &out.r}, {lr, ls, lt, lr});
    next.r_length = lr + ls + 2 * lt;
    next.s_length = 2 * lr + ls + 2 * lt;
    next.t_length = 2 * lr + ls + lt;
    out = std::move(next);
  }
  return out;
}

Substitution induced_three_letter_substitution() {
  return Substitution(Alphabet("rst"), {"rstt", "rsttr", "rstr"});
}

DecompositionCheck verify_decomposition(unsigned n, std::size_t order) {
  const Substitution fib = fibonacci_substitution();
  const TruncatedSeries c = char_series(fib, fixed_point_seed(fib), 'a', order);
  const SupertilePolys polys = pair_polynomials(n);
  const Substitution induced = induced_three_letter_substitution();
  FixedWordStream blocks(induced, fixed_point_seed(induced));

  std::vector<Rational> assembled(order + 1);
  DecompositionCheck out;
  out.offsets_even = true;
  std::size_t offset = 0;
  while (offset <= order) {
    const char letter = blocks.next();
    const Pair pair = letter == 'r' ? Pair::R : letter == 's' ? Pair::S : Pair::T;
    out.offsets.push_back(offset);
    out.offsets_even = out.offsets_even && offset % 2 == 0;
    const auto& coefficients = polys.polynomial(pair).coefficients();
    for (std::size_t i = 0; i < coefficients.size() && offset + i <= order; ++i) {
      assembled[offset + i] += coefficients[i];
    }
    offset += polys.length(pair);
  }
  out.blocks = out.offsets.size();
  out.matches = assembled == c.coefficients();
  return out;
}

bool PositionIdentityReport::all_required_hold() const {
  return std::all_of(records.begin(), records.end(), [](const IdentityRecord& r) { return !r.required || r.holds; });
}

PositionIdentityReport fib_position_identities(std::size_t order) {
  const Substitution fib = fibonacci_substitution();
  const Word word = fixed_word_prefix(fib, fixed_point_seed(fib), order);
  std::vector<long> pa{-1};  // 1-based
  std::vector<long> pb{-1};
  std::vector<long> running_a(word.size());
  long count = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'a') {
      ++count;
      pa.push_back(static_cast<long>(i));
    } else {
      pb.push_back(static_cast<long>(i));
    }
    running_a[i] = count;
  }
  // S_a(m) for m >= -1.
  auto s_a = [&](long m) { return m < 0 ? 0L : running_a.at(static_cast<std::size_t>(m)); };

  PositionIdentityReport report;
  report.order = order;
  report.a_terms = pa.size() - 1;
  report.b_terms = pb.size() - 1;

  auto check = [&](std::string name, bool required, std::size_t terms, auto&& predicate) {
    IdentityRecord record{std::move(name), required, true, std::nullopt};
    for (std::size_t n = 1; n <= terms; ++n) {
      if (!predicate(static_cast<long>(n))) {
        record.holds = false;
        record.first_failure = n;
        break;
      }
    }
    report.records.push_back(std::move(record));
  };

  const std::size_t both = std::min(report.a_terms, report.b_terms);
  check("P_b - P_a = X/(1-X)^2", true, both, [&](long n) { return pb[n] - pa[n] == n; });
  check("p_a(n) = n - 1 + S_a(n-2)", true, report.a_terms, [&](long n) { return pa[n] == n - 1 + s_a(n - 2); });
  check("p_b(n) = 2n - 1 + S_a(n-2)", true, report.b_terms, [&](long n) { return pb[n] == 2 * n - 1 + s_a(n - 2); });
  check("S_a(p_a(n)) = n", true, report.a_terms, [&](long n) { return s_a(pa[n]) == n; });
  check("printed p_a(n) = n - 2 + S_a(n-1)", false, report.a_terms,
        [&](long n) { return pa[n] == n - 2 + s_a(n - 1); });
  check("printed p_b(n) = 2n - 2 + S_a(n-1)", false, report.b_terms,
        [&](long n) { return pb[n] == 2 * n - 2 + s_a(n - 1); });
  return report;
}

PositivityBound positivity_bound(unsigned n, const Rational& tolerance) {
  if (tolerance <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const SupertilePolys polys = pair_polynomials(n);
  const Rational left(-1);
  const Rational right(0);
  const Pair pairs[] = {Pair::R, Pair::S, Pair::T};

  std::vector<SturmChain> chains;
  PositivityBound out;
  out.level = n;
  std::optional<RootBracket> best;
  for (Pair pair : pairs) {
    chains.emplace_back(polys.polynomial(pair));
    const int roots = chains.back().roots_in(left, right);
    out.roots_in_unit_interval.push_back(roots);
    if (roots == 0) continue;
    RootBracket bracket = isolate_max_root(chains.back(), left, right, tolerance);
    if (!best || bracket.upper > best->upper) {
      best = bracket;
      out.binding = pair;
    }
  }
  if (!best) {
    throw Error(ErrorCode::NoRootInInterval,
                "no root of R, S or T in (-1, 0) at level " + std::to_string(n) + ": C_a > 0 on (-1, 1) would follow");
  }
  out.alpha_hat = best->upper;
  out.alpha_lower = best->lower;
  for (std::size_t i = 0; i < 3; ++i) {
    const Polynomial& p = polys.polynomial(pairs[i]);
    out.certificates.push_back(certify_positive(p, chains[i], out.alpha_hat, right));
    if (out.roots_in_unit_interval[i] == 0) {
      out.wide_certificates.emplace_back(pairs[i], certify_positive(p, chains[i], left, right));
    }
  }
  return out;
}

bool bounds_non_increasing(const std::vector<PositivityBound>& bounds, const Rational& tolerance) {
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    if (bounds[i].alpha_hat > bounds[i - 1].alpha_hat + tolerance) return false;
  }
  return true;
}

}  // namespace sgf
