#include "sgf/realroots.h"

#include <cstdio>

namespace sgf {

namespace {

void trim(IntegerPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntegerPolynomial& p) { return static_cast<int>(p.size()) - 1; }

void make_primitive(IntegerPolynomial& p) {
  Integer content = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return;
  }
  if (content <= 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

IntegerPolynomial derivative(const IntegerPolynomial& p) {
  IntegerPolynomial out;
  if (p.size() <= 1) return out;
  out.resize(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<unsigned long>(i);
  return out;
}

// Returns a positive multiple of -rem(a, b) over Q.
IntegerPolynomial negated_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  IntegerPolynomial r = a;
  const int db = degree(b);
  const Integer& lb = b.back();
  int lb_sign = sgn(lb);
  int parity = 0;  // number of times r was multiplied by a factor with lb's sign
  Integer g, scale_r, scale_b;
  while (degree(r) >= db) {
    const std::size_t shift = static_cast<std::size_t>(degree(r) - db);
    mpz_gcd(g.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    mpz_divexact(scale_r.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(scale_b.get_mpz_t(), r.back().get_mpz_t(), g.get_mpz_t());
    if (scale_r != 1) {
      for (auto& c : r) c *= scale_r;
      if (lb_sign < 0) parity ^= 1;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[j + shift].get_mpz_t(), scale_b.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
  }
  // r is a multiple of rem(a, b) by a factor whose sign is (-1)^parity.
  if (parity == 0) {
    for (auto& c : r) c = -c;
  }
  make_primitive(r);
  return r;
}

std::vector<IntegerPolynomial> build_chain(IntegerPolynomial p0) {
  std::vector<IntegerPolynomial> chain;
  IntegerPolynomial p1 = derivative(p0);
  make_primitive(p1);
  chain.push_back(std::move(p0));
  if (p1.empty()) return chain;
  chain.push_back(std::move(p1));
  while (degree(chain.back()) > 0) {
    IntegerPolynomial next = negated_remainder(chain[chain.size() - 2], chain.back());
    if (next.empty()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

// Sign of sum c_i x^i for x = num/den, via homogeneous Horner.
int homogeneous_sign(const IntegerPolynomial& p, const Integer& num, const std::vector<Integer>& den_powers,
                     long dyadic_shift) {
  if (p.empty()) return 0;
  const std::size_t d = p.size() - 1;
  Integer h = p[d];
  Integer term;
  for (std::size_t i = d; i-- > 0;) {
    h *= num;
    if (p[i] == 0) continue;
    if (dyadic_shift >= 0) {
      mpz_mul_2exp(term.get_mpz_t(), p[i].get_mpz_t(), static_cast<mp_bitcnt_t>(dyadic_shift) * (d - i));
    } else {
      term = p[i] * den_powers[d - i];
    }
    h += term;
  }
  return sgn(h);
}

struct EvaluationPoint {
  Integer num;
  std::vector<Integer> den_powers;
  long dyadic_shift = -1;

  EvaluationPoint(const Rational& x, std::size_t max_degree) : num(x.get_num()) {
    const Integer& den = x.get_den();
    if (mpz_popcount(den.get_mpz_t()) == 1) {
      dyadic_shift = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    } else {
      den_powers.resize(max_degree + 1);
      den_powers[0] = 1;
      for (std::size_t i = 1; i <= max_degree; ++i) den_powers[i] = den_powers[i - 1] * den;
    }
  }

  int sign(const IntegerPolynomial& p) const { return homogeneous_sign(p, num, den_powers, dyadic_shift); }
};

void require_interval(const Rational& l, const Rational& r) {
  if (!(l < r)) throw Error(ErrorCode::InvalidArgument, "interval requires l < r");
}

}  // namespace

IntegerPolynomial primitive_integer_part(const Polynomial& p) {
  Integer denominator_lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  IntegerPolynomial out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer scaled = c.get_num() * (denominator_lcm / c.get_den());
    out.push_back(std::move(scaled));
  }
  make_primitive(out);
  return out;
}

int sign_at(const IntegerPolynomial& p, const Rational& x) {
  EvaluationPoint point(x, p.empty() ? 0 : p.size() - 1);
  return point.sign(p);
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm chain of zero polynomial");
  IntegerPolynomial base = primitive_integer_part(p);
  members_ = build_chain(base);
  if (degree(members_.back()) > 0) {
    // Last member is gcd(p, p'); divide it out and start again.
    Polynomial g;
    {
      std::vector<Rational> coefficients(members_.back().begin(), members_.back().end());
      g = Polynomial(std::move(coefficients));
    }
    Polynomial square_free = divmod(p, g).first;
    members_ = build_chain(primitive_integer_part(square_free));
    reduced_ = true;
  }
}

std::vector<Polynomial> SturmChain::as_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.emplace_back(std::vector<Rational>(m.begin(), m.end()));
  return out;
}

int SturmChain::variations(const Rational& x) const {
  EvaluationPoint point(x, members_.front().size());
  int count = 0;
  int previous = 0;
  for (const auto& member : members_) {
    int s = point.sign(member);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

int SturmChain::roots_in(const Rational& l, const Rational& r) const {
  require_interval(l, r);
  return variations(l) - variations(r);
}

SturmChain sturm_chain(const Polynomial& p) { return SturmChain(p); }

int count_roots(const SturmChain& chain, const Rational& l, const Rational& r) {
  require_interval(l, r);
  if (sign_at(chain.base(), l) == 0) {
    throw Error(ErrorCode::EndpointIsRoot, "left endpoint " + to_string(l) + " is a root");
  }
  return chain.roots_in(l, r);
}

int count_roots(const Polynomial& p, const Rational& l, const Rational& r) {
  return count_roots(SturmChain(p), l, r);
}

RootBracket isolate_max_root(const SturmChain& chain, const Rational& l, const Rational& r,
                             const Rational& eps) {
  require_interval(l, r);
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  Rational lo = l;
  Rational hi = r;
  int v_lo = chain.variations(lo);
  int v_hi = chain.variations(hi);
  if (v_lo - v_hi == 0) {
    throw Error(ErrorCode::NoRoot, "no root in (" + to_string(l) + ", " + to_string(r) + "]");
  }
  // Invariant: the largest root of the interval lies in (lo, hi].
  while (v_lo - v_hi > 1) {
    Rational mid = (lo + hi) / 2;
    int v_mid = chain.variations(mid);
    if (v_mid - v_hi >= 1) {
      lo = mid;
      v_lo = v_mid;
    } else {
      hi = mid;
      v_hi = v_mid;
    }
  }
  // Exactly one simple root in (lo, hi]; refine by sign alone.
  const IntegerPolynomial& base = chain.base();
  int s_hi = sign_at(base, hi);
  if (s_hi == 0) {
    Rational lower = hi - eps;
    return {lower < lo ? lo : lower, hi};
  }
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    int s_mid = sign_at(base, mid);
    if (s_mid == 0) {
      Rational lower = mid - eps;
      return {lower < lo ? lo : lower, mid};
    }
    if (s_mid != s_hi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RootBracket isolate_max_root(const Polynomial& p, const Rational& l, const Rational& r, const Rational& eps) {
  return isolate_max_root(SturmChain(p), l, r, eps);
}

ExclusionCertificate certify_positive(const Polynomial& p, const SturmChain& chain, const Rational& l,
                                      const Rational& r) {
  require_interval(l, r);
  ExclusionCertificate cert;
  cert.degree = p.degree();
  cert.polynomial_hash = polynomial_hash(p);
  cert.left = l;
  cert.right = r;
  cert.variations_left = chain.variations(l);
  cert.variations_right = chain.variations(r);
  cert.right_closed = sign_at(chain.base(), r) != 0;
  int in_half_open = cert.variations_left - cert.variations_right;
  cert.root_count = in_half_open - (cert.right_closed ? 0 : 1);
  if (cert.root_count != 0) {
    RootBracket bracket = isolate_max_root(chain, l, r, (r - l) / (1 << 20));
    throw RootPresentError("polynomial has " + std::to_string(cert.root_count) + " root(s) in (" +
                               to_string(l) + ", " + to_string(r) + ")",
                           bracket);
  }
  cert.sample = (l + r) / 2;
  cert.sign_at_sample = p.sign_at(cert.sample);
  if (cert.sign_at_sample <= 0) {
    throw Error(ErrorCode::RootPresent, "polynomial is not positive on (" + to_string(l) + ", " + to_string(r) + ")");
  }
  return cert;
}

ExclusionCertificate certify_positive(const Polynomial& p, const Rational& l, const Rational& r) {
  return certify_positive(p, SturmChain(p), l, r);
}

bool check_certificate(const ExclusionCertificate& certificate, const Polynomial& p) {
  if (p.is_zero() || certificate.polynomial_hash != polynomial_hash(p)) return false;
  if (!(certificate.left < certificate.sample && certificate.sample < certificate.right)) return false;
  SturmChain chain(p);
  int v_left = chain.variations(certificate.left);
  int v_right = chain.variations(certificate.right);
  bool right_root = sign_at(chain.base(), certificate.right) == 0;
  if (certificate.right_closed == right_root) return false;
  int roots = v_left - v_right - (right_root ? 1 : 0);
  return v_left == certificate.variations_left && v_right == certificate.variations_right && roots == 0 &&
         certificate.root_count == 0 && p.sign_at(certificate.sample) > 0 && certificate.sign_at_sample > 0;
}

std::string polynomial_hash(const Polynomial& p) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](const std::string& s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const auto& c : p.coefficients()) {
    feed(to_string(c));
    feed(",");
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

Rational shrink_endpoint(const Polynomial& p, Rational l, const Rational& r) {
  const Rational step = pow2(-64);
  while (p.sign_at(l) == 0) {
    l += step;
    if (!(l < r)) throw Error(ErrorCode::InvalidArgument, "interval exhausted while shrinking");
  }
  return l;
}

}  // namespace sgf
