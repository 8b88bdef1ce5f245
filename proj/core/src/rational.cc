#include "sgf/rational.h"

#include <cctype>

#include "sgf/error.h"

namespace sgf {

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

Rational parse_decimal(std::string_view text) {
  std::string mantissa;
  long exponent = 0;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  bool seen_digit = false;
  bool seen_point = false;
  long fractional_digits = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) ++fractional_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      std::string exp_text(text.substr(i + 1));
      if (exp_text.empty()) throw Error(ErrorCode::InvalidArgument, "bad number: " + std::string(text));
      try {
        std::size_t used = 0;
        exponent = std::stol(exp_text, &used);
        if (used != exp_text.size()) throw Error(ErrorCode::InvalidArgument, "bad exponent");
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidArgument, "bad number: " + std::string(text));
      }
      break;
    } else {
      throw Error(ErrorCode::InvalidArgument, "bad number: " + std::string(text));
    }
  }
  if (!seen_digit) throw Error(ErrorCode::InvalidArgument, "bad number: " + std::string(text));
  Rational result{Integer(mantissa, 10)};
  long scale = exponent - fractional_digits;
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) {
    result *= ten_power;
  } else {
    result /= ten_power;
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return parse_decimal(text);
  }
  Rational result;
  if (result.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "bad rational: " + std::string(text));
  }
  if (result.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  result.canonicalize();
  return result;
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer numerator = abs(value.get_num()) * scale * 2 + value.get_den();
  Integer denominator = value.get_den() * 2;
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  std::string body = scaled.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  std::string out = value < 0 && scaled != 0 ? "-" : "";
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out += ".";
    out += body.substr(body.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

Rational pow2(long exponent) {
  Integer power(1);
  unsigned long magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(power.get_mpz_t(), power.get_mpz_t(), magnitude);
  if (exponent >= 0) return Rational(power);
  Rational result(Integer(1), power);
  return result;
}

int sign(const Rational& value) { return sgn(value); }
int sign(const Integer& value) { return sgn(value); }

}  // namespace sgf
