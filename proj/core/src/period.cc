#include "sgf/period.h"

namespace sgf {

std::vector<Rational> RationalForm::expand(std::size_t terms) const {
  std::vector<Rational> c(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    c[n] = numerator.coefficient(n);
    if (n >= period) c[n] += c[n - period];
  }
  for (unsigned s = 0; s < summation_order; ++s) {
    for (std::size_t n = 1; n < terms; ++n) c[n] += c[n - 1];
  }
  return c;
}

std::string RationalForm::to_string() const {
  std::string numerator_text = "(" + numerator.to_string() + ")";
  unsigned one_minus_x_power = summation_order + (period == 1 ? 1 : 0);
  std::vector<std::string> factors;
  if (one_minus_x_power == 1) factors.push_back("(1 - X)");
  if (one_minus_x_power > 1) factors.push_back("(1 - X)^" + std::to_string(one_minus_x_power));
  if (period > 1) factors.push_back("(1 - X^" + std::to_string(period) + ")");
  std::string denominator;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) denominator += "*";
    denominator += factors[i];
  }
  return numerator_text + "/" + (factors.size() > 1 ? "(" + denominator + ")" : denominator);
}

RationalForm rational_form_from_witness(std::span<const Rational> coefficients, const PeriodWitness& witness) {
  if (witness.period == 0 || coefficients.size() < witness.preperiod + witness.period ||
      !witness_holds(coefficients, witness)) {
    throw Error(ErrorCode::WitnessInvalid, "witness (" + std::to_string(witness.preperiod) + ", " +
                                               std::to_string(witness.period) + ") does not hold");
  }
  const std::size_t N = witness.preperiod;
  const std::size_t d = witness.period;
  std::vector<Rational> p1(coefficients.begin(), coefficients.begin() + static_cast<long>(N));
  std::vector<Rational> p2(coefficients.begin() + static_cast<long>(N), coefficients.begin() + static_cast<long>(N + d));
  Polynomial numerator(std::move(p1));
  numerator -= numerator.shifted(d);
  numerator += Polynomial(std::move(p2)).shifted(N);
  RationalForm form{std::move(numerator), d, 0};
  if (!reexpands_to(form, coefficients)) {
    throw Error(ErrorCode::WitnessInvalid, "rational form does not re-expand to the coefficients");
  }
  return form;
}

bool reexpands_to(const RationalForm& form, std::span<const Rational> coefficients) {
  auto expansion = form.expand(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (expansion[i] != coefficients[i]) return false;
  }
  return true;
}

}  // namespace sgf
