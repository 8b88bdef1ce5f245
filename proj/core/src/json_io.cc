#include "sgf/json_io.h"

#include "sgf/error.h"

namespace sgf {

namespace {

constexpr int kDecimalDigits = 20;

Json coefficient_array(const std::vector<Rational>& coefficients) {
  Json out = Json::array();
  for (const auto& c : coefficients) out.push_back(to_string(c));
  return out;
}

std::vector<Rational> coefficients_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& c : j) out.push_back(rational_from_json(c));
  return out;
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "expected an exact rational string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const TruncatedSeries& series) {
  Json out;
  out["order"] = series.order();
  out["coefficients"] = coefficient_array(series.coefficients());
  return out;
}

Json to_json(const Polynomial& p) {
  Json out;
  out["order"] = p.degree();
  out["coefficients"] = coefficient_array(p.coefficients());
  return out;
}

Json to_json(const RationalForm& form) {
  Json out;
  out["numerator"] = coefficient_array(form.numerator.coefficients());
  out["period_d"] = form.period;
  out["summation_order"] = form.summation_order;
  out["display"] = form.to_string();
  return out;
}

RationalForm rational_form_from_json(const Json& j) {
  RationalForm form;
  form.numerator = Polynomial(coefficients_from_json(j.at("numerator")));
  form.period = j.at("period_d").get<std::size_t>();
  form.summation_order = j.value("summation_order", 0U);
  return form;
}

Json to_json(const QuadraticReal& x) {
  Json out;
  out["a"] = to_string(x.rational_part());
  out["b"] = to_string(x.surd_part());
  out["D"] = x.radicand();
  return out;
}

QuadraticReal quadratic_from_json(const Json& j) {
  return QuadraticReal(rational_from_json(j.at("a")), rational_from_json(j.at("b")), j.at("D").get<std::int64_t>());
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const PFData& pf) {
  Json out;
  out["char_poly"] = to_json(pf.char_poly);
  out["min_poly"] = to_json(pf.min_poly_of_pf);
  out["min_poly_display"] = pf.min_poly_of_pf.to_string();
  out["pf_lower"] = to_json(pf.pf_lower);
  out["pf_upper"] = to_json(pf.pf_upper);
  out["pf_decimal"] = to_decimal((pf.pf_lower + pf.pf_upper) / 2, 12);
  out["is_rational"] = pf.is_rational;
  out["pf_exact"] = pf.pf_exact ? Json(to_string(*pf.pf_exact)) : Json(nullptr);
  out["primitivity_witness"] = pf.primitivity_witness ? Json(*pf.primitivity_witness) : Json(nullptr);
  return out;
}

Json to_json(const AperiodicityVerdict& verdict) {
  Json out;
  out["kind"] = to_string(verdict.kind);
  switch (verdict.kind) {
    case AperiodicityVerdict::Kind::EventuallyPeriodic:
      out["preperiod"] = verdict.preperiod;
      out["period"] = verdict.period;
      break;
    case AperiodicityVerdict::Kind::InconclusiveUpTo:
      out["prefix_bound"] = verdict.prefix_bound;
      out["period_bound"] = verdict.period_bound;
      break;
    case AperiodicityVerdict::Kind::AperiodicByIrrationalPF:
      break;
  }
  return out;
}

Json to_json(const SeriesVerdict& verdict) {
  Json out;
  out["kind"] = to_string(verdict.kind);
  if (verdict.form) out["form"] = to_json(*verdict.form);
  if (verdict.witness) out["witness"] = Json{{"preperiod", verdict.witness->preperiod}, {"period", verdict.witness->period}};
  if (!verdict.citation.empty()) out["citation"] = verdict.citation;
  out["bounds"] = Json{{"max_preperiod", verdict.bounds.max_preperiod}, {"max_period", verdict.bounds.max_period}};
  return out;
}

Json to_json(const RootBracket& bracket) {
  return Json::array({to_string(bracket.lower), to_string(bracket.upper)});
}

Json to_json(const ExclusionCertificate& certificate) {
  Json out;
  out["degree"] = certificate.degree;
  out["polynomial_hash"] = certificate.polynomial_hash;
  out["left"] = to_json(certificate.left);
  out["right"] = to_json(certificate.right);
  out["right_closed"] = certificate.right_closed;
  out["variations_left"] = certificate.variations_left;
  out["variations_right"] = certificate.variations_right;
  out["root_count"] = certificate.root_count;
  out["sample"] = to_json(certificate.sample);
  out["sign_at_sample"] = certificate.sign_at_sample;
  return out;
}

ExclusionCertificate certificate_from_json(const Json& j) {
  ExclusionCertificate c;
  c.degree = j.at("degree").get<int>();
  c.polynomial_hash = j.at("polynomial_hash").get<std::string>();
  c.left = rational_from_json(j.at("left"));
  c.right = rational_from_json(j.at("right"));
  c.right_closed = j.at("right_closed").get<bool>();
  c.variations_left = j.at("variations_left").get<int>();
  c.variations_right = j.at("variations_right").get<int>();
  c.root_count = j.at("root_count").get<int>();
  c.sample = rational_from_json(j.at("sample"));
  c.sign_at_sample = j.at("sign_at_sample").get<int>();
  return c;
}

Json to_json(const PositivityBound& bound) {
  Json out;
  out["level"] = bound.level;
  out["alpha_hat"] = to_json(bound.alpha_hat);
  out["binding"] = std::string(1, to_char(bound.binding));
  Json certs = Json::array();
  for (const auto& c : bound.certificates) certs.push_back(to_json(c));
  out["certs"] = std::move(certs);
  out["alpha_lower"] = to_json(bound.alpha_lower);
  out["alpha_hat_decimal"] = to_decimal(bound.alpha_hat, kDecimalDigits);
  out["roots_in_unit_interval"] = bound.roots_in_unit_interval;
  Json wide = Json::array();
  for (const auto& [pair, c] : bound.wide_certificates) {
    Json entry;
    entry["polynomial"] = std::string(1, to_char(pair));
    entry["cert"] = to_json(c);
    wide.push_back(std::move(entry));
  }
  out["unit_interval_certs"] = std::move(wide);
  return out;
}

Json to_json(const TwoLetterClassification& classification) {
  Json out;
  out["case"] = to_string(classification.which);
  out["first_length"] = to_json(classification.first_length);
  out["second_length"] = to_json(classification.second_length);
  if (classification.first_letter_form) out["first_letter_form"] = to_json(*classification.first_letter_form);
  out["closed_form_verified"] = classification.closed_form_verified;
  out["description"] = classification.description;
  return out;
}

}  // namespace sgf
