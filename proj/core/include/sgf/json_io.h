#pragma once

#include <nlohmann/json.hpp>

#include "sgf/aperiodicity.h"
#include "sgf/fibonacci.h"
#include "sgf/geometric.h"
#include "sgf/matrix.h"
#include "sgf/perron.h"
#include "sgf/period.h"
#include "sgf/polynomial.h"
#include "sgf/quadratic.h"
#include "sgf/rational.h"
#include "sgf/realroots.h"
#include "sgf/series.h"
#include "sgf/verdict.h"

namespace sgf {

// Insertion-ordered, so every dump uses the field order below. Numbers are
// exact rational strings; the only floats are fields named *_decimal, and
// those are strings too.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

// {"order": N, "coefficients": [...]}
Json to_json(const TruncatedSeries& series);
Json to_json(const Polynomial& p);
// {"numerator": [...], "period_d": d, "summation_order": m}
Json to_json(const RationalForm& form);
RationalForm rational_form_from_json(const Json& j);
// {"a": ..., "b": ..., "D": d}
Json to_json(const QuadraticReal& x);
QuadraticReal quadratic_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const PFData& pf);
Json to_json(const AperiodicityVerdict& verdict);
Json to_json(const SeriesVerdict& verdict);
Json to_json(const RootBracket& bracket);
Json to_json(const ExclusionCertificate& certificate);
ExclusionCertificate certificate_from_json(const Json& j);
// {"level", "alpha_hat", "binding", "certs", ...}
Json to_json(const PositivityBound& bound);
Json to_json(const TwoLetterClassification& classification);

}  // namespace sgf
