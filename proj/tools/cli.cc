#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgf/aperiodicity.h"
#include "sgf/error.h"
#include "sgf/fibonacci.h"
#include "sgf/genfun.h"
#include "sgf/geometric.h"
#include "sgf/json_io.h"
#include "sgf/matrix.h"
#include "sgf/perron.h"
#include "sgf/substitution.h"
#include "sgf/verdict.h"
#include "sgf/word_stream.h"

namespace sgf::cli {

namespace {

constexpr std::size_t kDefaultOrder = 2048;
constexpr int kDecimalDigits = 50;

struct Options {
  std::string file;
  std::string format = "text";
  bool strict = false;
  std::size_t order = kDefaultOrder;
  std::size_t n = 0;
  std::string letter;
  std::string kind = "char";
  VerdictBounds bounds;
  unsigned level = 1;
  std::string tolerance = "1e-8";
  std::string lengths = "natural";
};

Substitution load(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    buffer << in.rdbuf();
  }
  return parse_substitution(buffer.str());
}

char single_letter(const Substitution& s, const std::string& text) {
  if (text.size() != 1 || !s.alphabet().contains(text[0])) {
    throw Error(ErrorCode::InvalidArgument, "--letter must be one letter of the alphabet '" + s.alphabet().letters() + "'");
  }
  return text[0];
}

Json bounds_json(const Options& o) {
  Json j;
  j["max_preperiod"] = o.bounds.max_preperiod;
  j["max_period"] = o.bounds.max_period;
  j["order"] = o.order;
  return j;
}

std::string bounds_text(const Options& o) {
  return "max_preperiod=" + std::to_string(o.bounds.max_preperiod) + " max_period=" +
         std::to_string(o.bounds.max_period) + " order=" + std::to_string(o.order);
}

std::string verdict_text(const SeriesVerdict& v) {
  std::string out = to_string(v.kind);
  if (v.form) out += " " + v.form->to_string();
  if (v.witness) {
    out += " [preperiod " + std::to_string(v.witness->preperiod) + ", period " + std::to_string(v.witness->period) +
           "]";
  }
  if (v.kind == SeriesVerdict::Kind::InconclusiveUpTo) {
    out += " (no witness with preperiod <= " + std::to_string(v.bounds.max_preperiod) + ", period <= " +
           std::to_string(v.bounds.max_period) + ")";
  }
  return out;
}

// Lengths for geom: "natural" or comma-separated exact rationals.
LengthAssignment parse_lengths(const Substitution& s, const std::string& text) {
  if (text == "natural") return natural_lengths(s);
  std::vector<QuadraticReal> lengths;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) lengths.emplace_back(parse_rational(item));
  return explicit_lengths(s, std::move(lengths));
}

struct Analysis {
  Substitution s;
  SubstitutionMatrix matrix;
  PFData pf;
  FixedPointSeed seed;
  AperiodicityVerdict aperiodicity;
  std::vector<LetterVerdicts> letters;
  std::optional<LengthAssignment> lengths;
  std::optional<TwoLetterClassification> geometry;

  bool inconclusive() const {
    if (aperiodicity.kind == AperiodicityVerdict::Kind::InconclusiveUpTo) return true;
    for (const auto& l : letters) {
      if (l.characteristic.kind == SeriesVerdict::Kind::InconclusiveUpTo) return true;
      if (l.position.kind == SeriesVerdict::Kind::InconclusiveUpTo) return true;
    }
    return geometry && geometry->which == TwoLetterClassification::Case::Inconclusive;
  }
};

Analysis analyze(const Substitution& s, const Options& o) {
  Analysis a{s, substitution_matrix(s), {}, {}, {}, {}, {}, {}};
  require_primitive(s);
  a.pf = pf_data(a.matrix);
  a.seed = fixed_point_seed(s);
  a.aperiodicity = aperiodicity_verdict(s, a.pf, o.bounds.max_preperiod, o.bounds.max_period);
  a.letters = letter_verdicts(s, a.seed, a.aperiodicity, o.bounds);
  if (s.size() == 2) {
    a.lengths = natural_lengths(s, a.pf);
    a.geometry = classify_two_letter(s, a.seed, *a.lengths, o.bounds);
  }
  return a;
}

void print_analysis(const Analysis& a, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    Json j;
    Json rules = Json::array();
    for (std::size_t i = 0; i < a.s.size(); ++i) rules.push_back(std::string(1, a.s.alphabet().letter(i)) + "->" + a.s.image(i));
    j["substitution"] = {{"alphabet", a.s.alphabet().letters()}, {"rules", rules}};
    j["matrix"] = to_json(a.matrix);
    j["primitivity_witness"] = *a.pf.primitivity_witness;
    j["pf"] = to_json(a.pf);
    j["seed"] = {{"power", a.seed.power}, {"start_letter", std::string(1, a.seed.start_letter)}};
    j["aperiodicity"] = to_json(a.aperiodicity);
    j["defaults"] = bounds_json(o);
    Json letters = Json::array();
    for (const auto& l : a.letters) {
      Json entry;
      entry["letter"] = std::string(1, l.letter);
      entry["characteristic"] = to_json(l.characteristic);
      entry["position"] = to_json(l.position);
      letters.push_back(std::move(entry));
    }
    j["letters"] = std::move(letters);
    if (a.geometry) {
      Json g;
      Json lengths = Json::array();
      for (const auto& x : a.lengths->lengths) lengths.push_back(to_json(x));
      g["lengths"] = std::move(lengths);
      g["classification"] = to_json(*a.geometry);
      j["geometric"] = std::move(g);
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "substitution: ";
  for (std::size_t i = 0; i < a.s.size(); ++i) {
    out << (i ? "; " : "") << a.s.alphabet().letter(i) << " -> " << a.s.image(i);
  }
  out << "\nmatrix: " << a.matrix.to_string() << "\n";
  out << "primitive: A^" << *a.pf.primitivity_witness << " > 0\n";
  out << "characteristic polynomial: " << a.pf.char_poly.to_string() << "\n";
  out << "minimal polynomial of PF eigenvalue: " << a.pf.min_poly_of_pf.to_string() << "\n";
  out << "PF eigenvalue: ";
  if (a.pf.is_rational) {
    out << to_string(*a.pf.pf_exact) << " (rational)\n";
  } else {
    out << "~" << to_decimal((a.pf.pf_lower + a.pf.pf_upper) / 2, 12) << " (irrational, degree "
        << a.pf.min_poly_of_pf.degree() << ")\n";
  }
  out << "fixed point: sigma^" << a.seed.power << " from " << a.seed.start_letter << "\n";
  out << "aperiodicity: " << to_string(a.aperiodicity.kind);
  if (a.aperiodicity.kind == AperiodicityVerdict::Kind::EventuallyPeriodic) {
    out << " [preperiod " << a.aperiodicity.preperiod << ", period " << a.aperiodicity.period << "]";
  }
  out << "\ndefaults: " << bounds_text(o) << "\n";
  for (const auto& l : a.letters) {
    out << "letter " << l.letter << "\n";
    out << "  C_" << l.letter << ": " << verdict_text(l.characteristic) << "\n";
    out << "  P_" << l.letter << ": " << verdict_text(l.position) << "\n";
  }
  if (a.geometry) {
    out << "natural lengths: " << a.lengths->lengths[0].to_string() << ", " << a.lengths->lengths[1].to_string()
        << "\n";
    out << "geometric: " << to_string(a.geometry->which) << ": " << a.geometry->description << "\n";
  }
}

int cmd_analyze(const Options& o, std::ostream& out) {
  Analysis a = analyze(load(o.file), o);
  print_analysis(a, o, out);
  return o.strict && a.inconclusive() ? kInconclusive : kOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  Substitution s = load(o.file);
  out << fixed_word_prefix(s, fixed_point_seed(s), o.n) << "\n";
  return kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  Substitution s = load(o.file);
  const char letter = single_letter(s, o.letter);
  const FixedPointSeed seed = fixed_point_seed(s);
  TruncatedSeries series =
      o.kind == "char" ? char_series(s, seed, letter, o.order) : position_series(s, seed, letter, o.order);
  if (o.format == "csv") {
    out << "index,value\n";
    for (std::size_t i = 0; i <= series.order(); ++i) out << i << "," << to_string(series[i]) << "\n";
  } else {
    out << to_json(series).dump() << "\n";
  }
  return kOk;
}

int cmd_period(const Options& o, std::ostream& out) {
  Substitution s = load(o.file);
  const char letter = single_letter(s, o.letter);
  const SeriesKind kind = o.kind == "char" ? SeriesKind::Characteristic : SeriesKind::Position;
  SeriesVerdict v = series_verdict(s, fixed_point_seed(s), letter, kind, o.bounds);
  if (o.format == "json") {
    Json j;
    j["letter"] = std::string(1, letter);
    j["kind"] = to_string(kind);
    j["verdict"] = to_json(v);
    out << j.dump(2) << "\n";
  } else {
    out << (kind == SeriesKind::Characteristic ? "C_" : "P_") << letter << ": " << verdict_text(v) << "\n";
    if (!v.citation.empty()) out << "  by: " << v.citation << "\n";
  }
  return o.strict && v.kind == SeriesVerdict::Kind::InconclusiveUpTo ? kInconclusive : kOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const Rational tolerance = parse_rational(o.tolerance);
  PositivityBound b = positivity_bound(o.level, tolerance);
  if (o.format == "json") {
    out << to_json(b).dump(2) << "\n";
    return kOk;
  }
  static const char* names[] = {"R", "S", "T"};
  out << "level: " << b.level << "\n";
  out << "alpha_hat: " << to_string(b.alpha_hat) << "\n";
  out << "alpha_hat_decimal: " << to_decimal(b.alpha_hat, 12) << "\n";
  out << "largest root in: (" << to_decimal(b.alpha_lower, 12) << ", " << to_decimal(b.alpha_hat, 12) << "]\n";
  out << "binding: " << to_char(b.binding) << "\n";
  for (std::size_t i = 0; i < b.certificates.size(); ++i) {
    const auto& c = b.certificates[i];
    out << "certificate " << names[i] << ": degree " << c.degree << ", positive on (alpha_hat, 0], variations "
        << c.variations_left << " -> " << c.variations_right << ", roots in (-1, 0]: " << b.roots_in_unit_interval[i]
        << "\n";
  }
  for (const auto& [pair, c] : b.wide_certificates) {
    out << "certificate " << to_char(pair) << " on (-1, 0]: positive, degree " << c.degree << "\n";
  }
  return kOk;
}

int cmd_geom(const Options& o, std::ostream& out) {
  Substitution s = load(o.file);
  const FixedPointSeed seed = fixed_point_seed(s);
  LengthAssignment lengths = parse_lengths(s, o.lengths);
  GeometricSeries g = geometric_series(s, seed, lengths, o.order);
  std::optional<TwoLetterClassification> classification;
  std::optional<TwoLetterReduction> reduction;
  if (s.size() == 2 && !lengths.approximate) {
    reduction = reduce_two_letter(s, lengths, std::min<std::size_t>(o.order, 1000));
    classification = classify_two_letter(s, seed, lengths, o.bounds);
  }
  if (o.format == "csv") {
    out << "index,exact,decimal\n";
    for (std::size_t i = 0; i < g.coefficients.size(); ++i) {
      out << i << "," << g.coefficients[i].to_string() << "," << g.coefficients[i].to_decimal(kDecimalDigits) << "\n";
    }
  } else if (o.format == "json") {
    Json j;
    Json ls = Json::array();
    for (const auto& x : lengths.lengths) ls.push_back(to_json(x));
    j["lengths"] = std::move(ls);
    j["approximate"] = lengths.approximate;
    if (lengths.approximate) j["error_bound"] = to_json(lengths.error_bound);
    j["order"] = o.order;
    Json endpoints = Json::array();
    for (const auto& x : g.coefficients) endpoints.push_back(to_json(x));
    j["endpoints"] = std::move(endpoints);
    j["identity_verified"] = g.identity_verified;
    if (reduction) {
      j["reduction"] = {{"difference", to_json(reduction->difference)},
                        {"constant", to_json(reduction->constant)},
                        {"identity_verified", reduction->identity_verified}};
    }
    if (classification) j["classification"] = to_json(*classification);
    out << j.dump(2) << "\n";
  } else {
    out << "lengths:";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << (i == 0 ? " " : "; ") << "|I_" << s.alphabet().letter(i) << "| = " << lengths.lengths[i].to_string();
    }
    out << "\n";
    if (lengths.approximate) out << "lengths are rational approximations, residual <= " << to_decimal(lengths.error_bound, 20) << "\n";
    const std::size_t shown = std::min<std::size_t>(g.coefficients.size(), 8);
    out << "endpoints:";
    for (std::size_t i = 0; i < shown; ++i) out << " " << g.coefficients[i].to_string() << ",";
    out << " ...\n";
    out << "(1 - X) G = X C_g up to X^" << o.order << ": " << (g.identity_verified ? "verified" : "FAILED") << "\n";
    if (reduction) {
      out << "C_g = (" << reduction->difference.to_string() << ") C_" << s.alphabet().letter(0) << " + ("
          << reduction->constant.to_string() << ")/(1 - X): " << (reduction->identity_verified ? "verified" : "FAILED")
          << "\n";
    }
    if (classification) out << "classification: " << to_string(classification->which) << ": " << classification->description << "\n";
  }
  if (!g.identity_verified || (reduction && !reduction->identity_verified)) return kPrecondition;
  if (o.strict && classification && classification->which == TwoLetterClassification::Case::Inconclusive) {
    return kInconclusive;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions of substitution sequences", "sgf"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--strict", o.strict, "Exit with code 3 when a verdict is inconclusive");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: matrix, PF data, aperiodicity and per-letter verdicts");
  analyze_cmd->add_option("file", o.file, "Rule file ('-' for stdin)")->required();
  analyze_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--max-preperiod", o.bounds.max_preperiod);
  analyze_cmd->add_option("--max-period", o.bounds.max_period);

  auto* expand_cmd = app.add_subcommand("expand", "Prefix of the fixed word");
  expand_cmd->add_option("file", o.file)->required();
  expand_cmd->add_option("--n", o.n, "Prefix length")->required();

  auto* series_cmd = app.add_subcommand("series", "Coefficients of C_L or P_L");
  series_cmd->add_option("file", o.file)->required();
  series_cmd->add_option("--letter", o.letter)->required();
  series_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"char", "pos"}));
  series_cmd->add_option("--order", o.order);
  series_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* period_cmd = app.add_subcommand("period", "Rationality certificate for one series");
  period_cmd->add_option("file", o.file)->required();
  period_cmd->add_option("--letter", o.letter)->required();
  period_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"char", "pos"}));
  period_cmd->add_option("--max-preperiod", o.bounds.max_preperiod);
  period_cmd->add_option("--max-period", o.bounds.max_period);
  period_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* roots_cmd = app.add_subcommand("roots", "Certified positivity bound for the Fibonacci C_a");
  roots_cmd->add_option("--level", o.level)->check(CLI::Range(1, 6));
  roots_cmd->add_option("--tol", o.tolerance, "Rational or decimal tolerance");
  roots_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* geom_cmd = app.add_subcommand("geom", "Endpoints of the geometric realisation and G(X)");
  geom_cmd->add_option("file", o.file)->required();
  geom_cmd->add_option("--order", o.order);
  geom_cmd->add_option("--lengths", o.lengths, "'natural' or comma-separated rationals");
  geom_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
  geom_cmd->add_option("--max-preperiod", o.bounds.max_preperiod);
  geom_cmd->add_option("--max-period", o.bounds.max_period);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (series_cmd->parsed() && o.format == "text") o.format = "json";

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (expand_cmd->parsed()) return cmd_expand(o, out);
    if (series_cmd->parsed()) return cmd_series(o, out);
    if (period_cmd->parsed()) return cmd_period(o, out);
    if (roots_cmd->parsed()) return cmd_roots(o, out);
    if (geom_cmd->parsed()) return cmd_geom(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_parse_error(e.code()) ? kParseError : kPrecondition;
  }
  return kParseError;
}

}  // namespace sgf::cli
