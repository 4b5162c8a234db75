#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli/check.hpp"
#include "cli/render.hpp"
#include "dyckdiv/divisors.hpp"
#include "dyckdiv/interval_topology.hpp"
#include "dyckdiv/lambda_class.hpp"

namespace dyckdiv::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lambda;
  std::string format = "text";
  std::string set;
  std::string target;
  std::string kind = "class";
  std::string lambdas;
  int cell_size = 20;
  unsigned threads = 0;
};

// The set under study: the divisors of n, or an explicit --set.
struct Subject {
  std::optional<std::uint64_t> n;
  PositiveSet set;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    items.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

bool is_integer_literal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "': expected an integer, p/q or a finite decimal");
  }
}

Rational parse_lambda(const std::string& text) {
  if (text.empty()) throw UsageError("--lambda is required");
  Rational lambda = parse_rational(text, "lambda");
  if (lambda <= Rational(1)) throw UsageError("lambda must exceed 1, got " + lambda.to_string());
  return lambda;
}

std::uint64_t parse_n(const std::string& text) {
  std::uint64_t n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (!is_integer_literal(text) || ec != std::errc() || end != text.data() + text.size() || n < 1)
    throw UsageError("n must be a positive integer, got '" + text + "'");
  return n;
}

PositiveSet parse_set(const std::string& text) {
  std::vector<Rational> values;
  for (const auto& item : split_list(text)) {
    Rational r = parse_rational(item, "set element");
    if (r.sign() <= 0) throw UsageError("set elements must be positive, got " + r.to_string());
    values.push_back(std::move(r));
  }
  return PositiveSet(std::move(values));
}

Subject resolve_subject(const Options& o) {
  if (!o.set.empty()) {
    if (!o.target.empty()) throw UsageError("give either n or --set, not both");
    return {std::nullopt, parse_set(o.set)};
  }
  if (o.target.empty()) throw UsageError("missing n (or --set)");
  const std::uint64_t n = parse_n(o.target);
  return {n, divisors(n).divisors};
}

std::uint64_t require_integer_subject(const Options& o) {
  if (!o.set.empty()) throw UsageError("this command needs an integer n; --set is not supported");
  if (o.target.empty()) throw UsageError("missing n");
  return parse_n(o.target);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void describe_subject(Json& j, const Subject& s) {
  if (s.n) {
    j["n"] = *s.n;
  } else {
    j["n"] = nullptr;
    Json elements = Json::array();
    for (const auto& r : s.set) elements.push_back(r.to_string());
    j["set"] = elements;
  }
}

// The word named by --kind for (S, λ), embedded over {a, b, c}.
TriWord word_of_kind(const PositiveSet& set, const Rational& lambda, const std::string& kind) {
  if (kind == "hooley") return hooley_class(set, lambda);
  if (kind == "right-limit") return TriWord(right_limit_class(set, lambda));
  return TriWord(lambda_class(set, lambda));
}

// Literal word, or the --kind word of n / --set.
TriWord resolve_word(const Options& o) {
  if (o.set.empty() && !o.target.empty() && !is_integer_literal(o.target)) {
    try {
      return TriWord(o.target);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const Subject s = resolve_subject(o);
  return word_of_kind(s.set, parse_lambda(o.lambda), o.kind);
}

int cmd_word(const Options& o, std::ostream& out) {
  const Subject s = resolve_subject(o);
  const Rational lambda = parse_lambda(o.lambda);
  const ClassWordBundle bundle = make_class_bundle(s.set, lambda);
  const TriWord word = word_of_kind(s.set, lambda, o.kind);
  const bool hooley = o.kind == "hooley";
  const std::size_t factors = hooley ? theta(word) : omega(gamma(word));
  const std::size_t peak = hooley ? height(word) : height(gamma(word));
  const std::size_t count = components(s.set, lambda).count;
  std::optional<bool> dense;
  if (s.n) dense = is_densely_divisible(*s.n, lambda);

  if (o.format == "json") {
    Json j;
    describe_subject(j, s);
    j["lambda"] = lambda.to_string();
    j["kind"] = o.kind;
    j["word"] = word.letters();
    j["length"] = word.size();
    j[hooley ? "theta" : "omega"] = factors;
    j["height"] = peak;
    j["regular"] = bundle.regular;
    j["components"] = count;
    if (dense) j["densely_divisible"] = *dense;
    out << j.dump(2) << '\n';
    return kExitYes;
  }

  out << display(word) << '\n'
      << "kind " << o.kind << ", length " << word.size() << ", " << (hooley ? "theta " : "omega ") << factors
      << ", height " << peak << ", regular " << yes_no(bundle.regular) << ", components " << count;
  if (dense) out << ", densely divisible " << yes_no(*dense);
  out << '\n';
  return kExitYes;
}

int cmd_dense(const Options& o, std::ostream& out) {
  const std::uint64_t n = require_integer_subject(o);
  const Rational lambda = parse_lambda(o.lambda);
  const bool ratio = is_densely_divisible(n, lambda);
  const bool sweep = is_densely_divisible_sweep(n, lambda);
  const bool word = is_densely_divisible_via_word(n, lambda);
  const bool agree = ratio == sweep && sweep == word;

  if (o.format == "json") {
    Json j;
    j["n"] = n;
    j["lambda"] = lambda.to_string();
    if (agree) j["densely_divisible"] = ratio;
    j["deciders"] = {{"ratio", ratio}, {"sweep", sweep}, {"word", word}};
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else if (agree) {
    out << yes_no(ratio) << " (3/3 deciders agree)\n";
  } else {
    out << "disagreement: ratio " << yes_no(ratio) << ", sweep " << yes_no(sweep) << ", word " << yes_no(word)
        << '\n';
  }
  if (!agree) return kExitDisagreement;
  return ratio ? kExitYes : kExitNo;
}

int cmd_delta(const Options& o, std::ostream& out) {
  const std::uint64_t n = require_integer_subject(o);
  const Rational lambda = parse_lambda(o.lambda);
  const std::size_t from_word = delta(n, lambda);
  const std::size_t direct = delta_bruteforce(n, lambda);

  if (o.format == "json") {
    Json j;
    j["n"] = n;
    j["lambda"] = lambda.to_string();
    j["delta"] = from_word;
    j["delta_bruteforce"] = direct;
    j["agree"] = from_word == direct;
    out << j.dump(2) << '\n';
  } else {
    out << from_word << " (path height " << from_word << ", window count " << direct << ")\n";
  }
  return from_word == direct ? kExitYes : kExitDisagreement;
}

int cmd_components(const Options& o, std::ostream& out) {
  const Subject s = resolve_subject(o);
  const Rational lambda = parse_lambda(o.lambda);
  const ComponentReport report = components(s.set, lambda);
  const std::size_t om = omega(lambda_class(s.set, lambda));

  if (o.format == "json") {
    Json j;
    describe_subject(j, s);
    j["lambda"] = lambda.to_string();
    j["components"] = report.count;
    j["omega"] = om;
    Json spans = Json::array();
    for (const auto& span : report.spans) {
      const Rational upper = lambda * span.end;
      spans.push_back({{"start", span.start.to_string()},
                       {"end", span.end.to_string()},
                       {"upper", upper.to_string()},
                       {"log_lower_approx", std::log(span.start.to_double())},
                       {"log_upper_approx", std::log(upper.to_double())}});
    }
    j["spans"] = spans;
    out << j.dump(2) << '\n';
  } else {
    out << report.count << (report.count == 1 ? " component" : " components") << " (omega " << om << ")\n";
    std::ostringstream line;
    line << std::fixed << std::setprecision(6);
    for (const auto& span : report.spans) {
      const Rational upper = lambda * span.end;
      line << "  [" << span.start << ", " << upper << "]  log ~ [" << std::log(span.start.to_double()) << ", "
           << std::log(upper.to_double()) << "]\n";
    }
    out << line.str();
  }
  return report.count == om ? kExitYes : kExitDisagreement;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Subject s = resolve_subject(o);
  if (s.set.empty()) throw UsageError("scan needs a nonempty set");
  const StepFunctionReport steps = step_function(s.set);
  const auto& bps = steps.breakpoints;

  struct Row {
    std::string range;
    std::optional<Rational> from;
    std::size_t omega;
    std::size_t components;
  };
  std::vector<Row> rows;
  const Rational first_probe = bps.empty() ? Rational(2) : (Rational(1) + bps.front()) / Rational(2);
  rows.push_back({"(1, " + (bps.empty() ? std::string("inf") : bps.front().to_string()) + ")", std::nullopt,
                  omega(lambda_class(s.set, first_probe)), steps.values.front()});
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string upper = i + 1 < bps.size() ? bps[i + 1].to_string() : "inf";
    rows.push_back({"[" + bps[i].to_string() + ", " + upper + ")", bps[i], omega(lambda_class(s.set, bps[i])),
                    steps.at_breakpoint[i]});
  }
  const bool consistent =
      steps.right_continuous() && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.omega == r.components; });

  if (o.format == "json") {
    Json j;
    describe_subject(j, s);
    Json breakpoints = Json::array();
    for (const auto& b : bps) breakpoints.push_back(b.to_string());
    j["breakpoints"] = breakpoints;
    Json intervals = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      intervals.push_back({{"from", i == 0 ? Json("1") : Json(bps[i - 1].to_string())},
                           {"to", i < bps.size() ? Json(bps[i].to_string()) : Json(nullptr)},
                           {"includes_from", i != 0},
                           {"omega", rows[i].omega},
                           {"components", rows[i].components}});
    }
    j["intervals"] = intervals;
    j["right_continuous"] = steps.right_continuous();
    j["consistent"] = consistent;
    out << j.dump(2) << '\n';
  } else {
    std::size_t width = 12;
    for (const auto& r : rows) width = std::max(width, r.range.size() + 2);
    out << std::left << std::setw(static_cast<int>(width)) << "lambda" << std::setw(8) << "omega" << "components\n";
    for (const auto& r : rows)
      out << std::setw(static_cast<int>(width)) << r.range << std::setw(8) << r.omega << r.components << '\n';
    out << (consistent ? "omega and component counts agree; right-continuous at every breakpoint\n"
                       : "MISMATCH between omega and component counts\n");
  }
  return consistent ? kExitYes : kExitDisagreement;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec{resolve_word(o), o.format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii, o.cell_size};
  if (spec.word.empty()) throw UsageError("cannot render the empty word");
  if (o.format == "json") {
    Json points = Json::array();
    for (const auto& p : path_points(spec.word)) points.push_back({p.x, p.y});
    out << Json{{"word", spec.word.letters()}, {"points", points}}.dump(2) << '\n';
    return kExitYes;
  }
  out << render(spec);
  return kExitYes;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const TriWord word = resolve_word(o);
  const bool hooley = std::find(word.begin(), word.end(), 'c') != word.end() || o.kind == "hooley";

  std::vector<std::string> factors;
  if (hooley) {
    if (!is_hooley_dyck(word)) throw UsageError("'" + word.letters() + "' is not a Hooley-Dyck word");
    for (const auto& f : hooley_irreducible_factors(word).factors) factors.push_back(f.letters());
  } else {
    const BalancedWord dyck = gamma(word);
    if (!is_dyck(dyck)) throw UsageError("'" + word.letters() + "' is not a Dyck word");
    for (const auto& f : irreducible_factors(dyck).factors) factors.push_back(f.letters());
  }

  if (o.format == "json") {
    Json j;
    j["word"] = word.letters();
    j["factors"] = factors;
    j[hooley ? "theta" : "omega"] = factors.size();
    out << j.dump(2) << '\n';
    return kExitYes;
  }
  out << display(word) << " =";
  if (factors.empty()) out << " ε";
  for (std::size_t i = 0; i < factors.size(); ++i) out << (i == 0 ? " " : " · ") << factors[i];
  out << '\n' << (hooley ? "theta " : "omega ") << factors.size() << '\n';
  return kExitYes;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.target.empty()) throw UsageError("missing n_max");
  const std::uint64_t n_max = parse_n(o.target);
  if (o.lambdas.empty()) throw UsageError("--lambdas is required");
  std::vector<Rational> lambdas;
  for (const auto& item : split_list(o.lambdas)) lambdas.push_back(parse_lambda(item));

  const CheckSummary summary = run_check_battery(n_max, lambdas, o.threads);
  if (o.format == "json") {
    Json j;
    j["n_max"] = n_max;
    j["checks"] = summary.checks;
    j["passed"] = !summary.failure;
    if (summary.failure)
      j["counterexample"] = {{"n", summary.failure->n},
                             {"lambda", summary.failure->lambda.to_string()},
                             {"identity", summary.failure->identity}};
    out << j.dump(2) << '\n';
  } else if (summary.failure) {
    out << "FAILED: " << summary.failure->identity << " at n = " << summary.failure->n
        << ", lambda = " << summary.failure->lambda << '\n';
  } else {
    out << "all " << summary.checks << " checks passed\n";
  }
  return summary.failure ? kExitNo : kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dyck words of divisor sets: factorization, components, dense divisibility", "dyckdiv"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--lambda", o.lambda, "Scale factor > 1: integer, p/q or finite decimal");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "svg", "ascii"}));
  app.add_option("--set", o.set, "Comma-separated positive rationals, used instead of the divisors of n");

  const auto kinds = CLI::IsMember({"class", "hooley", "right-limit"});
  auto* word = app.add_subcommand("word", "Print the class word, Hooley word or right-limit word");
  word->add_option("n", o.target, "Positive integer");
  word->add_option("--kind", o.kind, "class | hooley | right-limit")->check(kinds);

  auto* dense = app.add_subcommand("dense", "Decide dense divisibility (exit 0 yes, 1 no, 2 disagreement)");
  dense->add_option("n", o.target, "Positive integer")->required();

  auto* delta_cmd = app.add_subcommand("delta", "Hooley delta function, by path height and by window count");
  delta_cmd->add_option("n", o.target, "Positive integer")->required();

  auto* comps = app.add_subcommand("components", "Connected components of the union of [s, lambda*s]");
  comps->add_option("n", o.target, "Positive integer");

  auto* scan = app.add_subcommand("scan", "Omega and component count between consecutive singular values");
  scan->add_option("n", o.target, "Positive integer");

  auto* render_cmd = app.add_subcommand("render", "Draw the lattice path of a word as ASCII or SVG");
  render_cmd->add_option("word", o.target, "Word over {a,b,c}, or an integer n with --lambda");
  render_cmd->add_option("--kind", o.kind, "Word to draw when n is given")->check(kinds);
  render_cmd->add_option("--cell-size", o.cell_size, "SVG pixels per unit step")->check(CLI::PositiveNumber);

  auto* factor = app.add_subcommand("factor", "Factor a Dyck or Hooley-Dyck word into irreducibles");
  factor->add_option("word", o.target, "Word over {a,b,c}, or an integer n with --lambda");
  factor->add_option("--kind", o.kind, "Word to factor when n is given")->check(kinds);

  auto* check = app.add_subcommand("check", "Cross-check every identity for n up to n_max");
  check->add_option("n_max", o.target, "Largest n to check")->required();
  check->add_option("--lambdas", o.lambdas, "Comma-separated scale factors > 1");
  check->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*word) return cmd_word(o, out);
    if (*dense) return cmd_dense(o, out);
    if (*delta_cmd) return cmd_delta(o, out);
    if (*comps) return cmd_components(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*render_cmd) return cmd_render(o, out);
    if (*factor) return cmd_factor(o, out);
    if (*check) return cmd_check(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dyckdiv::cli
