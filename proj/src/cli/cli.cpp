#include "legsurg/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "legsurg/algebra/homology.hpp"
#include "legsurg/algebra/smith.hpp"
#include "legsurg/brieskorn/brieskorn.hpp"
#include "legsurg/errors.hpp"
#include "legsurg/handle/handle.hpp"
#include "legsurg/io/json_io.hpp"
#include "legsurg/torus/torus.hpp"

namespace legsurg::cli {

namespace {

using io::json;

// The pairwise listing grows like n^4.
constexpr long kMaxBrieskornN = 40;
constexpr std::size_t kMaxSamples = 100000;
constexpr std::uint64_t kSampleSeed = 20240601;

// Read failures are malformed-input errors (exit 2).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

template <typename T>
std::vector<T> split_list(const std::string& text, const std::string& flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw ArgError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw ArgError(flag + ": empty list");
  return out;
}

void emit(std::ostream& out, json doc) {
  doc["schema"] = io::kSchemaVersion;
  out << doc.dump(2) << '\n';
}

std::string pair_text(const brieskorn::Candidate& c) {
  return "(" + std::to_string(c.m) + "," + std::to_string(c.p) + ")";
}

int run_brieskorn(const BrieskornCmd& c, bool pretty, std::ostream& out) {
  if (c.n > kMaxBrieskornN) {
    throw DomainError("n = " + std::to_string(c.n) + " exceeds the supported maximum " +
                      std::to_string(kMaxBrieskornN));
  }
  const auto report = brieskorn::build_report(c.n);
  if (!pretty) {
    emit(out, io::brieskorn_report_to_json(report));
    return 0;
  }
  out << "-Sigma(2,3," << 6 * c.n - 1 << ")  n = " << c.n << "\n";
  out << "upper bound  " << report.upper_bound << "\n";
  out << "lower bound  " << report.lower_bound << "\n";
  out << "clique      ";
  for (std::size_t i : report.clique) out << ' ' << pair_text(report.candidates[i]);
  out << "\n\n  m      t     n1     n2  slope(T3)  slope(V3)\n";
  for (std::size_t k = 0; k < report.twisting.size(); ++k) {
    const auto& t = report.twisting[k];
    out << std::setw(3) << k + 1 << std::setw(7) << t.t << std::setw(7) << t.n1 << std::setw(7) << t.n2
        << std::setw(11) << t.slope_t3.to_string() << std::setw(11) << t.slope_v3.to_string() << "\n";
  }
  out << "\npairs\n";
  for (const auto& p : report.pairs) {
    out << "  " << std::setw(8) << pair_text(report.candidates[p.a]) << " vs " << std::setw(8) << std::left
        << pair_text(report.candidates[p.b]) << std::right << "  " << p.verdict.tag() << "\n";
  }
  return 0;
}

int run_distinguish(const DistinguishCmd& c, bool pretty, std::ostream& out) {
  const json doc = io::distinguish(io::comparison_from_json(read_json_file(c.input)));
  if (!pretty) {
    emit(out, doc);
    return 0;
  }
  out << "hypothesis  " << doc["hypothesis"].get<std::string>() << "\n";
  out << "verdict     " << doc["verdict"].get<std::string>() << "\n";
  for (std::size_t i = 0; i < doc["components"].size(); ++i) {
    out << "  [" << i << "] " << doc["components"][i].dump() << "\n";
  }
  return 0;
}

int run_slopes(const SlopesCmd& c, bool pretty, std::ostream& out) {
  const auto slopes = torus::boundary_slopes(c.n, c.n1, c.n2, c.n3);
  const auto split = torus::brieskorn_splitting(c.n);
  const auto seifert = split.seifert();
  if (pretty) {
    out << "n = " << c.n << "  (n1, n2, n3) = (" << c.n1 << ", " << c.n2 << ", " << c.n3 << ")\n";
    for (std::size_t i = 0; i < 3; ++i) out << "  s" << i + 1 << " = " << slopes[i].to_string() << "\n";
    out << "  e(M) = " << torus::euler_number(seifert).to_string() << "\n";
    return 0;
  }
  json coeffs = json::array();
  for (const auto& r : seifert.coefficients) coeffs.push_back(r.to_string());
  emit(out, {{"n", c.n},
             {"n1", c.n1},
             {"n2", c.n2},
             {"n3", c.n3},
             {"slopes", {slopes[0].to_string(), slopes[1].to_string(), slopes[2].to_string()}},
             {"gluing",
              {{"phi1", io::matrix_to_json(split.phi1.matrix())},
               {"phi2", io::matrix_to_json(split.phi2.matrix())},
               {"phi3", io::matrix_to_json(split.phi3.matrix())}}},
             {"seifert", std::move(coeffs)},
             {"euler_number", torus::euler_number(seifert).to_string()}});
  return 0;
}

int run_homology(const HomologyCmd& c, bool pretty, std::ostream& out) {
  std::string source;
  std::optional<algebra::AbelianGroupPresentation> group;
  if (c.input) {
    source = "linking-matrix";
    group = algebra::surgery_h1_s3(io::matrix_from_json(read_json_file(*c.input)));
  } else {
    source = "mapping-torus";
    const auto& e = *c.mapping_torus;
    group = algebra::mapping_torus_h1(algebra::IntegerMatrix{{e[0], e[1]}, {e[2], e[3]}});
  }
  const auto structure = group->structure();
  json doc = io::group_to_json(structure);
  doc["source"] = source;
  doc["generators"] = group->generators();
  doc["relations"] = io::matrix_to_json(group->relations());
  if (c.class_vector) {
    std::vector<algebra::Integer> k(c.class_vector->begin(), c.class_vector->end());
    doc["class_info"] = io::class_info_to_json(algebra::class_divisibility(*group, k));
  }
  if (pretty) {
    out << source << ": H1 = " << structure.to_string() << "\n";
    if (doc.contains("class_info")) out << "class: " << doc["class_info"].dump() << "\n";
    return 0;
  }
  emit(out, std::move(doc));
  return 0;
}

int run_verify_handle(const VerifyHandleCmd& c, bool pretty, std::ostream& out) {
  if (c.a <= algebra::Rational(1)) throw DomainError("--A must exceed 1, got " + c.a.to_string());
  const auto report = handle::verify_handle_identities();

  const auto x_minus = handle::sample_x_minus(c.samples, kSampleSeed);
  const auto positivity = handle::contact_positivity_batch(x_minus);
  const bool all_positive = std::all_of(positivity.begin(), positivity.end(),
                                        [](const algebra::Rational& v) { return v.sign() > 0; });

  const auto seed = handle::sigma_seed(c.a);
  const auto sigma = handle::sample_sigma(c.a, c.samples, kSampleSeed);
  const auto flux = handle::transversality_batch(c.a, sigma);
  const bool flux_positive =
      std::all_of(flux.begin(), flux.end(), [](const algebra::Rational& v) { return v.sign() > 0; });

  const auto points = handle::random_points(c.samples, kSampleSeed);
  const auto params = handle::random_parameters(c.samples, kSampleSeed);
  const auto evaluated = handle::evaluate_identities_batch(handle::standard_handle_data(), points, params);
  bool agrees = true;
  for (const auto& row : evaluated)
    for (std::size_t i = 0; i < row.size(); ++i) agrees = agrees && row[i] == report.checks[i].pass;

  const bool ok = report.all_pass() && all_positive && flux_positive && agrees;

  if (pretty) {
    for (const auto& item : report.checks) {
      out << (item.pass ? "PASS  " : "FAIL  ") << std::setw(15) << std::left << item.name << std::right
          << item.detail << "\n";
    }
    out << "contact positivity on X-: " << x_minus.size() << " points, "
        << (all_positive ? "all positive" : "NOT all positive") << "\n";
    out << "transversality on F = 0 (A = " << c.a.to_string() << "): " << sigma.size() << " points, "
        << (flux_positive ? "all positive" : "NOT all positive") << "\n";
    out << "pointwise evaluation agrees with symbolic verdicts: " << (agrees ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }

  json doc = io::handle_report_to_json(report);
  doc["A"] = c.a.to_string();
  doc["orientation"] = "(v2, b1, b2, b3) positive for dx1^dy1^dx2^dy2; v2 is the outward normal of X-";
  std::string min_value = positivity.empty() ? "" : std::min_element(positivity.begin(), positivity.end())->to_string();
  json seed_json = nullptr;
  if (seed) {
    seed_json = json::array();
    for (const auto& v : *seed) seed_json.push_back(v.to_string());
  }
  doc["samples"] = {
      {"requested", c.samples},
      {"contact_positivity", {{"points", x_minus.size()}, {"all_positive", all_positive}, {"min", min_value}}},
      {"transversality", {{"points", sigma.size()}, {"all_positive", flux_positive}, {"seed", seed_json}}},
      {"evaluation_crosscheck", {{"points", points.size()}, {"agrees", agrees}}}};
  doc["pass"] = ok;
  emit(out, std::move(doc));
  return ok ? 0 : 1;
}

int run_snf(const SnfCmd& c, bool pretty, std::ostream& out) {
  const auto snf = algebra::smith_normal_form(io::matrix_from_json(read_json_file(c.input)));
  if (pretty) {
    out << "D = " << snf.d.to_string() << "\nU = " << snf.u.to_string() << "\nV = " << snf.v.to_string() << "\n";
    return 0;
  }
  emit(out, io::smith_to_json(snf));
  return 0;
}

int emit_error(std::ostream& out, const std::string& kind, const std::string& message, int code,
               const std::string& residual = {}) {
  json doc = {{"error", message}, {"kind", kind}};
  if (!residual.empty()) doc["residual"] = residual;
  emit(out, std::move(doc));
  return code;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for Legendrian surgery and tight structures on -Sigma(2,3,6n-1)", "legsurg"};
  app.require_subcommand(1, 1);
  bool pretty = false;
  bool json_flag = false;
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.fallthrough();

  BrieskornCmd bk{};
  auto* brieskorn = app.add_subcommand("brieskorn", "Candidates, bounds and pair verdicts for -Sigma(2,3,6n-1)");
  brieskorn->add_option("--n", bk.n, "n >= 2")->required();

  DistinguishCmd dist;
  auto* distinguish = app.add_subcommand("distinguish", "Compare two stabilizations of a Legendrian link");
  distinguish->add_option("--input", dist.input, "Comparison JSON file")->required();

  SlopesCmd sl{};
  auto* slopes = app.add_subcommand("slopes", "Dividing slopes on the three boundary tori");
  slopes->add_option("--n", sl.n, "n >= 2")->required();
  slopes->add_option("--n1", sl.n1, "twisting of the first singular fibre (< 0)")->required();
  slopes->add_option("--n2", sl.n2, "twisting of the second singular fibre (< 0)")->required();
  slopes->add_option("--n3", sl.n3, "twisting of the third singular fibre (< 0)")->required();

  std::string hom_input;
  std::string hom_torus;
  std::string hom_class;
  auto* homology = app.add_subcommand("homology", "First homology from a linking matrix or a torus bundle");
  auto* hom_input_opt = homology->add_option("--input", hom_input, "Linking matrix JSON file");
  auto* hom_torus_opt = homology->add_option("--mapping-torus", hom_torus, "Monodromy entries a,b,c,d");
  homology->add_option("--class", hom_class, "Class vector k1,k2,... to test for divisibility");
  hom_input_opt->excludes(hom_torus_opt);

  VerifyHandleCmd vh;
  std::size_t samples = vh.samples;
  std::string a_text = "2";
  auto* verify = app.add_subcommand("verify-handle", "Symbolic checks of the standard 2-handle formulas");
  verify->add_option("--samples", samples, "Sample points per pointwise check");
  verify->add_option("--A", a_text, "Handle parameter A > 1, as p/q");

  SnfCmd snf;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--input", snf.input, "Matrix JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ArgError(e.what());
  }
  if (pretty && json_flag) throw ArgError("--pretty and --json are mutually exclusive");

  Command cmd;
  cmd.pretty = pretty;
  if (brieskorn->parsed()) {
    cmd.action = bk;
  } else if (distinguish->parsed()) {
    cmd.action = dist;
  } else if (slopes->parsed()) {
    cmd.action = sl;
  } else if (homology->parsed()) {
    HomologyCmd h;
    if (!hom_input.empty()) {
      h.input = hom_input;
    } else if (!hom_torus.empty()) {
      const auto e = split_list<long>(hom_torus, "--mapping-torus");
      if (e.size() != 4) throw ArgError("--mapping-torus: expected four entries a,b,c,d");
      h.mapping_torus = std::array<long, 4>{e[0], e[1], e[2], e[3]};
    } else {
      throw ArgError("homology: one of --input or --mapping-torus is required");
    }
    if (!hom_class.empty()) h.class_vector = split_list<long>(hom_class, "--class");
    cmd.action = h;
  } else if (verify->parsed()) {
    if (samples > kMaxSamples) throw ArgError("--samples: at most " + std::to_string(kMaxSamples));
    vh.samples = samples;
    try {
      vh.a = algebra::Rational::parse(a_text);
    } catch (const std::exception&) {
      throw ArgError("--A: '" + a_text + "' is not a rational p/q");
    }
    cmd.action = vh;
  } else {
    cmd.action = snf;
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out) {
  std::ostringstream buffer;
  int code = 0;
  try {
    code = std::visit(
        [&](const auto& c) -> int {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, BrieskornCmd>) return run_brieskorn(c, cmd.pretty, buffer);
          if constexpr (std::is_same_v<T, DistinguishCmd>) return run_distinguish(c, cmd.pretty, buffer);
          if constexpr (std::is_same_v<T, SlopesCmd>) return run_slopes(c, cmd.pretty, buffer);
          if constexpr (std::is_same_v<T, HomologyCmd>) return run_homology(c, cmd.pretty, buffer);
          if constexpr (std::is_same_v<T, VerifyHandleCmd>) return run_verify_handle(c, cmd.pretty, buffer);
          if constexpr (std::is_same_v<T, SnfCmd>) return run_snf(c, cmd.pretty, buffer);
        },
        cmd.action);
  } catch (const InputError& e) {
    return emit_error(out, "input", e.what(), 2);
  } catch (const UsageError& e) {
    return emit_error(out, "usage", e.what(), 2);
  } catch (const json::exception& e) {
    return emit_error(out, "input", e.what(), 2);
  } catch (const PreconditionError& e) {
    return emit_error(out, "precondition", e.what(), 1, e.residual());
  } catch (const DomainError& e) {
    return emit_error(out, "domain", e.what(), 1);
  } catch (const OverflowError& e) {
    return emit_error(out, "overflow", e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error(out, "internal", e.what(), 1);
  }
  out << buffer.str();
  return code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const ArgError& e) {
    return emit_error(out, "arguments", e.what(), 2);
  }
  return run(cmd, out);
}

}  // namespace legsurg::cli
