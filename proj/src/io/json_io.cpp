#include "legsurg/io/json_io.hpp"

#include <limits>

#include "legsurg/errors.hpp"

namespace legsurg::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int64_from_json(const json& j, const char* what) {
  try {
    return algebra::to_int64(integer_from_json(j));
  } catch (const OverflowError&) {
    throw UsageError(std::string(what) + " does not fit in 64 bits");
  }
}

std::size_t count_from_json(const json& j, const char* what) {
  const std::int64_t v = int64_from_json(j, what);
  if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::vector<algebra::Integer> vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
  std::vector<algebra::Integer> out;
  for (const auto& e : j) out.push_back(integer_from_json(e));
  return out;
}

json candidate_pair(const brieskorn::Candidate& c) { return json::array({c.m, c.p}); }

}  // namespace

json integer_to_json(const algebra::Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

algebra::Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return algebra::Integer(std::to_string(j.get<std::uint64_t>()));
    return algebra::Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return algebra::parse_integer(j.get<std::string>());
  throw UsageError("expected an integer, got " + j.dump());
}

json matrix_to_json(const algebra::IntegerMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

algebra::IntegerMatrix matrix_from_json(const json& j) {
  const std::size_t rows = count_from_json(require(j, "rows"), "rows");
  const std::size_t cols = count_from_json(require(j, "cols"), "cols");
  const json& entries = require(j, "entries");
  if (!entries.is_array() || entries.size() != rows) {
    throw UsageError("matrix 'entries' must hold " + std::to_string(rows) + " rows");
  }
  algebra::IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      throw UsageError("matrix row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[k]);
  }
  return m;
}

algebra::AbelianGroupPresentation presentation_from_json(const json& j) {
  const std::size_t g = count_from_json(require(j, "generators"), "generators");
  algebra::IntegerMatrix rel = j.contains("relations") ? matrix_from_json(j.at("relations")) : algebra::IntegerMatrix();
  return algebra::AbelianGroupPresentation(g, std::move(rel));
}

json group_to_json(const algebra::GroupStructure& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
  return {{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}, {"group", g.to_string()}};
}

json class_info_to_json(const algebra::ClassInfo& c) {
  if (c.is_torsion()) return "torsion";
  return {{"d", integer_to_json(c.divisibility())}};
}

algebra::ClassInfo class_info_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "torsion") return algebra::ClassInfo::torsion();
  const json& d = j.is_object() ? require(j, "d") : j;
  const algebra::Integer value = integer_from_json(d);
  if (value < 1) throw UsageError("class divisibility must be >= 1, got " + value.get_str());
  return algebra::ClassInfo::non_torsion(value);
}

json smith_to_json(const algebra::SmithDecomposition& snf) {
  json diag = json::array();
  for (const auto& e : snf.diagonal()) diag.push_back(integer_to_json(e));
  return {{"U", matrix_to_json(snf.u)},
          {"D", matrix_to_json(snf.d)},
          {"V", matrix_to_json(snf.v)},
          {"diagonal", std::move(diag)},
          {"rank", snf.rank()}};
}

ComparisonInput comparison_from_json(const json& j) {
  const json& comps = require(j, "components");
  if (!comps.is_array() || comps.empty()) throw UsageError("'components' must be a nonempty array");
  const auto hypothesis = criterion::parse_hypothesis(require(j, "hypothesis").get<std::string>());

  std::vector<legendrian::SurgeryComponent> first;
  std::vector<legendrian::SurgeryComponent> second;
  std::vector<std::int64_t> rotation;
  for (const auto& c : comps) {
    legendrian::FramedLegendrian knot;
    knot.label = c.contains("label") ? c.at("label").get<std::string>() : "K" + std::to_string(first.size() + 1);
    knot.twisting = c.contains("twisting") ? int64_from_json(c.at("twisting"), "twisting") : 0;
    if (c.contains("class")) knot.class_ref = vector_from_json(c.at("class"), "class");
    if (c.contains("background")) knot.background = c.at("background").get<std::string>();
    const std::int64_t s = int64_from_json(require(c, "s"), "s");
    const std::int64_t p1 = int64_from_json(require(c, "p1"), "p1");
    const std::int64_t p2 = int64_from_json(require(c, "p2"), "p2");
    first.push_back({knot, legendrian::StabilizationProfile(s, p1)});
    second.push_back({knot, legendrian::StabilizationProfile(s, p2)});
    rotation.push_back(c.contains("rotation") ? int64_from_json(c.at("rotation"), "rotation") : 0);
  }

  ComparisonInput in{legendrian::SurgerySpec(std::move(first)), legendrian::SurgerySpec(std::move(second)),
                     hypothesis, {}, std::move(rotation)};
  if (hypothesis == criterion::Hypothesis::SteinS3) return in;

  if (j.contains("class_info")) {
    const json& ci = j.at("class_info");
    if (!ci.is_array() || ci.size() != comps.size()) {
      throw UsageError("'class_info' needs one entry per component");
    }
    for (const auto& e : ci) in.class_info.push_back(class_info_from_json(e));
  } else if (j.contains("presentation")) {
    const auto group = presentation_from_json(j.at("presentation"));
    for (const auto& c : in.first.components) {
      in.class_info.push_back(algebra::class_divisibility(group, c.knot.class_ref));
    }
  } else {
    throw UsageError("either 'class_info' or 'presentation' is required for this hypothesis");
  }
  return in;
}

json distinguish(const ComparisonInput& in) {
  const auto& a = in.first.components;
  const auto& b = in.second.components;
  json components = json::array();
  criterion::Verdict verdict;

  if (in.hypothesis == criterion::Hypothesis::SteinS3) {
    std::vector<std::int64_t> rot1;
    std::vector<std::int64_t> rot2;
    for (std::size_t i = 0; i < a.size(); ++i) {
      rot1.push_back(in.base_rotation[i] + a[i].profile.rotation_offset());
      rot2.push_back(in.base_rotation[i] + b[i].profile.rotation_offset());
    }
    const auto chern1 = legendrian::stein_chern_values(rot1);
    const auto chern2 = legendrian::stein_chern_values(rot2);
    verdict = criterion::stein_decide(chern1, chern2);
    for (std::size_t i = 0; i < a.size(); ++i) {
      components.push_back({{"label", a[i].knot.label},
                            {"rotation1", chern1[i]},
                            {"rotation2", chern2[i]},
                            {"surgery_framing", legendrian::surgery_framing(a[i].knot, a[i].profile)}});
    }
  } else {
    std::vector<criterion::ComponentComparison> cmp;
    for (std::size_t i = 0; i < a.size(); ++i) {
      cmp.emplace_back(a[i].profile.s(), a[i].profile.p(), b[i].profile.p(), in.class_info[i]);
      components.push_back({{"label", a[i].knot.label},
                            {"s", a[i].profile.s()},
                            {"p1", a[i].profile.p()},
                            {"p2", b[i].profile.p()},
                            {"relative_chern", legendrian::relative_chern(a[i].profile, b[i].profile)},
                            {"class_info", class_info_to_json(in.class_info[i])},
                            {"forces_non_isotopy", criterion::decide_component(cmp.back())},
                            {"surgery_framing", legendrian::surgery_framing(a[i].knot, a[i].profile)}});
    }
    verdict = criterion::decide(cmp, in.hypothesis);
  }
  return {{"schema", kSchemaVersion},
          {"hypothesis", std::string(criterion::to_string(in.hypothesis))},
          {"verdict", std::string(verdict.tag())},
          {"witnesses", verdict.witnesses},
          {"components", std::move(components)}};
}

json brieskorn_report_to_json(const brieskorn::Report& r) {
  json candidates = json::array();
  for (const auto& c : r.candidates) candidates.push_back(candidate_pair(c));
  json clique = json::array();
  for (std::size_t i : r.clique) clique.push_back(candidate_pair(r.candidates[i]));
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"a", candidate_pair(r.candidates[p.a])},
                     {"b", candidate_pair(r.candidates[p.b])},
                     {"verdict", std::string(p.verdict.tag())}});
  }
  json twisting = json::array();
  for (std::size_t k = 0; k < r.twisting.size(); ++k) {
    const auto& t = r.twisting[k];
    const long m = static_cast<long>(k) + 1;
    twisting.push_back({{"m", m},
                        {"t", t.t},
                        {"n1", t.n1},
                        {"n2", t.n2},
                        {"slope_T3", t.slope_t3.to_string()},
                        {"slope_V3", t.slope_v3.to_string()},
                        {"solid_torus_count", integer_to_json(torus::solid_torus_tight_count(t.slope_v3))},
                        {"surgery_consistent", brieskorn::surgery_consistency(r.n, m)}});
  }
  return {{"schema", kSchemaVersion},
          {"n", r.n},
          {"candidates", std::move(candidates)},
          {"upper_bound", r.upper_bound},
          {"lower_bound", r.lower_bound},
          {"clique", std::move(clique)},
          {"pairs", std::move(pairs)},
          {"twisting", std::move(twisting)}};
}

json handle_report_to_json(const handle::HandleReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"checks", std::move(checks)}};
}

}  // namespace legsurg::io
