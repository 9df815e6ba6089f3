#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "legsurg/algebra/homology.hpp"
#include "legsurg/algebra/integer_matrix.hpp"
#include "legsurg/algebra/smith.hpp"
#include "legsurg/brieskorn/brieskorn.hpp"
#include "legsurg/criterion/criterion.hpp"
#include "legsurg/handle/handle.hpp"
#include "legsurg/legendrian/legendrian.hpp"

namespace legsurg::io {

using json = nlohmann::json;

// Every document the tools emit carries this.
inline constexpr int kSchemaVersion = 1;

// Numbers when they fit in 64 bits, decimal strings otherwise. Parsing
// accepts both and rejects fractional numbers. Malformed input throws UsageError.
json integer_to_json(const algebra::Integer& v);
algebra::Integer integer_from_json(const json& j);

// {"rows": r, "cols": c, "entries": [[...], ...]}
json matrix_to_json(const algebra::IntegerMatrix& m);
algebra::IntegerMatrix matrix_from_json(const json& j);

// {"generators": g, "relations": <matrix>}
algebra::AbelianGroupPresentation presentation_from_json(const json& j);
json group_to_json(const algebra::GroupStructure& g);
// "torsion" or {"d": d}; parsing also accepts a bare positive integer.
json class_info_to_json(const algebra::ClassInfo& c);
algebra::ClassInfo class_info_from_json(const json& j);

json smith_to_json(const algebra::SmithDecomposition& snf);

/// Two stabilizations of the same link, as read from the comparison file:
/// {"components": [{"label", "twisting", "class", "s", "p1", "p2", "rotation"?}],
///  "hypothesis": ..., "class_info": [...]?, "presentation": {...}?}
struct ComparisonInput {
  legendrian::SurgerySpec first;
  legendrian::SurgerySpec second;
  criterion::Hypothesis hypothesis;
  // Per component; filled from "class_info" or computed from "presentation".
  // Empty under the stein-s3 hypothesis.
  std::vector<algebra::ClassInfo> class_info;
  // Rotation numbers of the unstabilized components (stein-s3 only; default 0).
  std::vector<std::int64_t> base_rotation;
};

ComparisonInput comparison_from_json(const json& j);
// Runs the criterion and returns the output document.
json distinguish(const ComparisonInput& input);

json brieskorn_report_to_json(const brieskorn::Report& r);
json handle_report_to_json(const handle::HandleReport& r);

}  // namespace legsurg::io
