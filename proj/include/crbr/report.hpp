#ifndef CRBR_REPORT_HPP
#define CRBR_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "crbr/evidence.hpp"
#include "crbr/rational.hpp"
#include "crbr/revision.hpp"
#include "crbr/subbase.hpp"

namespace crbr {

// Family file format: one subbase per line as comma-separated 0-based indices
// into the base; blank lines and '#' comments are skipped. Out-of-range
// indices, repeated indices, duplicate lines, empty lines-with-commas and an
// entirely empty family all throw InvalidFamily (with the line number).
SubbaseFamily parse_family_text(std::string_view text, int frame_size);
SubbaseFamily load_family_file(const std::string& path, int frame_size);

// JSON building blocks. nlohmann::json with sorted object keys, so a given
// input always serialises to the same bytes.
nlohmann::json rational_json(const Rational& value);
nlohmann::json subbase_json(Subbase s);
nlohmann::json family_json(const SubbaseFamily& family);

// The report for one revision outcome: operator, mu, base, family,
// intersections, per-set masses (exact and 4-decimal) with Bel values, the
// conflict, the selected sets and the result formula. Evidential fields are
// null for the operators that never look at masses. `family` is the family
// the operator ran on (enumerated or supplied).
nlohmann::json outcome_json(const RevisionOutcome& outcome,
                            const SubbaseFamily& family);

std::string render_report(const nlohmann::json& report);

}  // namespace crbr

#endif  // CRBR_REPORT_HPP
