#include "crbr/report.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "crbr/errors.hpp"

namespace crbr {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

int parse_index(std::string_view token, int line_no) {
  if (token.empty()) {
    throw InvalidFamily("family line " + std::to_string(line_no) +
                        ": empty index");
  }
  int value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidFamily("family line " + std::to_string(line_no) +
                          ": bad index '" + std::string(token) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > 64) break;  // anything this large is out of range anyway
  }
  return value;
}

}  // namespace

SubbaseFamily parse_family_text(std::string_view text, int frame_size) {
  std::vector<Subbase> sets;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    std::vector<int> indices;
    std::size_t start = 0;
    while (start <= content.size()) {
      const std::size_t comma = content.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? content.size() : comma;
      indices.push_back(
          parse_index(trim(content.substr(start, end - start)), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }

    Subbase set;
    try {
      set = Subbase::from_indices(indices, frame_size);
    } catch (const InvalidFamily& e) {
      throw InvalidFamily("family line " + std::to_string(line_no) + ": " +
                          e.what());
    }
    for (Subbase existing : sets) {
      if (existing == set) {
        throw InvalidFamily("family line " + std::to_string(line_no) +
                            ": duplicate subbase");
      }
    }
    sets.push_back(set);
  }
  if (sets.empty()) {
    throw InvalidFamily("family file contains no subbases");
  }
  return SubbaseFamily(frame_size, std::move(sets));
}

SubbaseFamily load_family_file(const std::string& path, int frame_size) {
  std::ifstream in(path);
  if (!in) throw InvalidFamily("cannot open family file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family_text(buffer.str(), frame_size);
}

namespace {

nlohmann::json bigint_json(const BigInt& value) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  if (value >= kMin && value <= kMax) return value.convert_to<std::int64_t>();
  return value.str();  // numbers beyond int64 degrade to decimal strings
}

nlohmann::json mass_row(const char* role, Subbase set, const Rational& mass,
                        const Rational& bel) {
  return {{"role", role},
          {"set", subbase_json(set)},
          {"mass", rational_json(mass)},
          {"bel", rational_json(bel)}};
}

nlohmann::json mass_table_json(const CredibilityTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.family.size(); ++i) {
    rows.push_back(mass_row("member", table.family[i], table.member_mass[i],
                            table.member_bel[i]));
  }
  for (std::size_t i = 0; i < table.intersections.size(); ++i) {
    rows.push_back(mass_row("intersection", table.intersections[i],
                            table.intersection_mass[i],
                            table.intersection_bel[i]));
  }
  const Subbase frame = Subbase::full(table.family.frame_size());
  rows.push_back(mass_row("frame", frame, table.combined.mass_of(frame),
                          belief_of(table.combined, frame)));
  return rows;
}

}  // namespace

nlohmann::json rational_json(const Rational& value) {
  return {{"num", bigint_json(numerator(value))},
          {"den", bigint_json(denominator(value))},
          {"dec4", decimal4(value)}};
}

nlohmann::json subbase_json(Subbase s) {
  nlohmann::json indices = nlohmann::json::array();
  for (int i : s.indices()) indices.push_back(i);
  return indices;
}

nlohmann::json family_json(const SubbaseFamily& family) {
  nlohmann::json sets = nlohmann::json::array();
  for (Subbase s : family) sets.push_back(subbase_json(s));
  return sets;
}

nlohmann::json outcome_json(const RevisionOutcome& outcome,
                            const SubbaseFamily& family) {
  nlohmann::json report;
  report["operator"] = operator_name(outcome.op);
  report["mu"] = outcome.mu.render();
  nlohmann::json base = nlohmann::json::array();
  for (const Formula& f : outcome.base.formulas()) base.push_back(f.render());
  report["base"] = base;

  report["family"] = family_json(family);
  if (outcome.table) {
    report["intersections"] = family_json(outcome.table->intersections);
    report["masses"] = mass_table_json(*outcome.table);
    report["conflict"] = rational_json(outcome.table->conflict);
  } else {
    report["intersections"] = family_json(all_intersections(family));
    report["masses"] = nullptr;
    report["conflict"] = nullptr;
  }

  report["selected"] = family_json(outcome.selected);
  report["result"] = outcome.result.render();
  return report;
}

std::string render_report(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

}  // namespace crbr
