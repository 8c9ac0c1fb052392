#include "crbr/belief_base.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "crbr/errors.hpp"

namespace crbr {

BeliefBase::BeliefBase(std::vector<Formula> formulas, const Limits& limits)
    : formulas_(std::move(formulas)) {
  if (static_cast<int>(formulas_.size()) > limits.max_base) {
    throw CapExceeded("base has " + std::to_string(formulas_.size()) +
                      " formulas, cap is " + std::to_string(limits.max_base));
  }
  if (formulas_.size() > 64) {
    throw CapExceeded("bases larger than 64 formulas are not representable");
  }
  // Rendering is injective on trees, so rendered text doubles as a structural
  // duplicate key.
  std::set<std::string> seen;
  for (const Formula& f : formulas_) {
    if (!seen.insert(f.render()).second) {
      throw Error("duplicate formula in base: " + f.render());
    }
  }
}

BeliefBase parse_base_text(std::string_view text, const Limits& limits) {
  std::vector<Formula> formulas;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      formulas.push_back(parse_formula(
          std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParseError& e) {
      throw ParseError(e.offset(),
                       "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return BeliefBase(std::move(formulas), limits);
}

BeliefBase load_base_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open base file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_base_text(buffer.str(), limits);
}

}  // namespace crbr
