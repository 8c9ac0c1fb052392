#include "crbr/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "crbr/belief_base.hpp"
#include "crbr/errors.hpp"
#include "crbr/report.hpp"
#include "crbr/revision.hpp"

namespace crbr {

namespace {

int env_int(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  try {
    return std::stoi(value);
  } catch (...) {
    return fallback;  // unusable env values are ignored
  }
}

std::string subbase_text(Subbase s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string mass_text(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str() + " (" +
         decimal4(value) + ")";
}

struct CommandInput {
  BeliefBase base;
  Formula mu;
  SubbaseFamily family;
  bool family_supplied = false;
  Limits limits;
};

bool member_consistent(const CommandInput& in, Subbase s) {
  std::vector<Formula> query = s.formulas(in.base);
  query.push_back(in.mu);
  return is_satisfiable(query, in.limits);
}

int cmd_revise(const CommandInput& in, const std::string& op_name,
               const std::string& format, std::ostream& out) {
  const OperatorKind op = parse_operator(op_name);
  const RevisionOutcome outcome =
      revise_with_family(in.base, in.mu, op, in.family, in.limits);
  if (format == "json") {
    out << render_report(outcome_json(outcome, in.family));
  } else {
    out << outcome.result.render() << '\n';
  }
  return kExitOk;
}

int cmd_explain(const CommandInput& in, const std::string& format,
                std::ostream& out) {
  for (Subbase member : in.family) {
    if (member.empty()) {
      throw InvalidFamily("family member {} is empty");
    }
    if (!member_consistent(in, member)) {
      throw InvalidFamily("family member " + subbase_text(member) +
                          " is inconsistent with mu");
    }
  }

  const CredibilityTable table = credibility_table(in.family);
  const OperatorKind kinds[] = {OperatorKind::kCsrg, OperatorKind::kCsrw,
                                OperatorKind::kCsir};

  if (format == "json") {
    nlohmann::json report;
    report["mu"] = in.mu.render();
    nlohmann::json base = nlohmann::json::array();
    for (const Formula& f : in.base.formulas()) base.push_back(f.render());
    report["base"] = base;
    report["family"] = family_json(table.family);
    report["intersections"] = family_json(table.intersections);
    report["conflict"] = rational_json(table.conflict);

    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < table.family.size(); ++i) {
      rows.push_back({{"role", "member"},
                      {"set", subbase_json(table.family[i])},
                      {"mass", rational_json(table.member_mass[i])},
                      {"bel", rational_json(table.member_bel[i])}});
    }
    for (std::size_t i = 0; i < table.intersections.size(); ++i) {
      rows.push_back({{"role", "intersection"},
                      {"set", subbase_json(table.intersections[i])},
                      {"mass", rational_json(table.intersection_mass[i])},
                      {"bel", rational_json(table.intersection_bel[i])}});
    }
    const Subbase frame = Subbase::full(table.family.frame_size());
    rows.push_back({{"role", "frame"},
                    {"set", subbase_json(frame)},
                    {"mass", rational_json(table.combined.mass_of(frame))},
                    {"bel", rational_json(belief_of(table.combined, frame))}});
    report["masses"] = rows;

    nlohmann::json operators;
    for (OperatorKind op : kinds) {
      const RevisionOutcome outcome =
          revise_with_family(in.base, in.mu, op, in.family, in.limits);
      operators[operator_name(op)] = {
          {"selected", family_json(outcome.selected)},
          {"result", outcome.result.render()}};
    }
    report["operators"] = operators;
    out << render_report(report);
    return kExitOk;
  }

  out << "mu: " << in.mu.render() << '\n';
  out << "family:\n";
  for (std::size_t i = 0; i < table.family.size(); ++i) {
    out << "  " << subbase_text(table.family[i])
        << "  m = " << mass_text(table.member_mass[i])
        << "  bel = " << mass_text(table.member_bel[i]) << '\n';
  }
  out << "intersections:\n";
  for (std::size_t i = 0; i < table.intersections.size(); ++i) {
    out << "  " << subbase_text(table.intersections[i])
        << "  m = " << mass_text(table.intersection_mass[i])
        << "  bel = " << mass_text(table.intersection_bel[i]) << '\n';
  }
  const Subbase frame = Subbase::full(table.family.frame_size());
  out << "frame: m = " << mass_text(table.combined.mass_of(frame)) << '\n';
  out << "conflict: k = " << mass_text(table.conflict) << '\n';
  for (OperatorKind op : kinds) {
    const RevisionOutcome outcome =
        revise_with_family(in.base, in.mu, op, in.family, in.limits);
    out << operator_name(op) << ": selected";
    for (Subbase s : outcome.selected) out << ' ' << subbase_text(s);
    if (outcome.selected.empty()) out << " (none)";
    out << "; result = " << outcome.result.render() << '\n';
  }
  return kExitOk;
}

int cmd_entails(const CommandInput& in, const std::string& op_name,
                const std::string& psi_text, const std::string& format,
                std::ostream& out) {
  const OperatorKind op = parse_operator(op_name);
  const Formula psi = parse_formula(psi_text);
  const RevisionOutcome outcome =
      revise_with_family(in.base, in.mu, op, in.family, in.limits);
  const bool holds = outcome_entails(outcome, psi, in.limits);
  if (format == "json") {
    nlohmann::json report;
    report["entails"] = holds;
    report["mu"] = in.mu.render();
    report["operator"] = operator_name(op);
    report["psi"] = psi.render();
    report["result"] = outcome.result.render();
    out << render_report(report);
  } else {
    out << (holds ? "true" : "false") << '\n';
  }
  return holds ? kExitOk : kExitFalse;
}

int cmd_enumerate(const CommandInput& in, const std::string& criterion,
                  const std::string& format, std::ostream& out) {
  SubbaseFamily listing;
  if (criterion == "inclusion") {
    std::vector<Subbase> kept;
    for (Subbase s : in.family) {
      if (member_consistent(in, s)) kept.push_back(s);
    }
    listing = SubbaseFamily(in.family.frame_size(), std::move(kept));
  } else if (criterion == "cardinality") {
    std::vector<Subbase> kept;
    for (Subbase s : in.family) {
      if (member_consistent(in, s)) kept.push_back(s);
    }
    listing = filter_cardinality_maximal(
        SubbaseFamily(in.family.frame_size(), std::move(kept)));
  } else if (criterion == "credibility") {
    const RevisionOutcome outcome =
        revise_with_family(in.base, in.mu, OperatorKind::kCsrg, in.family,
                           in.limits);
    listing = outcome.selected;
  } else {  // intersections
    listing = all_intersections(in.family);
  }

  if (format == "json") {
    nlohmann::json report;
    report["criterion"] = criterion;
    report["mu"] = in.mu.render();
    nlohmann::json sets = nlohmann::json::array();
    for (Subbase s : listing) {
      nlohmann::json formulas = nlohmann::json::array();
      for (const Formula& f : s.formulas(in.base)) formulas.push_back(f.render());
      sets.push_back({{"indices", subbase_json(s)}, {"formulas", formulas}});
    }
    report["sets"] = sets;
    out << render_report(report);
  } else {
    for (Subbase s : listing) {
      out << subbase_text(s) << ':';
      bool first = true;
      for (const Formula& f : s.formulas(in.base)) {
        out << (first ? " " : ", ") << f.render();
        first = false;
      }
      out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"credibility-based belief base revision"};
  app.name("crbr");
  app.require_subcommand(1);

  std::string base_path, mu_text, op_name, psi_text, family_path;
  std::string criterion = "inclusion";
  std::string format = "text";
  int max_vars = env_int("CRBR_MAX_VARS", 24);
  int max_base = env_int("CRBR_MAX_BASE", 20);

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--base", base_path, "base file, one formula per line")
        ->required();
    cmd->add_option("--mu", mu_text, "revision input formula")->required();
    cmd->add_option("--family", family_path,
                    "subbase family file (bypasses enumeration)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-vars", max_vars, "variable cap");
    cmd->add_option("--max-base", max_base, "base size cap");
  };

  const char* op_help =
      "revision operator: ginsberg, widtio, rsrg, rsrw, csrg, csrw, csir, "
      "or the experimental rsir/sir";

  CLI::App* revise_cmd = app.add_subcommand("revise", "revise a base by mu");
  add_common(revise_cmd);
  revise_cmd->add_option("--op", op_name, op_help)->required();

  CLI::App* explain_cmd =
      app.add_subcommand("explain", "show the evidential pipeline");
  add_common(explain_cmd);

  CLI::App* entails_cmd =
      app.add_subcommand("entails", "check a consequence of the revision");
  add_common(entails_cmd);
  entails_cmd->add_option("--op", op_name, op_help)->required();
  entails_cmd->add_option("--psi", psi_text, "formula to test")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "list a subbase family");
  add_common(enumerate_cmd);
  enumerate_cmd
      ->add_option("--criterion", criterion, "which family to list")
      ->check(CLI::IsMember(
          {"inclusion", "cardinality", "credibility", "intersections"}));

  std::vector<const char*> argv;
  argv.push_back("crbr");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  try {
    CommandInput in;
    in.limits = Limits{max_vars, max_base};
    in.base = load_base_file(base_path, in.limits);
    in.mu = parse_formula(mu_text);
    in.family_supplied = !family_path.empty();
    if (in.family_supplied) {
      in.family =
          load_family_file(family_path, static_cast<int>(in.base.size()));
      if (!is_satisfiable({in.mu}, in.limits)) {
        throw InconsistentInput("mu is unsatisfiable");
      }
    } else {
      in.family = enumerate_inclusion_maximal(in.base, in.mu, in.limits);
    }

    if (app.got_subcommand(revise_cmd))
      return cmd_revise(in, op_name, format, out);
    if (app.got_subcommand(explain_cmd)) return cmd_explain(in, format, out);
    if (app.got_subcommand(entails_cmd))
      return cmd_entails(in, op_name, psi_text, format, out);
    return cmd_enumerate(in, criterion, format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InconsistentInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const EmptySubbase& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadFamily;
  } catch (const InvalidFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadFamily;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
}

}  // namespace crbr
