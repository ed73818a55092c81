#include "strata/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "strata/format.hpp"
#include "strata/parser.hpp"
#include "strata/presup.hpp"
#include "strata/serialize.hpp"

namespace strata {

namespace {

struct Options {
  std::string file;
  std::string format = "table";
  bool all = false;
  std::size_t budget_universe = ExpansionBudget{}.max_universe;
  std::size_t budget_steps = ExpansionBudget{}.max_steps;

  ExpansionBudget budget() const { return {budget_universe, budget_steps}; }
  bool machine() const { return format == "machine"; }
};

std::optional<Theory> load(const std::string& path, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << path << ": cannot read file\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  auto result = parse_theory(ss.str());
  if (!result.ok()) {
    for (const auto& e : result.errors()) err << path << ":" << format_error(e) << "\n";
    return std::nullopt;
  }
  return std::move(result).value();
}

std::string sources(const ProvenancedLiteral& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.sources.size(); ++i) out += (i ? ", " : "") + p.sources[i];
  return out + "]";
}

void print_literals(std::ostream& out, const std::string& title, const std::vector<ProvenancedLiteral>& lits) {
  out << title << ":\n";
  if (lits.empty()) out << "  (none)\n";
  for (const auto& p : lits) out << "  " << format_literal(p.literal, Notation::Table) << "  " << sources(p) << "\n";
}

void print_report(std::ostream& out, const PresuppositionReport& r) {
  if (r.unsatisfiable) {
    out << kUnsatisfiableMessage << "\n";
    return;
  }
  out << (r.optimistic_schemata.size() == 1 ? "Optimistic model:\n" : "Optimistic models:\n");
  for (const auto& m : r.optimistic_schemata) out << "  m = " << format_schema(m) << "\n";
  std::vector<ProvenancedLiteral> presupposed, cancelled;
  for (const auto& p : r.presuppositions)
    (p.status == PresupStatus::Presupposed ? presupposed : cancelled).push_back(p);
  print_literals(out, "Presupposed", presupposed);
  print_literals(out, "Cancelled", cancelled);
  if (!r.disputed.empty()) print_literals(out, "Disputed (not shared by every optimistic model)", r.disputed);
}

void print_models(std::ostream& out, const Analysis& a, bool all) {
  for (std::size_t i = 0; i < a.schemata.size(); ++i) {
    const bool opt = std::find(a.optimistic.begin(), a.optimistic.end(), i) != a.optimistic.end();
    if (!all && !opt) continue;
    out << "m" << i + 1 << " = " << format_schema(a.schemata[i]);
    if (all && opt) out << "   (most optimistic)";
    out << "\n";
  }
}

int cmd_models(const Options& o, std::ostream& out, std::ostream& err) {
  auto theory = load(o.file, err);
  if (!theory) return kExitError;
  const Analysis a = solve(*theory, o.budget());
  if (o.machine()) {
    out << dump(to_json(a, !o.all));
  } else if (!a.unsatisfiable()) {
    print_models(out, a, o.all);
  }
  if (a.unsatisfiable()) {
    err << kUnsatisfiableMessage << "\n";
    return kExitUnsatisfiable;
  }
  return kExitOk;
}

int cmd_presup(const Options& o, std::ostream& out, std::ostream& err) {
  auto theory = load(o.file, err);
  if (!theory) return kExitError;
  const auto r = analyze(*theory, o.budget());
  if (o.machine()) {
    out << dump(to_json(r));
  } else if (!r.unsatisfiable) {
    print_report(out, r);
  }
  if (r.unsatisfiable) {
    err << kUnsatisfiableMessage << "\n";
    return kExitUnsatisfiable;
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  auto theory = load(o.file, err);
  if (!theory) return kExitError;
  out << o.file << ": ok, " << theory->size() << (theory->size() == 1 ? " axiom\n" : " axioms\n");
  return kExitOk;
}

std::string status_name(const std::optional<PresupStatus>& s) {
  return s ? std::string(to_string(*s)) : std::string("absent");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int cmd_repl(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto theory = load(o.file, err);
  if (!theory) return kExitError;
  std::vector<DiscourseSession> history{open_session(*theory, o.budget())};
  out << "loaded " << o.file << " (" << theory->size() << " axioms)\n"
      << "commands: add <formula>, report, models, undo, quit\n";
  print_report(out, history.back().report());

  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto space = line.find(' ');
    const std::string cmd = line.substr(0, space);
    const std::string rest = space == std::string::npos ? "" : trim(line.substr(space + 1));

    if (cmd == "quit" || cmd == "exit") break;
    if (cmd == "report") {
      print_report(out, history.back().report());
    } else if (cmd == "models") {
      const auto& r = history.back().report();
      if (r.unsatisfiable) out << kUnsatisfiableMessage << "\n";
      for (const auto& m : r.optimistic_schemata) out << "m = " << format_schema(m) << "\n";
    } else if (cmd == "undo") {
      if (history.size() == 1) {
        out << "nothing to undo\n";
        continue;
      }
      out << "undone: " << history.back().utterances().back().id << "\n";
      history.pop_back();
    } else if (cmd == "add") {
      auto parsed = parse_formula(rest, history.back().theory());
      if (!parsed.ok()) {
        for (const auto& e : parsed.errors()) err << "error: " << format_error(e) << "\n";
        continue;
      }
      try {
        auto next = add_utterance(history.back(), std::move(parsed).value());
        const auto changes = status_changes(history.back().report(), next.report());
        out << "added " << next.utterances().back().id << "\n";
        if (next.report().unsatisfiable) out << kUnsatisfiableMessage << "\n";
        if (changes.empty()) out << "no presupposition changed\n";
        for (const auto& c : changes)
          out << format_literal(c.literal, Notation::Machine) << ": " << status_name(c.before) << " → "
              << status_name(c.after) << "\n";
        history.push_back(std::move(next));
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
      }
    } else {
      err << "unknown command '" << cmd << "' (add, report, models, undo, quit)\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratified-logic reasoning: model schemata and presuppositions", "strata"};
  app.require_subcommand(1);
  Options o;

  auto add_budget = [&o](CLI::App* sub) {
    sub->add_option("--budget-universe", o.budget_universe, "Maximum universe size")->check(CLI::PositiveNumber);
    sub->add_option("--budget-steps", o.budget_steps, "Maximum expansion steps")
        ->envname("STRATA_BUDGET_STEPS")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "machine"}));
  };

  auto* models = app.add_subcommand("models", "Print the most optimistic model schemata");
  models->add_option("file", o.file, "Theory file (.slt)")->required();
  models->add_flag("--all", o.all, "Print every schema, not only the most optimistic");
  add_format(models);
  add_budget(models);

  auto* presup = app.add_subcommand("presup", "Print presuppositions with their provenance");
  presup->add_option("file", o.file, "Theory file (.slt)")->required();
  add_format(presup);
  add_budget(presup);

  auto* repl = app.add_subcommand("repl", "Extend a theory utterance by utterance");
  repl->add_option("file", o.file, "Base theory file (.slt)")->required();
  add_budget(repl);

  auto* check = app.add_subcommand("check", "Parse a theory file and report errors");
  check->add_option("file", o.file, "Theory file (.slt)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*models) return cmd_models(o, out, err);
    if (*presup) return cmd_presup(o, out, err);
    if (*repl) return cmd_repl(o, in, out, err);
    return cmd_check(o, out, err);
  } catch (const ResourceExhausted& e) {
    err << "budget exceeded: " << e.what() << " (steps " << e.stats().steps << ", universe "
        << e.stats().universe_size << ")\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace strata
