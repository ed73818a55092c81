#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "strata/cli.hpp"
#include "strata/corpus.hpp"
#include "strata/serialize.hpp"

using namespace strata;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(STRATA_CORPUS_DIR) + "/" + name + ".slt"; }

// A scratch .slt file removed at scope exit.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& text) {
    static int n = 0;
    path = std::filesystem::temp_directory_path() / ("strata_cli_test_" + std::to_string(++n) + ".slt");
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("models prints the most optimistic schema") {
  auto r = run({"models", corpus("tweety")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "m1 = {bird^u(T), ¬penguin^u(T)} ∪ {flies^d(T)}\n");

  auto all = run({"models", "--all", corpus("tweety")});
  CHECK(all.code == kExitOk);
  CHECK(all.out ==
        "m1 = {bird^u(T), ¬penguin^u(T)} ∪ {flies^d(T)}   (most optimistic)\n"
        "m2 = {bird^u(T), ¬flies^u(T), ¬penguin^u(T)} ∪ {flies^d(T)}\n"
        "m3 = {bird^u(T), ¬flies^u(T)} ∪ {flies^d(T)}\n");
}

TEST_CASE("machine output is stable") {
  auto a = run({"models", "--format", "machine", "--all", corpus("regret")});
  auto b = run({"models", "--format", "machine", "--all", corpus("regret")});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["schemata"].size() >= 1);
}

TEST_CASE("presup output matches the golden reports") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    auto r = run({"presup", "--format", "machine", corpus(f.name)});
    CHECK(r.out == f.expected);
    const bool unsat = nlohmann::json::parse(f.expected)["unsatisfiable"].get<bool>();
    CHECK(r.code == (unsat ? kExitUnsatisfiable : kExitOk));
    if (unsat) CHECK(contains(r.err, kUnsatisfiableMessage));
  }
}

TEST_CASE("presup table output") {
  auto r = run({"presup", corpus("regret_then_cancelled")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "Presupposed:\n  E!^d(john)  [l1]\n"));
  CHECK(contains(r.out, "Cancelled:\n  come^d(mary,party)  [l2]\n"));

  auto france = run({"presup", corpus("france_bald")});
  CHECK(contains(france.out, "Presupposed:\n  (none)\n"));
  CHECK(contains(france.out, "Cancelled:\n  E!^d(ξ₀)  [l1]\n"));

  auto tweety = run({"presup", corpus("tweety")});
  // The negated antecedent ¬penguin^u(T) carries no information of its own and is trimmed.
  CHECK(contains(tweety.out, "Optimistic model:\n  m = {bird^u(T)} ∪ {flies^d(T)}\n"));
  CHECK_FALSE(contains(tweety.out, "Disputed"));
}

TEST_CASE("unsatisfiable theories exit 2") {
  auto r = run({"presup", corpus("buganda_exists_contradicted")});
  CHECK(r.code == kExitUnsatisfiable);
  CHECK(r.out.empty());
  CHECK(r.err == std::string(kUnsatisfiableMessage) + "\n");
  CHECK(run({"models", corpus("buganda_exists_contradicted")}).code == kExitUnsatisfiable);
}

TEST_CASE("parse and usage errors exit 1") {
  TempFile bad("(axiom a1 :core (bird^u T))\n(axiom a1 :core (bird^u T))\n");
  auto r = run({"presup", bad.str()});
  CHECK(r.code == kExitError);
  CHECK(contains(r.err, ":2:8: duplicate"));

  CHECK(run({"presup", "/nonexistent/theory.slt"}).code == kExitError);
  CHECK(run({}).code == kExitError);
  CHECK(run({"frobnicate"}).code == kExitError);
  CHECK(run({"presup", "--format", "xml", corpus("tweety")}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("check") {
  auto r = run({"check", corpus("tweety")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == corpus("tweety") + ": ok, 4 axioms\n");
}

TEST_CASE("budget flags") {
  auto r = run({"presup", "--budget-universe", "2", corpus("regret")});
  CHECK(r.code == kExitError);
  CHECK(contains(r.err, "budget exceeded"));
  CHECK(run({"presup", "--budget-steps", "0", corpus("regret")}).code == kExitError);

  ::setenv("STRATA_BUDGET_STEPS", "3", 1);
  auto env = run({"presup", corpus("regret")});
  ::unsetenv("STRATA_BUDGET_STEPS");
  CHECK(env.code == kExitError);
  CHECK(contains(env.err, "budget exceeded"));
}

TEST_CASE("repl session") {
  auto r = run({"repl", corpus("regret")},
               "add (not (come^u mary party))\n"
               "undo\n"
               "undo\n"
               "add (p^u x) (q^u x\n"
               "report\n"
               "quit\n");
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "added utt1\ncome^d(mary,party): Presupposed → Cancelled\n"));
  CHECK(contains(r.out, "undone: utt1\n"));
  CHECK(contains(r.out, "nothing to undo\n"));
  CHECK(contains(r.err, "error: "));
}

TEST_CASE("repl reports unchanged presuppositions and bad variables") {
  auto r = run({"repl", corpus("buganda_bald")},
               "add (tall^u kabaka)\n"
               "add (and (forall (x) (p^u x)) (q^u x))\n"
               "models\n");
  CHECK(contains(r.out, "added utt1\nno presupposition changed\n"));
  CHECK(contains(r.err, "error: "));
  CHECK(contains(r.err, "unbound"));
  CHECK(r.code == kExitOk);
}

TEST_CASE("the binary reports the same exit codes") {
  const std::string bin = STRATA_BINARY;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("presup " + corpus("tweety")) == kExitOk);
  CHECK(status("presup " + corpus("buganda_exists_contradicted")) == kExitUnsatisfiable);
  CHECK(status("presup /nonexistent.slt") == kExitError);
  CHECK(status("") == kExitError);
}
