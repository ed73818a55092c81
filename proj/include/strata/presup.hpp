// Presupposition extraction and discourse sessions.
//
// A presupposition is a defeasible literal derived from a language-use axiom
// that survives in every most optimistic schema of the theory.

#ifndef STRATA_PRESUP_HPP
#define STRATA_PRESUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strata/logic.hpp"
#include "strata/schemata.hpp"
#include "strata/tableaux.hpp"

namespace strata {

// Expansion plus schema selection.
struct Analysis {
  std::vector<Branch> branches;
  std::vector<ModelSchema> schemata;      // one per branch
  std::vector<std::size_t> minimal;       // indices into schemata
  std::vector<std::size_t> optimistic;    // maximal among the minimal ones
  ExpansionStats stats;

  bool unsatisfiable() const { return schemata.empty(); }
};

Analysis solve(const Theory& t, const ExpansionBudget& budget = {});

enum class PresupStatus { Presupposed, Cancelled, Disputed };

std::string_view to_string(PresupStatus s);

struct ProvenancedLiteral {
  Literal literal;                   // strength D
  std::vector<std::string> sources;  // language-use axiom ids, sorted
  PresupStatus status = PresupStatus::Presupposed;

  friend bool operator==(const ProvenancedLiteral&, const ProvenancedLiteral&) = default;
};

struct PresuppositionReport {
  std::vector<ModelSchema> optimistic_schemata;   // projected
  std::vector<ProvenancedLiteral> presuppositions;  // Presupposed and Cancelled
  std::vector<ProvenancedLiteral> disputed;         // not unanimous across optimistic schemata
  bool unsatisfiable = false;

  std::optional<PresupStatus> status_of(const Literal& l) const;

  friend bool operator==(const PresuppositionReport&, const PresuppositionReport&) = default;
};

PresuppositionReport report_from(const Analysis& a);
PresuppositionReport analyze(const Theory& t, const ExpansionBudget& budget = {});

// An immutable value: add_utterance returns a new session and leaves the
// original untouched.
class DiscourseSession {
 public:
  const Theory& base() const { return state_->base; }
  const std::vector<Axiom>& utterances() const { return state_->log; }
  const PresuppositionReport& report() const { return state_->report; }
  const ExpansionBudget& budget() const { return state_->budget; }
  // base plus every logged utterance
  const Theory& theory() const { return state_->theory; }

 private:
  struct State {
    Theory base;
    std::vector<Axiom> log;
    Theory theory;
    PresuppositionReport report;
    ExpansionBudget budget;
  };
  explicit DiscourseSession(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  std::shared_ptr<const State> state_;

  friend DiscourseSession open_session(Theory base, const ExpansionBudget& budget);
  friend DiscourseSession add_utterance(const DiscourseSession& s, Formula f);
};

DiscourseSession open_session(Theory base, const ExpansionBudget& budget = {});
// Appends f as an utterance axiom (id utt<N>) and re-analyzes from scratch.
// Throws TheoryError if f does not fit the theory's signature.
DiscourseSession add_utterance(const DiscourseSession& s, Formula f);

struct StatusChange {
  Literal literal;
  std::optional<PresupStatus> before, after;  // nullopt: not reported
};

std::vector<StatusChange> status_changes(const PresuppositionReport& before, const PresuppositionReport& after);

}  // namespace strata

#endif  // STRATA_PRESUP_HPP
