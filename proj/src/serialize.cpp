#include "strata/serialize.hpp"

#include <algorithm>

#include "strata/format.hpp"

namespace strata {

namespace {

Json atoms(const std::set<Atom>& layer) {
  Json out = Json::array();
  for (const auto& a : layer) out.push_back(format_atom(a, Notation::Machine));
  return out;
}

std::set<Atom> atoms_from(const nlohmann::json& j) {
  std::set<Atom> out;
  for (const auto& s : j) out.insert(parse_machine_atom(s.get<std::string>()));
  return out;
}

PresupStatus status_from(const std::string& s) {
  if (s == "presupposed") return PresupStatus::Presupposed;
  if (s == "cancelled") return PresupStatus::Cancelled;
  if (s == "disputed") return PresupStatus::Disputed;
  throw Error("unknown presupposition status '" + s + "'");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Json to_json(const ProvenancedLiteral& p) {
  return Json{{"literal", format_literal(p.literal, Notation::Machine)},
              {"status", lower(to_string(p.status))},
              {"sources", p.sources}};
}

// Built member by member: an exception thrown mid aggregate-initialization
// leaks the members already constructed under GCC 11.
ProvenancedLiteral provenanced_from(const nlohmann::json& j) {
  ProvenancedLiteral p;
  p.literal = parse_machine_literal(j.at("literal").get<std::string>());
  p.sources = j.at("sources").get<std::vector<std::string>>();
  p.status = status_from(j.at("status").get<std::string>());
  return p;
}

}  // namespace

Json to_json(const ModelSchema& m) {
  Json universe = Json::array();
  for (const auto& t : m.universe) universe.push_back(format_term(t, Notation::Machine));
  return Json{{"universe", universe}, {"ru", atoms(m.ru)},       {"ru_bar", atoms(m.ru_bar)},
              {"rd", atoms(m.rd)},    {"rd_bar", atoms(m.rd_bar)}};
}

ModelSchema schema_from_json(const nlohmann::json& j) {
  try {
    ModelSchema m;
    for (const auto& t : j.at("universe")) m.universe.insert(parse_machine_term(t.get<std::string>()));
    m.ru = atoms_from(j.at("ru"));
    m.ru_bar = atoms_from(j.at("ru_bar"));
    m.rd = atoms_from(j.at("rd"));
    m.rd_bar = atoms_from(j.at("rd_bar"));
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed schema: ") + e.what());
  }
}

Json to_json(const PresuppositionReport& r) {
  Json models = Json::array();
  for (const auto& m : r.optimistic_schemata) models.push_back(to_json(m));
  Json presups = Json::array();
  for (const auto& p : r.presuppositions) presups.push_back(to_json(p));
  Json disputed = Json::array();
  for (const auto& p : r.disputed) disputed.push_back(to_json(p));
  return Json{{"unsatisfiable", r.unsatisfiable},
              {"optimistic_models", models},
              {"presuppositions", presups},
              {"disputed", disputed}};
}

PresuppositionReport report_from_json(const nlohmann::json& j) {
  try {
    PresuppositionReport r;
    r.unsatisfiable = j.at("unsatisfiable").get<bool>();
    for (const auto& m : j.at("optimistic_models")) r.optimistic_schemata.push_back(schema_from_json(m));
    for (const auto& p : j.at("presuppositions")) r.presuppositions.push_back(provenanced_from(p));
    for (const auto& p : j.at("disputed")) r.disputed.push_back(provenanced_from(p));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

Json to_json(const Analysis& a, bool optimistic_only) {
  Json list = Json::array();
  for (std::size_t i = 0; i < a.schemata.size(); ++i) {
    const bool opt = std::find(a.optimistic.begin(), a.optimistic.end(), i) != a.optimistic.end();
    if (optimistic_only && !opt) continue;
    Json cancelled = Json::array();
    for (const auto& c : cancelled_atoms(a.schemata[i]))
      cancelled.push_back(format_literal(Literal::make(c.atom.predicate, c.atom.args, Strength::D, c.polarity), Notation::Machine));
    Json entry{{"name", "m" + std::to_string(i + 1)},
               {"optimistic", opt},
               {"minimal", std::find(a.minimal.begin(), a.minimal.end(), i) != a.minimal.end()},
               {"cancelled", cancelled}};
    entry.update(to_json(a.schemata[i]));
    list.push_back(std::move(entry));
  }
  return Json{{"unsatisfiable", a.unsatisfiable()}, {"schemata", list}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace strata
