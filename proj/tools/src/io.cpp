#include "io.hpp"

#include "cosetcover/errors.hpp"

namespace cosetcover::cli {

json to_json(const ZSystem& sys) {
  json classes = json::array();
  for (const auto& c : sys.classes()) classes.push_back({{"a", c.residue()}, {"n", c.modulus()}});
  return {{"classes", classes}, {"period", sys.period()}};
}

json to_json(const CosetSystem& sys) {
  json cosets = json::array();
  for (const auto& c : sys.items) cosets.push_back({{"rep", c.rep}, {"subgroup", c.sub.sorted()}});
  return {{"group", sys.group->label()}, {"cosets", cosets}};
}

json to_json(const Verdict& v) {
  json j = {{"check", v.check},
            {"hypotheses_hold", v.hypotheses_hold},
            {"conclusion_holds", v.conclusion_holds},
            {"verdict", std::string(to_string(v.outcome))},
            {"detail", v.detail}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& v : r.checks) checks.push_back(to_json(v));
  return {{"statement", r.statement}, {"verdict", std::string(to_string(r.overall()))}, {"checks", checks}};
}

json to_json(const Found& f) { return f.z ? to_json(*f.z) : to_json(*f.cosets); }

std::unique_ptr<CoverModel> LoadedSystem::model() const {
  if (z) return std::make_unique<ZModel>(*z);
  return std::make_unique<GroupModel>(*cosets);
}

json LoadedSystem::system_json() const {
  json j = z ? to_json(*z) : to_json(*cosets);
  if (h_elements) j["H"] = *h_elements;
  if (h_modulus) j["H"] = *h_modulus;
  return j;
}

std::string LoadedSystem::describe() const { return model()->describe(); }

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

GroupPtr group_from_json(const json& j) {
  if (j.contains("table")) {
    auto table = field<std::vector<std::vector<Element>>>(j, "table");
    std::string label = j.contains("label") ? field<std::string>(j, "label") : "table";
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(table, label));
  }
  return make_group_ptr(field<std::string>(j, "group"));
}

}  // namespace

LoadedSystem load_system(const json& input) {
  if (!input.is_object()) throw ParseError("expected a JSON object");
  const json& j = input.contains("system") ? input.at("system") : input;
  if (!j.is_object()) throw ParseError("\"system\" must be an object");
  LoadedSystem out;
  if (j.contains("classes")) {
    std::vector<ResidueClass> classes;
    for (const auto& c : field<json>(j, "classes")) classes.emplace_back(field<std::int64_t>(c, "a"), field<std::int64_t>(c, "n"));
    out.z = ZSystem(std::move(classes));
    if (j.contains("H")) out.h_modulus = field<std::uint64_t>(j, "H");
  } else if (j.contains("cosets")) {
    GroupPtr g = group_from_json(j);
    CosetSystem sys{g, {}};
    for (const auto& c : field<json>(j, "cosets")) {
      auto rep = field<Element>(c, "rep");
      if (rep >= g->order()) throw ParseError("coset representative " + std::to_string(rep) + " out of range");
      auto sub = validate_subgroup(*g, field<std::vector<Element>>(c, "subgroup"));
      sys.items.emplace_back(*g, rep, std::move(sub));
    }
    if (sys.items.empty()) throw ParseError("\"cosets\" is empty");
    out.cosets = std::move(sys);
    if (j.contains("H")) out.h_elements = field<std::vector<Element>>(j, "H");
  } else {
    throw ParseError("expected \"classes\" or \"cosets\"");
  }
  return out;
}

LoadedSystem load_system_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return load_system(j);
}

std::optional<ElementSet> subgroup_h(const LoadedSystem& sys, const CoverModel& model) {
  if (sys.h_modulus) {
    const auto& zm = dynamic_cast<const ZModel&>(model);
    return zm.multiples_of(*sys.h_modulus);
  }
  if (sys.h_elements) {
    const auto& gm = dynamic_cast<const GroupModel&>(model);
    return validate_subgroup(gm.group(), *sys.h_elements).elements();
  }
  return std::nullopt;
}

}  // namespace cosetcover::cli
