#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "cosetcover/model.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/verdict.hpp"

namespace cosetcover::cli {

using nlohmann::json;

json to_json(const ZSystem& sys);
json to_json(const CosetSystem& sys);
json to_json(const Verdict& v);
json to_json(const Report& r);
json to_json(const Found& f);

/// A system read from JSON or flags, with an optional subgroup H.
struct LoadedSystem {
  std::optional<ZSystem> z;
  std::optional<CosetSystem> cosets;
  /// H as group elements, or as the modulus d of H = dZ for residue systems.
  std::optional<std::vector<Element>> h_elements;
  std::optional<std::uint64_t> h_modulus;

  std::unique_ptr<CoverModel> model() const;
  json system_json() const;
  std::string describe() const;
};

/// Accepts {"classes":[...]}, {"group":..,"cosets":[...]}, {"table":..,"cosets":[...]},
/// or any object carrying one of those under "system" (e.g. `check --json` output).
/// Throws ParseError on malformed input.
LoadedSystem load_system(const json& j);
LoadedSystem load_system_text(const std::string& text);

/// The carrier image of H, when one was given. Throws PreconditionError when
/// the elements do not form a subgroup or d does not divide the period.
std::optional<ElementSet> subgroup_h(const LoadedSystem& sys, const CoverModel& model);

}  // namespace cosetcover::cli
