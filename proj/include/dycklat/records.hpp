#pragma once

// JSON-lines records exchanged by the command-line tool.
//
//   path      {"n":5,"p":2,"steps":"UUDDUD..."}
//             {"n":5,"p":2,"catalan":[0,0,1,...]}
//             {"n":5,"p":2,"composition":[2,1,...]}
//             {"n":5,"p":2,"members":[1,3]}
//   interval  {"n":8,"p":"inf","lower":"...","upper":"..."}
//   word      {"n":8,"p":"inf","motzkin":"UGUDFUG"}
//
// "p" is an integer >= 2 or the string "inf".

#include <optional>
#include <string_view>

#include <json.hpp>

#include "dycklat/motzkin.hpp"

namespace dycklat {

enum class PathFormat { Steps, Catalan, Composition, Subset };

/// Throws BadRecord for anything other than steps|catalan|composition|subset.
PathFormat parse_path_format(std::string_view name);

nlohmann::json family_to_json(FamilyParam p);
/// Throws BadRecord.
FamilyParam family_from_json(const nlohmann::json& value);

nlohmann::json path_to_json(const DyckPath& path, FamilyParam p, PathFormat format);

struct PathRecord {
  DyckPath path;
  FamilyParam p;
};
/// Accepts any of the four path shapes. A missing "p" falls back to
/// `fallback`; if that is empty too, BadRecord. The path must lie in F^p.
PathRecord path_from_json(const nlohmann::json& record, std::optional<FamilyParam> fallback = std::nullopt);

nlohmann::json interval_to_json(const Interval& interval);
Interval interval_from_json(const nlohmann::json& record, std::optional<FamilyParam> fallback = std::nullopt);

nlohmann::json motzkin_to_json(const BicoloredMotzkinPath& word, FamilyParam p);
struct MotzkinRecord {
  BicoloredMotzkinPath word;
  FamilyParam p;
};
MotzkinRecord motzkin_from_json(const nlohmann::json& record, std::optional<FamilyParam> fallback = std::nullopt);

}  // namespace dycklat
