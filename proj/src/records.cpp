#include "dycklat/records.hpp"

#include <string>

#include "dycklat/bijections.hpp"

namespace dycklat {
namespace {

using nlohmann::json;

FamilyParam family_of(const json& record, std::optional<FamilyParam> fallback) {
  if (record.contains("p")) return family_from_json(record.at("p"));
  if (fallback) return *fallback;
  throw Error(ErrorKind::BadRecord, "record has no \"p\" field");
}

std::vector<int> int_array(const json& record, const char* key) {
  const json& v = record.at(key);
  if (!v.is_array()) throw Error(ErrorKind::BadRecord, std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorKind::BadRecord, std::string("\"") + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string text_field(const json& record, const char* key) {
  if (!record.contains(key) || !record.at(key).is_string()) {
    throw Error(ErrorKind::BadRecord, std::string("missing string field \"") + key + "\"");
  }
  return record.at(key).get<std::string>();
}

}  // namespace

PathFormat parse_path_format(std::string_view name) {
  if (name == "steps") return PathFormat::Steps;
  if (name == "catalan") return PathFormat::Catalan;
  if (name == "composition") return PathFormat::Composition;
  if (name == "subset") return PathFormat::Subset;
  throw Error(ErrorKind::BadRecord, "unknown path format " + std::string(name));
}

json family_to_json(FamilyParam p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

FamilyParam family_from_json(const json& value) {
  try {
    if (value.is_string()) return FamilyParam::parse(value.get<std::string>());
    if (value.is_number_integer()) return FamilyParam::finite(value.get<int>());
  } catch (const Error& e) {
    throw Error(ErrorKind::BadRecord, e.what());
  }
  throw Error(ErrorKind::BadRecord, "\"p\" must be an integer or \"inf\"");
}

json path_to_json(const DyckPath& path, FamilyParam p, PathFormat format) {
  json out{{"n", path.semilength()}, {"p", family_to_json(p)}};
  switch (format) {
    case PathFormat::Steps: out["steps"] = path.to_string(); break;
    case PathFormat::Catalan: out["catalan"] = to_catalan_word(path).letters; break;
    case PathFormat::Composition: out["composition"] = to_composition(path).parts; break;
    case PathFormat::Subset: out["members"] = to_subset(path).members; break;
  }
  return out;
}

PathRecord path_from_json(const json& record, std::optional<FamilyParam> fallback) {
  if (!record.is_object()) throw Error(ErrorKind::BadRecord, "record must be a JSON object");
  const FamilyParam p = family_of(record, fallback);
  DyckPath path;
  if (record.contains("steps")) {
    path = parse_path(text_field(record, "steps"));
  } else if (record.contains("catalan")) {
    path = from_catalan_word({int_array(record, "catalan")}, p);
  } else if (record.contains("composition")) {
    path = from_composition({int_array(record, "composition")}, p);
  } else if (record.contains("members")) {
    if (!record.contains("n") || !record.at("n").is_number_integer()) {
      throw Error(ErrorKind::BadRecord, "subset record needs an integer \"n\"");
    }
    path = from_subset({int_array(record, "members"), record.at("n").get<int>()}, p);
  } else {
    throw Error(ErrorKind::BadRecord, "record has none of steps/catalan/composition/members");
  }
  if (!in_family(path, p)) throw Error(ErrorKind::NotInFamily, path.to_string() + " is not in F^" + p.to_string());
  if (record.contains("n") && record.at("n") != path.semilength()) {
    throw Error(ErrorKind::BadRecord, "\"n\" disagrees with the path");
  }
  return {path, p};
}

json interval_to_json(const Interval& interval) {
  return json{{"n", interval.semilength()},
              {"p", family_to_json(interval.family())},
              {"lower", interval.lower().to_string()},
              {"upper", interval.upper().to_string()}};
}

Interval interval_from_json(const json& record, std::optional<FamilyParam> fallback) {
  if (!record.is_object()) throw Error(ErrorKind::BadRecord, "record must be a JSON object");
  const FamilyParam p = family_of(record, fallback);
  return Interval(parse_path(text_field(record, "lower")), parse_path(text_field(record, "upper")), p);
}

json motzkin_to_json(const BicoloredMotzkinPath& word, FamilyParam p) {
  return json{{"n", static_cast<int>(word.size()) + 1}, {"p", family_to_json(p)}, {"motzkin", word.to_string()}};
}

MotzkinRecord motzkin_from_json(const json& record, std::optional<FamilyParam> fallback) {
  if (!record.is_object()) throw Error(ErrorKind::BadRecord, "record must be a JSON object");
  const FamilyParam p = family_of(record, fallback);
  return {BicoloredMotzkinPath::parse(text_field(record, "motzkin")), p};
}

}  // namespace dycklat
