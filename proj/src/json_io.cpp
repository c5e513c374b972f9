#include "suig2/json_io.hpp"

#include <json.hpp>

namespace suig2 {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_json(const Rat& r) {
  return ordered_json{{"num", r.num()}, {"den", r.den()}};
}

Rat rat_from(const ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw JsonError("rational must be an object {num, den}");
  if (!j["num"].is_number_integer() || !j["den"].is_number_integer())
    throw JsonError("rational parts must be integers");
  return Rat(j["num"].get<long long>(), j["den"].get<long long>());
}

}  // namespace

std::string emit_json(const Representation& r) {
  ordered_json doc;
  doc["schema"] = "suig2/v1";
  doc["epsilon"] = rat_json(r.epsilon);
  ordered_json arr = ordered_json::array();
  for (int v = 0; v < r.n(); ++v) {
    const UnitSquare& s = r.squares[v];
    arr.push_back(ordered_json{{"v", v},
                               {"x", rat_json(s.x)},
                               {"y", rat_json(s.y)},
                               {"stab", stab_name(s.stab)}});
  }
  doc["squares"] = std::move(arr);
  return doc.dump(2) + "\n";
}

Representation parse_representation_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw JsonError("top level must be an object");
    if (doc.contains("schema") && doc["schema"] != "suig2/v1")
      throw JsonError("unsupported schema: " + doc["schema"].dump());
    Representation r;
    r.epsilon = rat_from(doc.at("epsilon"));
    const auto& arr = doc.at("squares");
    if (!arr.is_array()) throw JsonError("squares must be an array");
    r.squares.resize(arr.size());
    std::vector<char> seen(arr.size(), 0);
    for (const auto& item : arr) {
      long long v = item.at("v").get<long long>();
      if (v < 0 || v >= (long long)arr.size())
        throw JsonError("square vertex id out of range: " + std::to_string(v));
      if (seen[v]) throw JsonError("duplicate square for vertex " + std::to_string(v));
      seen[v] = 1;
      UnitSquare& s = r.squares[v];
      s.x = rat_from(item.at("x"));
      s.y = rat_from(item.at("y"));
      std::string stab = item.at("stab").get<std::string>();
      if (stab == "lower")
        s.stab = Stab::Lower;
      else if (stab == "upper")
        s.stab = Stab::Upper;
      else
        throw JsonError("stab must be \"lower\" or \"upper\"");
    }
    return r;
  } catch (const JsonError&) {
    throw;
  } catch (const std::exception& e) {
    throw JsonError(std::string("malformed representation document: ") + e.what());
  }
}

}  // namespace suig2
