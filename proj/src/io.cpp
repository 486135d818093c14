#include "deltamat/io.hpp"

#include <json.hpp>

namespace deltamat {

namespace {

std::string label_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("element label must be a string or integer, got " + j.dump());
}

}  // namespace

SetSystem parse_set_system(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("set-system file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "elements" && key != "feasible") throw InputError("unknown key '" + key + "'");
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw InputError("missing \"elements\" array");
  }
  if (!doc.contains("feasible") || !doc["feasible"].is_array()) {
    throw InputError("missing \"feasible\" array");
  }

  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) elements.push_back(label_text(e));
  if (static_cast<int>(elements.size()) > kMaxElements) {
    throw InputError("ground set has " + std::to_string(elements.size()) +
                     " elements; at most " + std::to_string(kMaxElements) + " are supported");
  }
  // Label lookup goes through a throwaway system so unknown labels are reported
  // with the same message everywhere.
  const SetSystem ground(elements, {0});

  std::vector<Mask> family;
  for (const auto& set : doc["feasible"]) {
    if (!set.is_array()) throw InputError("feasible entry is not a list: " + set.dump());
    std::vector<std::string> labels;
    for (const auto& e : set) labels.push_back(label_text(e));
    family.push_back(ground.mask_of(labels));
  }
  return SetSystem(std::move(elements), std::move(family));
}

std::string serialize_set_system(const SetSystem& s) {
  nlohmann::ordered_json doc;
  doc["elements"] = s.elements();
  auto feasible = nlohmann::ordered_json::array();
  for (Mask f : s.feasible()) feasible.push_back(s.labels_of(f));
  doc["feasible"] = std::move(feasible);
  return doc.dump() + "\n";
}

}  // namespace deltamat
