#include "hqds/document.hpp"

#include <json.hpp>

namespace hqds {

namespace {
const char* kPairKeys[6] = {"11", "12", "13", "22", "23", "33"};
}

std::string document_to_json(const AlgebraDocument& doc) {
  nlohmann::ordered_json j;
  j["format_version"] = kDocumentFormatVersion;
  nlohmann::ordered_json products;
  for (int i = 0; i < 6; ++i) {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (int k = 0; k < 3; ++k)
      comps.push_back(format_rational(doc.tensor.p[i][k]));
    products[kPairKeys[i]] = comps;
  }
  j["products"] = products;
  if (!doc.metadata.empty()) {
    nlohmann::ordered_json meta;
    for (const auto& [key, val] : doc.metadata) meta[key] = val;
    j["metadata"] = meta;
  }
  return j.dump(2) + "\n";
}

std::optional<AlgebraDocument> document_from_json(const std::string& text,
                                                  std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return std::nullopt;
  };
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return fail("not valid JSON");
  if (!j.is_object()) return fail("top level must be an object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer())
    return fail("missing integer format_version");
  if (j["format_version"].get<int>() != kDocumentFormatVersion)
    return fail("unsupported format_version");
  if (!j.contains("products") || !j["products"].is_object())
    return fail("missing products object");
  AlgebraDocument doc;
  for (int i = 0; i < 6; ++i) {
    const auto& prods = j["products"];
    if (!prods.contains(kPairKeys[i]))
      return fail(std::string("missing product \"") + kPairKeys[i] + "\"");
    const auto& comps = prods[kPairKeys[i]];
    if (!comps.is_array() || comps.size() != 3)
      return fail(std::string("product \"") + kPairKeys[i] +
                  "\" must be an array of 3 rational strings");
    for (int k = 0; k < 3; ++k) {
      if (!comps[k].is_string())
        return fail(std::string("product \"") + kPairKeys[i] +
                    "\" component is not a string");
      auto r = parse_rational(comps[k].get<std::string>());
      if (!r)
        return fail(std::string("product \"") + kPairKeys[i] +
                    "\": cannot parse rational \"" +
                    comps[k].get<std::string>() + "\"");
      doc.tensor.p[i][k] = *r;
    }
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) return fail("metadata must be an object");
    for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it) {
      if (!it.value().is_string())
        return fail("metadata values must be strings");
      doc.metadata[it.key()] = it.value().get<std::string>();
    }
  }
  return doc;
}

}  // namespace hqds
