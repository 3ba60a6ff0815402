#include "cace/document.hpp"

#include <json.hpp>

namespace cace {

namespace {

using nlohmann::json;

u64 require_unsigned(const json& j, const char* field) {
  if (!j.is_number_unsigned())
    throw MalformedDocument(std::string(field) + " must be a non-negative integer");
  return j.get<u64>();
}

}  // namespace

Code parse_code(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedDocument("document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "n" && key != "omega" && key != "generators")
      throw MalformedDocument("unknown field '" + key + "'");
  }
  if (!doc.contains("n") || !doc.contains("omega") || !doc.contains("generators"))
    throw MalformedDocument("fields n, omega and generators are all required");

  const u64 n = require_unsigned(doc["n"], "n");
  const u64 omega = require_unsigned(doc["omega"], "omega");
  if (omega < 2 || omega > 0xffffffffull)
    throw MalformedDocument("omega must lie in [2, 2^32)");
  if (!doc["generators"].is_array())
    throw MalformedDocument("generators must be an array");

  std::vector<u64> generators;
  generators.reserve(doc["generators"].size());
  for (const auto& g : doc["generators"]) {
    u64 value = require_unsigned(g, "generators entry");
    if (!generators.empty() && value <= generators.back())
      throw MalformedDocument("generators must be strictly ascending");
    generators.push_back(value);
  }

  try {
    return Code(n, static_cast<u32>(omega), std::move(generators));
  } catch (const Error& e) {
    throw MalformedDocument(e.what());
  }
}

std::string serialize_code(const Code& code) {
  json doc;
  doc["n"] = code.modulus();
  doc["omega"] = code.weight();
  doc["generators"] = code.generators();
  return doc.dump(2) + "\n";
}

}  // namespace cace
