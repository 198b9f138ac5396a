#include "numon/serialize.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>

namespace numon {

std::string monoid_to_json(const NumericalMonoid& S) {
  // nlohmann::json is map-backed, so dump() emits keys alphabetically and
  // a parse/dump round-trip is byte-identical.
  nlohmann::json obj;
  obj["frobenius"] = S.frobenius();
  obj["generators"] = S.generators();
  return obj.dump();
}

std::vector<Value> parse_value_list(const std::string& text) {
  std::vector<Value> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    Value value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected an integer, got \"" + token +
                                  "\"");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(
                                      token[used])))
      ++used;
    if (used != token.size())
      throw std::invalid_argument("trailing characters in \"" + token + "\"");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace numon
