#include "idg/diagnostic.hpp"

#include <algorithm>
#include "json.hpp"
#include <tuple>

namespace idg {

void sort_diagnostics(Diagnostics& diags) {
  auto key = [](const Diagnostic& d) { return std::tie(d.rule_id, d.components, d.message); };
  std::sort(diags.begin(), diags.end(), [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

std::string to_json_line(const Diagnostic& d) {
  nlohmann::json j;
  j["rule"] = d.rule_id;
  j["components"] = nlohmann::json::array();
  for (const auto& c : d.components) j["components"].push_back({{"ns", to_string(c.ns)}, {"id", c.token}});
  j["message"] = d.message;
  return j.dump();
}

std::string to_pretty(const Diagnostic& d) {
  std::string out = d.rule_id + ":";
  for (const auto& c : d.components) out += " " + c.token;
  if (!d.message.empty()) out += " (" + d.message + ")";
  return out;
}

}  // namespace idg
