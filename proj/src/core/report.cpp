#include "core/report.hpp"

namespace ts {

std::string render_json(const Report& rep) {
  Json j;
  j["command"] = rep.command;
  j["params"] = rep.params;
  j["status"] = rep.status;
  j["results"] = rep.results;
  j["timing_ms"] = rep.timing_ms;
  return j.dump(2) + "\n";
}

std::string render_text(const Report& rep) {
  std::string out = "command: " + rep.command + "\n";
  for (const auto& [key, value] : rep.params.items()) {
    out += "param " + key + " = ";
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += "\n";
  }
  out += "status: " + rep.status + "\n";
  if (!rep.text_lines.empty()) out += "\n";
  for (const std::string& line : rep.text_lines) out += line + "\n";
  out += "\ntiming_ms: " + std::to_string(rep.timing_ms) + "\n";
  return out;
}

}  // namespace ts
