#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace ts {

using Json = nlohmann::ordered_json;

// One finished run of a subcommand. The JSON rendering is stable across runs
// and across --jobs settings except for timing_ms.
struct Report {
  std::string command;
  Json params = Json::object();  // raw parameter echo, keys in sorted order
  std::string status = "info";   // "pass" | "fail" | "info"
  Json results = Json::array();
  std::vector<std::string> text_lines;  // human rendering, one per line
  long timing_ms = 0;
};

std::string render_json(const Report& rep);
std::string render_text(const Report& rep);

}  // namespace ts
